#include <algorithm>
#include <bit>
#include <deque>
#include <unordered_map>
#include <unordered_set>

#include "resproof/error.hpp"
#include "resproof/sat.hpp"

namespace resproof {

namespace {

// Bit-parallel truth-table evaluation: each pass covers 2^block_vars
// assignments, one bit per assignment.
class TruthTable {
 public:
  TruthTable(const std::vector<Formula>& roots) {
    std::vector<Var> vars;
    for (const auto& r : roots) {
      auto v = r.variables();
      vars.insert(vars.end(), v.begin(), v.end());
    }
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    if (vars.size() > kOracleMaxVars)
      throw Error(ErrorCode::kTooManyVariables,
                  std::to_string(vars.size()) + " variables exceed the oracle limit of " +
                      std::to_string(kOracleMaxVars));
    for (std::size_t i = 0; i < vars.size(); ++i) index_[vars[i]] = i;
    num_vars_ = vars.size();
    block_vars_ = std::min<std::size_t>(num_vars_, 12);
    words_ = block_vars_ <= 6 ? 1 : (std::size_t{1} << (block_vars_ - 6));
    tail_mask_ = block_vars_ >= 6 ? ~0ull : ((1ull << (std::size_t{1} << block_vars_)) - 1);

    // Post-order over the shared DAG.
    std::unordered_map<const void*, std::size_t> slot;
    for (const auto& r : roots) {
      std::vector<std::pair<Formula, bool>> stack{{r, false}};
      while (!stack.empty()) {
        auto [f, expanded] = stack.back();
        stack.pop_back();
        if (slot.count(f.id())) continue;
        if (!expanded) {
          stack.emplace_back(f, true);
          for (const auto& c : f.children())
            if (!slot.count(c.id())) stack.emplace_back(c, false);
          continue;
        }
        slot[f.id()] = order_.size();
        order_.push_back(f);
      }
      root_slots_.push_back(slot.at(r.id()));
    }
    for (const auto& f : order_) {
      std::vector<std::size_t> kids;
      for (const auto& c : f.children()) kids.push_back(slot.at(c.id()));
      kids_.push_back(std::move(kids));
    }
    values_.assign(order_.size() * words_, 0);
  }

  std::size_t blocks() const { return std::size_t{1} << (num_vars_ - block_vars_); }

  void evaluate(std::size_t block) {
    for (std::size_t k = 0; k < order_.size(); ++k) {
      std::uint64_t* out = &values_[k * words_];
      const Formula& f = order_[k];
      switch (f.kind()) {
        case Formula::Kind::kTrue: std::fill(out, out + words_, ~0ull); break;
        case Formula::Kind::kFalse: std::fill(out, out + words_, 0ull); break;
        case Formula::Kind::kLiteral: {
          std::size_t i = index_.at(f.lit().var());
          for (std::size_t w = 0; w < words_; ++w) {
            std::uint64_t x = variable_word(i, w, block);
            out[w] = f.lit().negative() ? ~x : x;
          }
          break;
        }
        case Formula::Kind::kAnd:
        case Formula::Kind::kOr: {
          bool is_and = f.kind() == Formula::Kind::kAnd;
          std::fill(out, out + words_, is_and ? ~0ull : 0ull);
          for (std::size_t c : kids_[k]) {
            const std::uint64_t* in = &values_[c * words_];
            for (std::size_t w = 0; w < words_; ++w) out[w] = is_and ? out[w] & in[w] : out[w] | in[w];
          }
          break;
        }
      }
    }
  }

  const std::uint64_t* root(std::size_t r) const { return &values_[root_slots_[r] * words_]; }
  std::size_t words() const { return words_; }
  std::uint64_t tail_mask() const { return tail_mask_; }

 private:
  std::uint64_t variable_word(std::size_t i, std::size_t w, std::size_t block) const {
    static constexpr std::uint64_t kPatterns[6] = {
        0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
        0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull};
    if (i < 6) return kPatterns[i];
    if (i < block_vars_) return ((w >> (i - 6)) & 1u) ? ~0ull : 0ull;
    return ((block >> (i - block_vars_)) & 1u) ? ~0ull : 0ull;
  }

  std::unordered_map<Var, std::size_t> index_;
  std::size_t num_vars_ = 0, block_vars_ = 0, words_ = 1;
  std::uint64_t tail_mask_ = ~0ull;
  std::vector<Formula> order_;
  std::vector<std::vector<std::size_t>> kids_;
  std::vector<std::size_t> root_slots_;
  std::vector<std::uint64_t> values_;
};

}  // namespace

bool implies_oracle(const Formula& premise, const Formula& conclusion) {
  TruthTable table({premise, conclusion});
  for (std::size_t b = 0; b < table.blocks(); ++b) {
    table.evaluate(b);
    const std::uint64_t* p = table.root(0);
    const std::uint64_t* c = table.root(1);
    for (std::size_t w = 0; w < table.words(); ++w)
      if ((p[w] & ~c[w] & table.tail_mask()) != 0) return false;
  }
  return true;
}

namespace {

struct MaskClause {
  std::uint64_t pos = 0, neg = 0;
  std::int64_t parent_pos = -1, parent_neg = -1;
  Var pivot = 0;
};

bool mask_subsumes(const MaskClause& a, const MaskClause& b) {
  return (a.pos & ~b.pos) == 0 && (a.neg & ~b.neg) == 0;
}

Clause to_clause(const MaskClause& m) {
  std::vector<Literal> lits;
  for (std::uint64_t x = m.pos; x; x &= x - 1) lits.emplace_back(std::countr_zero(x) + 1, false);
  for (std::uint64_t x = m.neg; x; x &= x - 1) lits.emplace_back(std::countr_zero(x) + 1, true);
  return Clause::from_literals(std::move(lits));
}

}  // namespace

std::optional<ResolutionProof> saturation_refute(const CnfFormula& cnf, std::size_t clause_limit) {
  std::vector<MaskClause> all;
  for (const auto& c : cnf.clauses) {
    MaskClause m;
    for (auto l : c.literals()) {
      if (l.var() > 64)
        throw Error(ErrorCode::kResourceLimit, "saturation supports at most 64 variables");
      (l.negative() ? m.neg : m.pos) |= 1ull << (l.var() - 1);
    }
    all.push_back(m);
  }
  std::vector<std::size_t> active;
  std::vector<char> is_active;
  std::deque<std::size_t> passive;
  for (std::size_t i = 0; i < all.size(); ++i) passive.push_back(i);
  is_active.assign(all.size(), 0);

  auto subsumed_by_active = [&](const MaskClause& m) {
    for (std::size_t a : active)
      if (is_active[a] && mask_subsumes(all[a], m)) return true;
    return false;
  };

  std::optional<std::size_t> empty;
  for (std::size_t i = 0; i < all.size(); ++i)
    if (all[i].pos == 0 && all[i].neg == 0) {
      empty = i;
      break;
    }
  while (!empty && !passive.empty()) {
    std::size_t g = passive.front();
    passive.pop_front();
    if (subsumed_by_active(all[g])) continue;
    for (std::size_t a : active)
      if (is_active[a] && mask_subsumes(all[g], all[a])) is_active[a] = 0;
    active.erase(std::remove_if(active.begin(), active.end(),
                                [&](std::size_t a) { return !is_active[a]; }),
                 active.end());
    is_active[g] = 1;
    active.push_back(g);
    std::size_t count = active.size();
    for (std::size_t k = 0; k < count && !empty; ++k) {
      std::size_t a = active[k];
      if (a == g) continue;
      const MaskClause& x = all[g];
      const MaskClause& y = all[a];
      std::uint64_t clash_pos = x.pos & y.neg;
      std::uint64_t clash_neg = x.neg & y.pos;
      std::uint64_t clash = clash_pos | clash_neg;
      if (std::popcount(clash) != 1) continue;
      MaskClause r;
      r.pos = (x.pos | y.pos) & ~clash;
      r.neg = (x.neg | y.neg) & ~clash;
      r.pivot = static_cast<Var>(std::countr_zero(clash) + 1);
      bool x_has_pos = clash_pos != 0;
      r.parent_pos = static_cast<std::int64_t>(x_has_pos ? g : a);
      r.parent_neg = static_cast<std::int64_t>(x_has_pos ? a : g);
      if (subsumed_by_active(r)) continue;
      all.push_back(r);
      is_active.push_back(0);
      if (all.size() > clause_limit)
        throw Error(ErrorCode::kResourceLimit, "saturation clause limit reached");
      if (r.pos == 0 && r.neg == 0) {
        empty = all.size() - 1;
        break;
      }
      passive.push_back(all.size() - 1);
    }
  }
  if (!empty) return std::nullopt;

  std::vector<char> needed(all.size(), 0);
  needed[*empty] = 1;
  for (std::size_t i = all.size(); i-- > 0;) {
    if (!needed[i] || all[i].parent_pos < 0) continue;
    needed[all[i].parent_pos] = 1;
    needed[all[i].parent_neg] = 1;
  }
  ResolutionProof proof;
  std::vector<NodeId> node(all.size(), kNoNode);
  for (std::size_t i = 0; i <= *empty; ++i) {
    if (!needed[i]) continue;
    if (all[i].parent_pos < 0) {
      node[i] = proof.add_leaf(to_clause(all[i]));
    } else {
      node[i] = proof.add_resolvent(node[all[i].parent_pos], node[all[i].parent_neg], all[i].pivot);
    }
  }
  proof.set_root(node[*empty]);
  return proof;
}

}  // namespace resproof
