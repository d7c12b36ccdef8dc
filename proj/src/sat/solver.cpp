#include <algorithm>
#include <cmath>

#include "resproof/error.hpp"
#include "resproof/sat.hpp"

namespace resproof {

namespace {

constexpr std::uint32_t kNoReason = UINT32_MAX;

// Binary max-heap over variables keyed by activity.
class VarHeap {
 public:
  explicit VarHeap(const std::vector<double>& act) : act_(act) {}

  void reserve(std::size_t n) { pos_.assign(n, -1); }
  bool contains(Var v) const { return pos_[v] >= 0; }
  bool empty() const { return heap_.empty(); }

  void insert(Var v) {
    if (contains(v)) return;
    pos_[v] = static_cast<int>(heap_.size());
    heap_.push_back(v);
    up(pos_[v]);
  }
  void bumped(Var v) {
    if (contains(v)) up(pos_[v]);
  }
  Var pop() {
    Var top = heap_.front();
    heap_.front() = heap_.back();
    pos_[heap_.front()] = 0;
    heap_.pop_back();
    pos_[top] = -1;
    if (!heap_.empty()) down(0);
    return top;
  }

 private:
  bool less(Var a, Var b) const { return act_[a] > act_[b] || (act_[a] == act_[b] && a < b); }
  void up(int i) {
    Var v = heap_[i];
    while (i > 0) {
      int p = (i - 1) / 2;
      if (!less(v, heap_[p])) break;
      heap_[i] = heap_[p];
      pos_[heap_[i]] = i;
      i = p;
    }
    heap_[i] = v;
    pos_[v] = i;
  }
  void down(int i) {
    Var v = heap_[i];
    int n = static_cast<int>(heap_.size());
    for (;;) {
      int c = 2 * i + 1;
      if (c >= n) break;
      if (c + 1 < n && less(heap_[c + 1], heap_[c])) ++c;
      if (!less(heap_[c], v)) break;
      heap_[i] = heap_[c];
      pos_[heap_[i]] = i;
      i = c;
    }
    heap_[i] = v;
    pos_[v] = i;
  }

  const std::vector<double>& act_;
  std::vector<Var> heap_;
  std::vector<int> pos_;
};

struct StoredClause {
  std::vector<Literal> lits;
  // Learned clauses: antecedent clause indices, resolved left to right on
  // the given pivots.
  std::vector<std::uint32_t> ants;
  std::vector<Var> pivots;
};

double luby(double y, int x) {
  int size = 1, seq = 0;
  while (size < x + 1) {
    ++seq;
    size = 2 * size + 1;
  }
  while (size - 1 != x) {
    size = (size - 1) >> 1;
    --seq;
    x = x % size;
  }
  return std::pow(y, seq);
}

class Solver {
 public:
  Solver(const CnfFormula& cnf, const SolverOptions& opts)
      : cnf_(cnf), opts_(opts), heap_(activity_), rng_(opts.seed) {
    nvars_ = cnf.num_vars;
    for (const auto& c : cnf.clauses)
      nvars_ = std::max<std::size_t>(nvars_, c.max_var());
    value_.assign(nvars_ + 1, -1);
    level_.assign(nvars_ + 1, 0);
    reason_.assign(nvars_ + 1, kNoReason);
    trail_pos_.assign(nvars_ + 1, 0);
    seen_.assign(nvars_ + 1, 0);
    phase_.assign(nvars_ + 1, 0);
    activity_.assign(nvars_ + 1, 0.0);
    watches_.assign(2 * (nvars_ + 1), {});
    heap_.reserve(nvars_ + 1);
    std::uniform_real_distribution<double> jitter(0.0, 1e-5);
    for (Var v = 1; v <= nvars_; ++v) {
      activity_[v] = jitter(rng_);
      heap_.insert(v);
    }
  }

  SolveResult run() {
    auto start = std::chrono::steady_clock::now();
    SolveResult result;
    bool unsat = load();
    int restart_index = 0;
    while (!unsat) {
      std::uint64_t budget =
          static_cast<std::uint64_t>(luby(2.0, restart_index++) * 100.0);
      auto status = search(budget, start);
      if (status == 1) break;
      if (status == 0) {
        unsat = true;
        break;
      }
      ++stats_.restarts;
    }
    result.stats = stats_;
    if (unsat) {
      result.status = SolveStatus::kUnsat;
      result.proof = build_proof();
    } else {
      result.status = SolveStatus::kSat;
      result.model.assign(nvars_ + 1, false);
      for (Var v = 1; v <= nvars_; ++v) result.model[v] = value_[v] == 1;
    }
    result.time = std::chrono::duration_cast<std::chrono::microseconds>(
        std::chrono::steady_clock::now() - start);
    return result;
  }

 private:
  // -1 unassigned, 0 false, 1 true
  int value(Literal l) const {
    int v = value_[l.var()];
    if (v < 0) return -1;
    return l.negative() ? 1 - v : v;
  }
  int decision_level() const { return static_cast<int>(trail_lim_.size()); }

  void assign(Literal l, std::uint32_t reason) {
    value_[l.var()] = l.negative() ? 0 : 1;
    level_[l.var()] = decision_level();
    reason_[l.var()] = reason;
    trail_pos_[l.var()] = static_cast<std::uint32_t>(trail_.size());
    trail_.push_back(l);
  }

  void attach(std::uint32_t ci) {
    const auto& lits = clauses_[ci].lits;
    watches_[(~lits[0]).code()].push_back(ci);
    watches_[(~lits[1]).code()].push_back(ci);
  }

  // Returns true when the input is refuted at level 0.
  bool load() {
    for (const auto& c : cnf_.clauses) {
      StoredClause sc;
      sc.lits.assign(c.literals().begin(), c.literals().end());
      clauses_.push_back(std::move(sc));
    }
    num_input_ = static_cast<std::uint32_t>(clauses_.size());
    for (std::uint32_t ci = 0; ci < num_input_; ++ci) {
      if (clauses_[ci].lits.empty()) {
        final_chain_ = {ci};
        final_pivots_.clear();
        return true;
      }
    }
    for (std::uint32_t ci = 0; ci < num_input_; ++ci)
      if (clauses_[ci].lits.size() >= 2) attach(ci);
    for (std::uint32_t ci = 0; ci < num_input_; ++ci) {
      if (clauses_[ci].lits.size() != 1) continue;
      Literal l = clauses_[ci].lits[0];
      int val = value(l);
      if (val == 0) {
        refute_at_root(ci);
        return true;
      }
      if (val < 0) assign(l, ci);
    }
    std::uint32_t confl = propagate();
    if (confl != kNoReason) {
      refute_at_root(confl);
      return true;
    }
    return false;
  }

  std::uint32_t propagate() {
    while (qhead_ < trail_.size()) {
      Literal p = trail_[qhead_++];  // p is true; clauses watching ~p
      ++stats_.propagations;
      auto& ws = watches_[p.code()];
      std::size_t i = 0, j = 0;
      Literal false_lit = ~p;
      while (i < ws.size()) {
        std::uint32_t ci = ws[i++];
        auto& lits = clauses_[ci].lits;
        if (lits[0] == false_lit) std::swap(lits[0], lits[1]);
        if (value(lits[0]) == 1) {
          ws[j++] = ci;
          continue;
        }
        bool moved = false;
        for (std::size_t k = 2; k < lits.size(); ++k) {
          if (value(lits[k]) != 0) {
            std::swap(lits[1], lits[k]);
            watches_[(~lits[1]).code()].push_back(ci);
            moved = true;
            break;
          }
        }
        if (moved) continue;
        ws[j++] = ci;
        if (value(lits[0]) == 0) {
          while (i < ws.size()) ws[j++] = ws[i++];
          ws.resize(j);
          return ci;
        }
        assign(lits[0], ci);
      }
      ws.resize(j);
    }
    return kNoReason;
  }

  // Resolves away level-0 literals of the marked variables using their
  // reasons, latest first. Appends to the chain.
  void eliminate_root_level(std::vector<std::uint32_t>& ants, std::vector<Var>& pivots,
                            std::vector<Var>& marked) {
    if (marked.empty()) return;
    std::sort(marked.begin(), marked.end(),
              [&](Var a, Var b) { return trail_pos_[a] > trail_pos_[b]; });
    std::vector<char> mark(nvars_ + 1, 0);
    for (Var v : marked) mark[v] = 1;
    std::size_t top = trail_pos_[marked.front()] + 1;
    for (std::size_t i = top; i-- > 0;) {
      Var v = trail_[i].var();
      if (!mark[v]) continue;
      std::uint32_t r = reason_[v];
      ants.push_back(r);
      pivots.push_back(v);
      for (Literal q : clauses_[r].lits)
        if (q.var() != v) mark[q.var()] = 1;
    }
  }

  void refute_at_root(std::uint32_t confl) {
    final_chain_ = {confl};
    final_pivots_.clear();
    std::vector<Var> marked;
    for (Literal q : clauses_[confl].lits) marked.push_back(q.var());
    eliminate_root_level(final_chain_, final_pivots_, marked);
  }

  void bump(Var v) {
    activity_[v] += var_inc_;
    if (activity_[v] > 1e100) {
      for (auto& a : activity_) a *= 1e-100;
      var_inc_ *= 1e-100;
    }
    heap_.bumped(v);
  }

  // First-UIP learning. Returns the new clause index.
  std::uint32_t analyze(std::uint32_t confl, int& backjump) {
    StoredClause learnt;
    learnt.lits.push_back(Literal());  // slot for the asserting literal
    learnt.ants.push_back(confl);
    std::vector<Var> zero;
    std::vector<Var> touched;
    int path = 0;
    Literal p;
    bool have_p = false;
    std::size_t idx = trail_.size();
    for (;;) {
      for (Literal q : clauses_[confl].lits) {
        if (have_p && q.var() == p.var()) continue;
        Var v = q.var();
        if (seen_[v]) continue;
        seen_[v] = 1;
        touched.push_back(v);
        if (level_[v] == decision_level()) {
          bump(v);
          ++path;
        } else if (level_[v] > 0) {
          bump(v);
          learnt.lits.push_back(q);
        } else {
          zero.push_back(v);
        }
      }
      do {
        --idx;
      } while (!seen_[trail_[idx].var()] || level_[trail_[idx].var()] != decision_level());
      p = trail_[idx];
      have_p = true;
      seen_[p.var()] = 0;
      --path;
      if (path == 0) break;
      confl = reason_[p.var()];
      learnt.ants.push_back(confl);
      learnt.pivots.push_back(p.var());
    }
    learnt.lits[0] = ~p;
    for (Var v : touched) seen_[v] = 0;
    eliminate_root_level(learnt.ants, learnt.pivots, zero);

    backjump = 0;
    if (learnt.lits.size() > 1) {
      std::size_t best = 1;
      for (std::size_t k = 2; k < learnt.lits.size(); ++k)
        if (level_[learnt.lits[k].var()] > level_[learnt.lits[best].var()]) best = k;
      std::swap(learnt.lits[1], learnt.lits[best]);
      backjump = level_[learnt.lits[1].var()];
    }
    clauses_.push_back(std::move(learnt));
    ++stats_.learned;
    var_inc_ /= 0.95;
    return static_cast<std::uint32_t>(clauses_.size() - 1);
  }

  void backtrack(int level) {
    if (decision_level() <= level) return;
    std::size_t lim = trail_lim_[level];
    for (std::size_t i = trail_.size(); i-- > lim;) {
      Var v = trail_[i].var();
      phase_[v] = static_cast<char>(value_[v]);
      value_[v] = -1;
      reason_[v] = kNoReason;
      heap_.insert(v);
    }
    trail_.resize(lim);
    trail_lim_.resize(level);
    qhead_ = std::min(qhead_, trail_.size());
  }

  // 0 unsat, 1 sat, 2 restart
  int search(std::uint64_t budget, std::chrono::steady_clock::time_point start) {
    std::uint64_t local = 0;
    for (;;) {
      std::uint32_t confl = propagate();
      if (confl != kNoReason) {
        ++stats_.conflicts;
        ++local;
        if (opts_.conflict_limit && stats_.conflicts > opts_.conflict_limit)
          throw Error(ErrorCode::kResourceLimit, "conflict limit reached");
        if ((stats_.conflicts & 255) == 0 && opts_.time_limit.count() > 0 &&
            std::chrono::steady_clock::now() - start > opts_.time_limit)
          throw Error(ErrorCode::kResourceLimit, "time limit reached");
        if (decision_level() == 0) {
          refute_at_root(confl);
          return 0;
        }
        int backjump = 0;
        std::uint32_t ci = analyze(confl, backjump);
        backtrack(backjump);
        if (clauses_[ci].lits.size() >= 2) attach(ci);
        assign(clauses_[ci].lits[0], ci);
        continue;
      }
      if (local >= budget) {
        backtrack(0);
        return 2;
      }
      Var next = 0;
      while (!heap_.empty()) {
        Var v = heap_.pop();
        if (value_[v] < 0) {
          next = v;
          break;
        }
      }
      if (next == 0) return 1;
      ++stats_.decisions;
      trail_lim_.push_back(trail_.size());
      assign(Literal(next, phase_[next] != 1), kNoReason);
    }
  }

  ResolutionProof build_proof() {
    std::size_t total = clauses_.size();
    std::vector<char> needed(total, 0);
    for (auto a : final_chain_) needed[a] = 1;
    for (std::size_t i = total; i-- > num_input_;)
      if (needed[i])
        for (auto a : clauses_[i].ants) needed[a] = 1;
    ResolutionProof proof;
    std::vector<NodeId> node(total, kNoNode);
    auto expand = [&](const std::vector<std::uint32_t>& ants, const std::vector<Var>& pivots) {
      NodeId acc = node[ants[0]];
      for (std::size_t k = 1; k < ants.size(); ++k)
        acc = proof.add_resolvent(acc, node[ants[k]], pivots[k - 1]);
      return acc;
    };
    for (std::size_t i = 0; i < total; ++i) {
      if (!needed[i]) continue;
      if (i < num_input_) {
        node[i] = proof.add_leaf(cnf_.clauses[i]);
      } else {
        node[i] = expand(clauses_[i].ants, clauses_[i].pivots);
      }
    }
    proof.set_root(expand(final_chain_, final_pivots_));
    return proof;
  }

  const CnfFormula& cnf_;
  SolverOptions opts_;
  std::size_t nvars_ = 0;
  std::vector<StoredClause> clauses_;
  std::uint32_t num_input_ = 0;
  std::vector<std::vector<std::uint32_t>> watches_;
  std::vector<int> value_;
  std::vector<int> level_;
  std::vector<std::uint32_t> reason_;
  std::vector<std::uint32_t> trail_pos_;
  std::vector<char> seen_;
  std::vector<char> phase_;
  std::vector<double> activity_;
  double var_inc_ = 1.0;
  VarHeap heap_;
  std::vector<Literal> trail_;
  std::vector<std::size_t> trail_lim_;
  std::size_t qhead_ = 0;
  std::vector<std::uint32_t> final_chain_;
  std::vector<Var> final_pivots_;
  SolverStats stats_;
  std::mt19937_64 rng_;
};

}  // namespace

SolveResult solve_with_proof(const CnfFormula& cnf, const SolverOptions& options) {
  Solver solver(cnf, options);
  return solver.run();
}

bool satisfies(const std::vector<bool>& model, const CnfFormula& cnf) {
  for (const auto& c : cnf.clauses) {
    bool sat = false;
    for (auto l : c.literals()) {
      if (l.var() < model.size() && model[l.var()] == l.positive()) {
        sat = true;
        break;
      }
    }
    if (!sat) return false;
  }
  return true;
}

CnfFormula random_kcnf(std::mt19937_64& rng, std::size_t num_vars, std::size_t num_clauses,
                       std::size_t k) {
  if (k > num_vars) throw Error(ErrorCode::kInvalidArgument, "clause width exceeds variables");
  CnfFormula cnf;
  cnf.num_vars = num_vars;
  std::uniform_int_distribution<Var> pick(1, static_cast<Var>(num_vars));
  std::bernoulli_distribution sign(0.5);
  for (std::size_t i = 0; i < num_clauses; ++i) {
    std::vector<Literal> lits;
    while (lits.size() < k) {
      Var v = pick(rng);
      bool dup = std::any_of(lits.begin(), lits.end(), [v](Literal l) { return l.var() == v; });
      if (!dup) lits.emplace_back(v, sign(rng));
    }
    cnf.clauses.push_back(Clause::from_literals(std::move(lits)));
    cnf.origin.push_back(i + 1);
  }
  return cnf;
}

}  // namespace resproof
