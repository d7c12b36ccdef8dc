#include "resproof/clause.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>

#include "resproof/error.hpp"

namespace resproof {

Literal Literal::from_dimacs(int value) {
  if (value == 0 || value == std::numeric_limits<int>::min())
    throw Error(ErrorCode::kInvalidLiteral,
                "literal " + std::to_string(value) + " is not a valid literal");
  return Literal(static_cast<Var>(std::abs(value)), value < 0);
}

int Literal::to_dimacs() const {
  int v = static_cast<int>(var());
  return negative() ? -v : v;
}

Clause::Clause(std::initializer_list<int> dimacs) {
  std::vector<Literal> lits;
  lits.reserve(dimacs.size());
  for (int d : dimacs) lits.push_back(Literal::from_dimacs(d));
  *this = from_literals(std::move(lits));
}

Clause Clause::from_literals(std::vector<Literal> lits) {
  std::sort(lits.begin(), lits.end());
  lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
  for (std::size_t i = 1; i < lits.size(); ++i) {
    if (lits[i].var() == lits[i - 1].var())
      throw Error(ErrorCode::kTautologicalClause,
                  "variable " + std::to_string(lits[i].var()) +
                      " occurs in both polarities");
  }
  Clause c;
  c.lits_ = std::move(lits);
  return c;
}

std::optional<Literal> Clause::polarity_of(Var v) const {
  auto it = std::lower_bound(lits_.begin(), lits_.end(), Literal(v, false));
  if (it != lits_.end() && it->var() == v) return *it;
  return std::nullopt;
}

bool Clause::contains(Literal l) const {
  return std::binary_search(lits_.begin(), lits_.end(), l);
}

std::vector<int> Clause::to_dimacs() const {
  std::vector<int> out;
  out.reserve(lits_.size());
  for (auto l : lits_) out.push_back(l.to_dimacs());
  return out;
}

std::string Clause::to_string() const {
  if (lits_.empty()) return "[]";
  std::string out;
  for (auto l : lits_) {
    if (!out.empty()) out += ' ';
    out += std::to_string(l.to_dimacs());
  }
  return out;
}

Clause resolve(const Clause& pos_clause, const Clause& neg_clause, Var pivot) {
  if (!pos_clause.contains(pos(pivot)) || !neg_clause.contains(neg(pivot)))
    throw Error(ErrorCode::kMissingPivot,
                "pivot " + std::to_string(pivot) + " not present in {" +
                    pos_clause.to_string() + "} / {" +
                    neg_clause.to_string() + "}");
  auto a = pos_clause.literals();
  auto b = neg_clause.literals();
  std::vector<Literal> out;
  out.reserve(a.size() + b.size() - 2);
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (i < a.size() && a[i].var() == pivot) { ++i; continue; }
    if (j < b.size() && b[j].var() == pivot) { ++j; continue; }
    if (j == b.size() || (i < a.size() && a[i] < b[j])) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j] < a[i]) {
      out.push_back(b[j++]);
    } else {
      out.push_back(a[i]);
      ++i;
      ++j;
    }
  }
  for (std::size_t k = 1; k < out.size(); ++k) {
    if (out[k].var() == out[k - 1].var())
      throw Error(ErrorCode::kTautologicalResolvent,
                  "resolvent on " + std::to_string(pivot) +
                      " clashes on variable " + std::to_string(out[k].var()));
  }
  return Clause::from_literals(std::move(out));
}

Var find_pivot(const Clause& a, const Clause& b) {
  std::optional<Var> found;
  auto la = a.literals();
  auto lb = b.literals();
  std::size_t i = 0, j = 0;
  while (i < la.size() && j < lb.size()) {
    if (la[i].var() < lb[j].var()) {
      ++i;
    } else if (lb[j].var() < la[i].var()) {
      ++j;
    } else {
      if (la[i] != lb[j]) {
        if (found)
          throw Error(ErrorCode::kAmbiguousPivot,
                      "{" + a.to_string() + "} and {" + b.to_string() +
                          "} clash on more than one variable");
        found = la[i].var();
      }
      ++i;
      ++j;
    }
  }
  if (!found)
    throw Error(ErrorCode::kNoPivot, "{" + a.to_string() + "} and {" +
                                         b.to_string() + "} do not clash");
  return *found;
}

bool subsumes(const Clause& a, const Clause& b) {
  if (a.size() > b.size()) return false;
  return std::includes(b.literals().begin(), b.literals().end(),
                       a.literals().begin(), a.literals().end());
}

std::vector<Literal> difference(const Clause& a, const Clause& b) {
  std::vector<Literal> out;
  std::set_difference(a.literals().begin(), a.literals().end(),
                      b.literals().begin(), b.literals().end(),
                      std::back_inserter(out));
  return out;
}

}  // namespace resproof
