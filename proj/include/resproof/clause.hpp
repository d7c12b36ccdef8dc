#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "resproof/literal.hpp"

namespace resproof {

// A set of literals, kept sorted by literal code so that every variable
// occupies at most one slot. The empty clause is the contradiction.
class Clause {
 public:
  Clause() = default;
  // DIMACS-style literals; throws on 0 or on a tautology.
  Clause(std::initializer_list<int> dimacs);

  // Sorts and deduplicates. Throws Error(kTautologicalClause) if a variable
  // occurs in both polarities.
  static Clause from_literals(std::vector<Literal> lits);

  std::span<const Literal> literals() const { return lits_; }
  std::size_t size() const { return lits_.size(); }
  bool empty() const { return lits_.empty(); }

  bool contains(Literal l) const;
  bool contains_var(Var v) const { return polarity_of(v).has_value(); }
  // The literal of v in this clause, if any.
  std::optional<Literal> polarity_of(Var v) const;
  Var max_var() const { return lits_.empty() ? 0 : lits_.back().var(); }

  std::vector<int> to_dimacs() const;
  // Space separated DIMACS literals; "[]" for the empty clause.
  std::string to_string() const;

  friend bool operator==(const Clause&, const Clause&) = default;
  friend auto operator<=>(const Clause& a, const Clause& b) {
    return a.lits_ <=> b.lits_;
  }

 private:
  std::vector<Literal> lits_;
};

// Resolvent of pos_clause (containing +pivot) and neg_clause (containing
// -pivot). Throws kMissingPivot or kTautologicalResolvent.
Clause resolve(const Clause& pos_clause, const Clause& neg_clause, Var pivot);

// The unique variable with opposite polarities in a and b. Throws kNoPivot
// or kAmbiguousPivot.
Var find_pivot(const Clause& a, const Clause& b);

// literals(a) is a subset of literals(b).
bool subsumes(const Clause& a, const Clause& b);

// Literals of `a` that are not in `b`.
std::vector<Literal> difference(const Clause& a, const Clause& b);

}  // namespace resproof

template <>
struct std::hash<resproof::Clause> {
  std::size_t operator()(const resproof::Clause& c) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (auto l : c.literals()) h = (h ^ l.code()) * 0x100000001b3ull;
    return h;
  }
};
