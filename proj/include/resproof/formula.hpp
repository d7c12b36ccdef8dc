#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "resproof/clause.hpp"

namespace resproof {

// Immutable boolean formula over literals with shared subterms. The
// factories flatten nested connectives of the same kind and fold constants,
// so an AND never has a TRUE child and an OR never has a FALSE child.
class Formula {
 public:
  enum class Kind : std::uint8_t { kTrue, kFalse, kLiteral, kAnd, kOr };

  Formula();  // TRUE
  static Formula truth();
  static Formula falsity();
  static Formula literal(Literal l);
  static Formula conj(std::vector<Formula> parts);
  static Formula disj(std::vector<Formula> parts);
  static Formula conj(Formula a, Formula b) { return conj(std::vector<Formula>{a, b}); }
  static Formula disj(Formula a, Formula b) { return disj(std::vector<Formula>{a, b}); }
  // Negation pushed down to the literals.
  static Formula negation(const Formula& f);
  static Formula from_clause(const Clause& c);
  static Formula from_clauses(const std::vector<Clause>& clauses);

  Kind kind() const;
  Literal lit() const;
  const std::vector<Formula>& children() const;
  // Stable identity of the shared node, for memoisation.
  const void* id() const { return node_.get(); }

  bool is_true() const { return kind() == Kind::kTrue; }
  bool is_false() const { return kind() == Kind::kFalse; }

  std::vector<Var> variables() const;
  // Number of distinct shared nodes.
  std::size_t dag_size() const;
  // Prefix form: and(or(1,-2),3), true, false.
  std::string to_string() const;

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Formula connective(Kind kind, std::vector<Formula> parts);

  std::shared_ptr<const Node> node_;
};

bool structurally_equal(const Formula& a, const Formula& b);

enum class FormulaShape { kConstant, kLiteral, kClause, kCube, kCnf, kDnf, kOther };

FormulaShape formula_shape(const Formula& f);
const char* shape_name(FormulaShape shape);
// Constants, literals, clauses and cubes count as both.
bool is_cnf_shaped(FormulaShape shape);
bool is_dnf_shaped(FormulaShape shape);

// Clauses of a CNF-shaped formula; empty optional otherwise. TRUE gives no
// clauses, FALSE gives the empty clause.
std::optional<std::vector<Clause>> formula_to_clauses(const Formula& f);

}  // namespace resproof
