#include "resproof/formula.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "resproof/error.hpp"

namespace resproof {

struct Formula::Node {
  Kind kind = Kind::kTrue;
  Literal lit;
  std::vector<Formula> children;
};

Formula::Formula() : Formula(truth()) {}

Formula Formula::truth() {
  static const auto node = std::make_shared<const Node>(Node{Kind::kTrue, {}, {}});
  return Formula(node);
}

Formula Formula::falsity() {
  static const auto node = std::make_shared<const Node>(Node{Kind::kFalse, {}, {}});
  return Formula(node);
}

Formula Formula::literal(Literal l) {
  return Formula(std::make_shared<const Node>(Node{Kind::kLiteral, l, {}}));
}

Formula Formula::connective(Kind kind, std::vector<Formula> parts) {
  const Kind absorbing = kind == Kind::kAnd ? Kind::kFalse : Kind::kTrue;
  const Kind neutral = kind == Kind::kAnd ? Kind::kTrue : Kind::kFalse;
  std::vector<Formula> flat;
  flat.reserve(parts.size());
  for (auto& p : parts) {
    Kind k = p.kind();
    if (k == absorbing) return p;
    if (k == neutral) continue;
    if (k == kind) {
      for (const auto& c : p.children()) flat.push_back(c);
    } else {
      flat.push_back(std::move(p));
    }
  }
  if (flat.empty()) return kind == Kind::kAnd ? truth() : falsity();
  if (flat.size() == 1) return flat.front();
  return Formula(std::make_shared<const Node>(Node{kind, {}, std::move(flat)}));
}

Formula Formula::conj(std::vector<Formula> parts) {
  return connective(Kind::kAnd, std::move(parts));
}

Formula Formula::disj(std::vector<Formula> parts) {
  return connective(Kind::kOr, std::move(parts));
}

Formula Formula::negation(const Formula& f) {
  std::unordered_map<const void*, Formula> memo;
  auto rec = [&](auto&& self, const Formula& g) -> Formula {
    auto it = memo.find(g.id());
    if (it != memo.end()) return it->second;
    Formula out;
    switch (g.kind()) {
      case Kind::kTrue: out = falsity(); break;
      case Kind::kFalse: out = truth(); break;
      case Kind::kLiteral: out = literal(~g.lit()); break;
      case Kind::kAnd:
      case Kind::kOr: {
        std::vector<Formula> parts;
        parts.reserve(g.children().size());
        for (const auto& c : g.children()) parts.push_back(self(self, c));
        out = g.kind() == Kind::kAnd ? disj(std::move(parts)) : conj(std::move(parts));
        break;
      }
    }
    memo.emplace(g.id(), out);
    return out;
  };
  return rec(rec, f);
}

Formula Formula::from_clause(const Clause& c) {
  std::vector<Formula> parts;
  for (auto l : c.literals()) parts.push_back(literal(l));
  return disj(std::move(parts));
}

Formula Formula::from_clauses(const std::vector<Clause>& clauses) {
  std::vector<Formula> parts;
  parts.reserve(clauses.size());
  for (const auto& c : clauses) parts.push_back(from_clause(c));
  return conj(std::move(parts));
}

Formula::Kind Formula::kind() const { return node_->kind; }
Literal Formula::lit() const { return node_->lit; }
const std::vector<Formula>& Formula::children() const { return node_->children; }

std::vector<Var> Formula::variables() const {
  std::unordered_set<const void*> seen;
  std::vector<Var> vars;
  std::vector<Formula> work{*this};
  while (!work.empty()) {
    Formula g = work.back();
    work.pop_back();
    if (!seen.insert(g.id()).second) continue;
    if (g.kind() == Kind::kLiteral) vars.push_back(g.lit().var());
    for (const auto& c : g.children()) work.push_back(c);
  }
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

std::size_t Formula::dag_size() const {
  std::unordered_set<const void*> seen;
  std::vector<Formula> work{*this};
  while (!work.empty()) {
    Formula g = work.back();
    work.pop_back();
    if (!seen.insert(g.id()).second) continue;
    for (const auto& c : g.children()) work.push_back(c);
  }
  return seen.size();
}

std::string Formula::to_string() const {
  switch (kind()) {
    case Kind::kTrue: return "true";
    case Kind::kFalse: return "false";
    case Kind::kLiteral: return std::to_string(lit().to_dimacs());
    case Kind::kAnd:
    case Kind::kOr: {
      std::string out = kind() == Kind::kAnd ? "and(" : "or(";
      bool first = true;
      for (const auto& c : children()) {
        if (!first) out += ',';
        first = false;
        out += c.to_string();
      }
      return out + ")";
    }
  }
  return {};
}

bool structurally_equal(const Formula& a, const Formula& b) {
  if (a.id() == b.id()) return true;
  if (a.kind() != b.kind()) return false;
  if (a.kind() == Formula::Kind::kLiteral) return a.lit() == b.lit();
  if (a.children().size() != b.children().size()) return false;
  for (std::size_t i = 0; i < a.children().size(); ++i)
    if (!structurally_equal(a.children()[i], b.children()[i])) return false;
  return true;
}

namespace {

bool all_literals(const Formula& f) {
  return std::all_of(f.children().begin(), f.children().end(), [](const Formula& c) {
    return c.kind() == Formula::Kind::kLiteral;
  });
}

}  // namespace

FormulaShape formula_shape(const Formula& f) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::kTrue:
    case K::kFalse: return FormulaShape::kConstant;
    case K::kLiteral: return FormulaShape::kLiteral;
    case K::kOr:
      if (all_literals(f)) return FormulaShape::kClause;
      for (const auto& c : f.children())
        if (c.kind() != K::kLiteral && !(c.kind() == K::kAnd && all_literals(c)))
          return FormulaShape::kOther;
      return FormulaShape::kDnf;
    case K::kAnd:
      if (all_literals(f)) return FormulaShape::kCube;
      for (const auto& c : f.children())
        if (c.kind() != K::kLiteral && !(c.kind() == K::kOr && all_literals(c)))
          return FormulaShape::kOther;
      return FormulaShape::kCnf;
  }
  return FormulaShape::kOther;
}

const char* shape_name(FormulaShape shape) {
  switch (shape) {
    case FormulaShape::kConstant: return "constant";
    case FormulaShape::kLiteral: return "literal";
    case FormulaShape::kClause: return "clause";
    case FormulaShape::kCube: return "cube";
    case FormulaShape::kCnf: return "CNF";
    case FormulaShape::kDnf: return "DNF";
    case FormulaShape::kOther: return "other";
  }
  return "other";
}

bool is_cnf_shaped(FormulaShape shape) {
  return shape != FormulaShape::kDnf && shape != FormulaShape::kOther;
}

bool is_dnf_shaped(FormulaShape shape) {
  return shape != FormulaShape::kCnf && shape != FormulaShape::kOther;
}

std::optional<std::vector<Clause>> formula_to_clauses(const Formula& f) {
  using K = Formula::Kind;
  FormulaShape shape = formula_shape(f);
  if (!is_cnf_shaped(shape)) return std::nullopt;
  auto clause_of = [](const Formula& g) -> std::optional<Clause> {
    std::vector<Literal> lits;
    if (g.kind() == K::kLiteral) {
      lits.push_back(g.lit());
    } else {
      for (const auto& c : g.children()) lits.push_back(c.lit());
    }
    try {
      return Clause::from_literals(std::move(lits));
    } catch (const Error&) {
      return std::nullopt;  // tautology, always true
    }
  };
  std::vector<Clause> out;
  switch (f.kind()) {
    case K::kTrue: return out;
    case K::kFalse: out.emplace_back(); return out;
    case K::kAnd:
      if (shape == FormulaShape::kCube) {
        for (const auto& c : f.children()) out.push_back(Clause::from_literals({c.lit()}));
        return out;
      }
      for (const auto& c : f.children())
        if (auto cl = clause_of(c)) out.push_back(std::move(*cl));
      return out;
    default:
      if (auto cl = clause_of(f)) out.push_back(std::move(*cl));
      return out;
  }
}

}  // namespace resproof
