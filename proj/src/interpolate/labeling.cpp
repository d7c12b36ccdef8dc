#include <algorithm>
#include <set>
#include <sstream>

#include "resproof/error.hpp"
#include "resproof/interpolate.hpp"

namespace resproof {

const char* var_class_name(VarClass c) {
  switch (c) {
    case VarClass::kALocal: return "A";
    case VarClass::kBLocal: return "B";
    case VarClass::kABCommon: return "AB";
  }
  return "?";
}

void VariableLabeling::set(Var v, VarClass c) {
  if (cls_.size() <= v) cls_.resize(v + 1, -1);
  cls_[v] = static_cast<std::int8_t>(c);
}

void VariableLabeling::set_mixed(Var v, bool mixed) {
  if (mixed)
    mixed_.insert(v);
  else
    mixed_.erase(v);
}

bool VariableLabeling::known(Var v) const { return v < cls_.size() && cls_[v] >= 0; }

VarClass VariableLabeling::of(Var v) const {
  if (!known(v))
    throw Error(ErrorCode::kUnknownVariable,
                "variable " + std::to_string(v) + " occurs in neither partition");
  return static_cast<VarClass>(cls_[v]);
}

std::vector<Var> VariableLabeling::common() const {
  std::vector<Var> out;
  for (Var v = 0; v < cls_.size(); ++v)
    if (cls_[v] == static_cast<std::int8_t>(VarClass::kABCommon)) out.push_back(v);
  return out;
}

void VariableLabeling::check_covers(const ResolutionProof& proof) const {
  for (NodeId n : topological_order(proof, Direction::kTopDown)) {
    const auto& node = proof.node(n);
    auto check = [&](Var v) {
      if (!known(v) && !is_mixed(v))
        throw Error(ErrorCode::kUnknownVariable,
                    "variable " + std::to_string(v) + " occurs in neither partition");
    };
    for (Literal l : node.clause.literals()) check(l.var());
    if (node.is_inner()) check(node.pivot);
  }
}

VariableLabeling label_variables(const CnfFormula& a, const CnfFormula& b,
                                 const std::vector<Var>& mixed) {
  std::set<Var> in_a, in_b;
  for (const auto& c : a.clauses)
    for (Literal l : c.literals()) in_a.insert(l.var());
  for (const auto& c : b.clauses)
    for (Literal l : c.literals()) in_b.insert(l.var());
  VariableLabeling out;
  for (Var v : in_a) out.set(v, in_b.count(v) ? VarClass::kABCommon : VarClass::kALocal);
  for (Var v : in_b)
    if (!in_a.count(v)) out.set(v, VarClass::kBLocal);
  for (Var v : mixed) out.set_mixed(v);
  return out;
}

std::size_t tag_leaves(ResolutionProof& proof, const CnfFormula& a, const CnfFormula& b) {
  std::set<Clause> sa(a.clauses.begin(), a.clauses.end());
  std::set<Clause> sb(b.clauses.begin(), b.clauses.end());
  std::size_t untagged = 0;
  for (NodeId n : proof.ids()) {
    const auto& node = proof.node(n);
    if (!node.is_leaf()) continue;
    if (sa.count(node.clause))
      proof.set_origin(n, LeafOrigin::kA);
    else if (sb.count(node.clause))
      proof.set_origin(n, LeafOrigin::kB);
    else if (node.origin != LeafOrigin::kTheoryLemma)
      ++untagged;
  }
  return untagged;
}

std::pair<CnfFormula, CnfFormula> split_partition(const CnfFormula& cnf,
                                                  const std::vector<bool>& in_a) {
  CnfFormula a, b;
  a.num_vars = b.num_vars = cnf.num_vars;
  for (std::size_t i = 0; i < cnf.clauses.size(); ++i) {
    std::size_t pos = i < cnf.origin.size() ? cnf.origin[i] : i + 1;
    CnfFormula& dst = pos - 1 < in_a.size() && in_a[pos - 1] ? a : b;
    dst.clauses.push_back(cnf.clauses[i]);
    dst.origin.push_back(pos);
  }
  return {std::move(a), std::move(b)};
}

std::vector<bool> parse_partition(std::string_view text, std::size_t num_clauses) {
  std::vector<bool> in_a(num_clauses, false);
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string idx, tag;
    if (!(ls >> idx)) continue;
    if (idx[0] == 'c' || idx[0] == '#') continue;
    if (!(ls >> tag))
      throw Error(ErrorCode::kSyntaxError, "expected '<index> <a|b>'", line_no);
    std::size_t k = 0;
    try {
      k = std::stoul(idx);
    } catch (const std::exception&) {
      throw Error(ErrorCode::kSyntaxError, "bad clause index '" + idx + "'", line_no);
    }
    if (k == 0 || k > num_clauses)
      throw Error(ErrorCode::kSyntaxError, "clause index " + idx + " out of range", line_no);
    if (tag == "a" || tag == "A")
      in_a[k - 1] = true;
    else if (tag == "b" || tag == "B")
      in_a[k - 1] = false;
    else
      throw Error(ErrorCode::kSyntaxError, "partition tag must be a or b", line_no);
  }
  return in_a;
}

}  // namespace resproof
