#include <algorithm>
#include <optional>

#include "resproof/error.hpp"
#include "resproof/interpolate.hpp"
#include "resproof/sat.hpp"

namespace resproof {

namespace {

enum class Algo { kMcMillan, kMcMillanPrime };

bool in_a(const ResolutionProof& proof, NodeId n) {
  switch (proof.node(n).origin) {
    case LeafOrigin::kA: return true;
    case LeafOrigin::kB:
    case LeafOrigin::kTheoryLemma: return false;
    case LeafOrigin::kUnknown: break;
  }
  throw Error(ErrorCode::kUntaggedLeaf,
              "leaf " + std::to_string(n) + " (" + proof.clause(n).to_string() +
                  ") belongs to neither A nor B");
}

std::vector<Literal> restrict_common(const Clause& c, const VariableLabeling& labeling) {
  std::vector<Literal> out;
  for (Literal l : c.literals())
    if (labeling.of(l.var()) == VarClass::kABCommon) out.push_back(l);
  return out;
}

Formula interpolate(const ResolutionProof& proof, const VariableLabeling& labeling, Algo algo) {
  auto order = topological_order(proof, Direction::kTopDown);
  std::vector<std::optional<Formula>> itp(proof.id_bound());
  for (NodeId n : order) {
    const auto& node = proof.node(n);
    for (Literal l : node.clause.literals())
      if (labeling.is_mixed(l.var()))
        throw Error(ErrorCode::kMixedVariablePresent,
                    "mixed variable " + std::to_string(l.var()) + " in node " + std::to_string(n));
    if (node.is_leaf()) {
      bool a = in_a(proof, n);
      auto common = restrict_common(node.clause, labeling);
      std::vector<Formula> lits;
      if (algo == Algo::kMcMillan) {
        if (a) {
          for (Literal l : common) lits.push_back(Formula::literal(l));
          itp[n] = Formula::disj(std::move(lits));
        } else {
          itp[n] = Formula::truth();
        }
      } else {
        if (a) {
          itp[n] = Formula::falsity();
        } else {
          for (Literal l : common) lits.push_back(Formula::literal(~l));
          itp[n] = Formula::conj(std::move(lits));
        }
      }
      continue;
    }
    if (labeling.is_mixed(node.pivot))
      throw Error(ErrorCode::kMixedVariablePresent,
                  "mixed pivot " + std::to_string(node.pivot) + " at node " + std::to_string(n));
    VarClass c = labeling.of(node.pivot);
    bool use_or = algo == Algo::kMcMillan ? c == VarClass::kALocal : c != VarClass::kBLocal;
    const Formula& i1 = *itp[node.parent_pos];
    const Formula& i2 = *itp[node.parent_neg];
    itp[n] = use_or ? Formula::disj(i1, i2) : Formula::conj(i1, i2);
  }
  if (!proof.contains(proof.root())) return Formula::truth();
  return *itp[proof.root()];
}

}  // namespace

Formula itp_mcmillan(const ResolutionProof& proof, const VariableLabeling& labeling) {
  return interpolate(proof, labeling, Algo::kMcMillan);
}

Formula itp_mcmillan_prime(const ResolutionProof& proof, const VariableLabeling& labeling) {
  return interpolate(proof, labeling, Algo::kMcMillanPrime);
}

bool verify_interpolant(const CnfFormula& a, const CnfFormula& b, const Formula& i) {
  VariableLabeling labeling = label_variables(a, b);
  auto common = labeling.common();
  for (Var v : i.variables())
    if (!std::binary_search(common.begin(), common.end(), v)) return false;
  Formula fa = Formula::from_clauses(a.clauses);
  Formula fb = Formula::from_clauses(b.clauses);
  if (!implies_oracle(fa, i)) return false;
  return implies_oracle(Formula::conj(i, fb), Formula::falsity());
}

}  // namespace resproof
