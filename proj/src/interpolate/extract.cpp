#include "resproof/error.hpp"
#include "resproof/interpolate.hpp"

namespace resproof {

std::vector<ExtractedLemma> extract_ab_mixed(ResolutionProof& proof, const VarPredicate& mixed) {
  auto order = topological_order(proof, Direction::kTopDown);
  // closed[n]: n is inner and every pivot of its subproof is mixed.
  std::vector<char> closed(proof.id_bound(), 0);
  for (NodeId n : order) {
    const auto& node = proof.node(n);
    if (!node.is_inner() || !mixed(node.pivot)) continue;
    auto ok = [&](NodeId p) { return proof.node(p).is_leaf() || closed[p]; };
    closed[n] = ok(node.parent_pos) && ok(node.parent_neg);
  }
  auto clean = [&](const Clause& c) {
    for (Literal l : c.literals())
      if (mixed(l.var())) return false;
    return true;
  };
  std::vector<ExtractedLemma> lemmas;
  std::vector<std::uint64_t> stamp(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) stamp[i] = proof.node(order[i]).stamp;
  // Root first, so the largest subproofs are cut before the ones inside them.
  for (std::size_t k = order.size(); k-- > 0;) {
    NodeId n = order[k];
    if (!proof.contains(n) || proof.node(n).stamp != stamp[k]) continue;
    if (!closed[n] || !clean(proof.clause(n))) continue;
    Clause c = proof.clause(n);
    proof.make_leaf(n, c, LeafOrigin::kTheoryLemma);
    lemmas.push_back({std::move(c), n});
  }
  for (NodeId n : topological_order(proof, Direction::kTopDown)) {
    const auto& node = proof.node(n);
    bool residue = !clean(node.clause) || (node.is_inner() && mixed(node.pivot));
    if (residue)
      throw Error(ErrorCode::kMixedResidue,
                  "mixed variable left at node " + std::to_string(n) + " (" +
                      node.clause.to_string() + ")");
  }
  return lemmas;
}

}  // namespace resproof
