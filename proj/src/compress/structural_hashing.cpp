#include <map>
#include <unordered_map>

#include "resproof/compress.hpp"

namespace resproof {

std::size_t structural_hashing(ResolutionProof& proof) {
  auto order = topological_order(proof, Direction::kTopDown);
  std::vector<std::uint64_t> stamp(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) stamp[i] = proof.node(order[i]).stamp;
  std::unordered_map<std::uint64_t, std::pair<NodeId, std::uint64_t>> seen;
  // Leaves have no parent pair; identical input clauses are keyed by clause.
  std::map<std::pair<Clause, LeafOrigin>, std::pair<NodeId, std::uint64_t>> leaves;
  std::size_t merged = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    NodeId n = order[i];
    if (!proof.contains(n) || proof.node(n).stamp != stamp[i]) continue;
    const auto& node = proof.node(n);
    if (!node.is_inner()) {
      auto [it, fresh] = leaves.try_emplace({node.clause, node.origin}, n, node.stamp);
      if (fresh) continue;
      auto [m, m_stamp] = it->second;
      if (!proof.contains(m) || proof.node(m).stamp != m_stamp) {
        it->second = {n, node.stamp};
        continue;
      }
      substitute(proof, n, m);
      ++merged;
      continue;
    }
    std::uint64_t key = (std::uint64_t{node.parent_pos} << 32) | node.parent_neg;
    auto [it, fresh] = seen.try_emplace(key, n, node.stamp);
    if (fresh) continue;
    auto [m, m_stamp] = it->second;
    if (!proof.contains(m) || proof.node(m).stamp != m_stamp) {
      it->second = {n, node.stamp};
      continue;
    }
    substitute(proof, n, m);
    ++merged;
  }
  return merged;
}

}  // namespace resproof
