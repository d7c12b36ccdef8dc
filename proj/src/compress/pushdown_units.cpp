#include <algorithm>

#include "resproof/compress.hpp"

namespace resproof {

PushdownReport pushdown_units(ResolutionProof& proof) {
  PushdownReport report;
  if (!proof.contains(proof.root())) return report;
  const Clause original_root = proof.clause(proof.root());
  auto order = topological_order(proof, Direction::kTopDown);
  std::vector<std::uint64_t> stamp(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) stamp[i] = proof.node(order[i]).stamp;

  std::vector<NodeId> units;  // first node per literal, collection order
  auto collect = [&](NodeId u) {
    Literal l = proof.clause(u).literals().front();
    if (std::find(report.collected.begin(), report.collected.end(), l) != report.collected.end())
      return;
    report.collected.push_back(l);
    units.push_back(u);
    proof.set_pinned(u, true);
  };

  for (std::size_t i = 0; i < order.size(); ++i) {
    NodeId n = order[i];
    if (!proof.contains(n) || proof.node(n).stamp != stamp[i]) continue;
    if (!proof.node(n).is_inner()) continue;
    if (reconstruct_step(proof, n) == StepOutcome::kReplaced) continue;
    const auto& node = proof.node(n);
    NodeId p = node.parent_pos, q = node.parent_neg;
    if (proof.clause(p).size() == 1) {
      collect(p);
      substitute(proof, n, q);
    } else if (proof.clause(q).size() == 1) {
      collect(q);
      substitute(proof, n, p);
    }
  }

  for (NodeId u : units) {
    Literal s = proof.clause(u).literals().front();
    const Clause& root = proof.clause(proof.root());
    if (!root.contains(~s) || original_root.contains(~s)) continue;
    proof.add_resolvent(proof.root(), u, s.var());
    report.reinserted.push_back(s);
  }
  for (NodeId u : units) {
    proof.set_pinned(u, false);
    proof.prune_if_orphan(u);
  }
  return report;
}

}  // namespace resproof
