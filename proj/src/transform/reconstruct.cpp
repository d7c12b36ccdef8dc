#include <chrono>

#include "resproof/transform.hpp"

namespace resproof {

StepOutcome reconstruct_step(ResolutionProof& proof, NodeId n) {
  const auto& node = proof.node(n);
  if (!node.is_inner()) return StepOutcome::kSound;
  const NodeId p = node.parent_pos, q = node.parent_neg;
  const Var v = node.pivot;
  const Clause& cp = proof.clause(p);
  const Clause& cq = proof.clause(q);
  bool has_p = cp.contains(pos(v));
  bool has_q = cq.contains(neg(v));
  if (has_p && has_q) {
    Clause c = resolve(cp, cq, v);
    if (c != node.clause) proof.set_clause(n, std::move(c));
    return StepOutcome::kSound;
  }
  NodeId keep;
  if (!has_p && has_q) {
    keep = p;
  } else if (has_p && !has_q) {
    keep = q;
  } else {
    bool p_single = proof.node(p).children.size() == 1;
    bool q_single = proof.node(q).children.size() == 1;
    if (p_single != q_single)
      keep = p_single ? q : p;
    else
      keep = cq.size() < cp.size() ? q : p;
  }
  substitute(proof, n, keep);
  return StepOutcome::kReplaced;
}

void subsumption_propagation(ResolutionProof& proof, NodeId start) {
  std::vector<char> below(proof.id_bound(), 0);
  std::vector<NodeId> work{start};
  while (!work.empty()) {
    NodeId n = work.back();
    work.pop_back();
    for (NodeId c : proof.node(n).children)
      if (!below[c]) {
        below[c] = 1;
        work.push_back(c);
      }
  }
  auto order = topological_order(proof, Direction::kTopDown);
  std::vector<std::uint64_t> stamp(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) stamp[i] = proof.node(order[i]).stamp;
  for (std::size_t i = 0; i < order.size(); ++i) {
    NodeId n = order[i];
    if (!below[n] || !proof.contains(n) || proof.node(n).stamp != stamp[i]) continue;
    reconstruct_step(proof, n);
  }
}

TraversalStats transform_and_reconstruct(ResolutionProof& proof, const RuleStrategy& strategy) {
  TraversalStats stats;
  auto order = topological_order(proof, Direction::kTopDown);
  std::vector<std::uint64_t> stamp(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) stamp[i] = proof.node(order[i]).stamp;
  for (std::size_t i = 0; i < order.size(); ++i) {
    NodeId n = order[i];
    if (!proof.contains(n) || proof.node(n).stamp != stamp[i]) continue;
    if (!proof.node(n).is_inner()) continue;
    if (reconstruct_step(proof, n) == StepOutcome::kReplaced) {
      ++stats.steps_replaced;
      continue;
    }
    if (strategy.is_skip_all()) continue;
    auto choice = strategy.decide(proof, detect_contexts(proof, n));
    if (!choice) continue;
    if (apply_rule(proof, choice->context, choice->rule).applied) ++stats.rules_applied;
  }
  return stats;
}

std::size_t reduce_and_expose(ResolutionProof& proof, std::size_t num_traversals,
                              std::chrono::nanoseconds time_limit, const RuleStrategy& strategy) {
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  std::size_t passes = 0;
  while (passes < num_traversals) {
    auto stats = transform_and_reconstruct(proof, strategy);
    ++passes;
    if (stats.rules_applied == 0 && stats.steps_replaced == 0) break;
    if (Clock::now() - start >= time_limit) break;
  }
  return passes;
}

}  // namespace resproof
