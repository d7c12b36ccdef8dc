#include "resproof/interpolate.hpp"
#include "resproof/transform.hpp"

namespace resproof {

OrderedContextReport find_unordered_contexts(const ResolutionProof& proof,
                                             const VarPredicate& light) {
  OrderedContextReport report;
  for (NodeId n : topological_order(proof, Direction::kTopDown)) {
    auto pair = detect_contexts(proof, n);
    for (const auto* ctx : {&pair.left, &pair.right}) {
      if (!*ctx) continue;
      Var lower = (*ctx)->t.var(), upper = (*ctx)->s.var();
      if (light(lower) && !light(upper)) report.unordered.push_back({n, (*ctx)->inner, lower, upper});
    }
  }
  return report;
}

ReorderStats pivot_reordering(ResolutionProof& proof, const VarPredicate& light, bool linear) {
  ReorderStats stats;
  const std::size_t watchdog = 10 * proof.size();
  const RuleStrategy strategy = RuleStrategy::reordering(light, linear);
  while (!find_unordered_contexts(proof, light).ordered()) {
    if (stats.rounds >= watchdog) {
      stats.watchdog_hit = true;
      break;
    }
    auto pass = transform_and_reconstruct(proof, strategy);
    ++stats.rounds;
    stats.rules_applied += pass.rules_applied;
    if (pass.rules_applied == 0 && pass.steps_replaced == 0) break;
  }
  return stats;
}

}  // namespace resproof
