#include "resproof/transform.hpp"

namespace resproof {

namespace {

struct Candidate {
  RuleChoice choice;
  int rank = 0;
  std::size_t weight = 0;  // larger is better among equal ranks
};

// Right context wins ties, so it is offered last and replaces on equality.
std::optional<RuleChoice> pick(const std::vector<Candidate>& cands) {
  const Candidate* best = nullptr;
  for (const auto& c : cands) {
    if (!best || c.rank < best->rank || (c.rank == best->rank && c.weight >= best->weight))
      best = &c;
  }
  if (!best) return std::nullopt;
  return best->choice;
}

std::size_t child_count(const ResolutionProof& proof, NodeId n) {
  return proof.node(n).children.size();
}

}  // namespace

RuleStrategy RuleStrategy::skip_all() { return RuleStrategy("skip-all", {}); }

RuleStrategy RuleStrategy::compression() {
  return RuleStrategy("compression", [](const ResolutionProof& proof, const ContextPair& pair)
                                         -> std::optional<RuleChoice> {
    std::vector<Candidate> cands;
    for (const auto* ctx : {&pair.left, &pair.right}) {
      if (!*ctx) continue;
      const RuleContext& c = **ctx;
      for (RuleKind r : classify(proof, c)) {
        if (r == RuleKind::kS1 || r == RuleKind::kR2) continue;
        if (needs_split(proof, c, r)) continue;
        std::size_t weight = 0;
        if (r == RuleKind::kS2) {
          std::size_t up = child_count(proof, c.c3), down = child_count(proof, c.c2);
          if (up < down) continue;
          weight = up;
        }
        if (r == RuleKind::kS1Prime && child_count(proof, c.inner) > 1 &&
            child_count(proof, c.c3) > 1)
          continue;
        cands.push_back({{c, r}, rule_rank(r), weight});
        break;
      }
    }
    return pick(cands);
  });
}

RuleStrategy RuleStrategy::reordering(std::function<bool(Var)> light, bool linear) {
  std::string name = linear ? "reordering-linear" : "reordering";
  return RuleStrategy(std::move(name), [light = std::move(light), linear](
                                           const ResolutionProof& proof,
                                           const ContextPair& pair) -> std::optional<RuleChoice> {
    std::vector<Candidate> cands;
    for (const auto* ctx : {&pair.left, &pair.right}) {
      if (!*ctx) continue;
      const RuleContext& c = **ctx;
      if (!light(c.t.var()) || light(c.s.var())) continue;
      auto rules = classify(proof, c);
      std::optional<RuleKind> chosen;
      for (RuleKind r : rules) {
        if (r == RuleKind::kR2Prime) {
          // R2 completes the swap; R2' is kept as the fallback.
          if (!linear || !needs_split(proof, c, RuleKind::kR2)) {
            chosen = RuleKind::kR2;
            break;
          }
          chosen = RuleKind::kR2Prime;
          break;
        }
        if (linear && needs_split(proof, c, r)) continue;
        chosen = r;
        break;
      }
      if (chosen) cands.push_back({{c, *chosen}, rule_rank(*chosen), 0});
    }
    return pick(cands);
  });
}

}  // namespace resproof
