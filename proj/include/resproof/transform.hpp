#pragma once

#include <chrono>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "resproof/proof.hpp"

namespace resproof {

enum class RuleKind : std::uint8_t { kS1, kS1Prime, kS2, kR1, kR2, kR2Prime, kR3 };
// Left: the inner node is the root's pos parent.
enum class ContextSide : std::uint8_t { kLeft, kRight };

const char* rule_name(RuleKind rule);
// 0 is the most preferred: R3, then R2'/R1, R2, S1', S2, S1.
int rule_rank(RuleKind rule);
bool is_reducing(RuleKind rule);

// Two consecutive steps  C1,C2 -> C4 (pivot v(s))  and  C4,C3 -> C (pivot v(t)).
// s is the literal of v(s) in C1, t the literal of v(t) in C4, and C1 is a
// parent of C4 containing t.
struct RuleContext {
  NodeId root = kNoNode;   // C
  NodeId inner = kNoNode;  // C4
  NodeId c1 = kNoNode;
  NodeId c2 = kNoNode;
  NodeId c3 = kNoNode;
  Literal s;
  Literal t;
  ContextSide side = ContextSide::kLeft;
};

struct ContextPair {
  std::optional<RuleContext> left;
  std::optional<RuleContext> right;
};

std::optional<RuleContext> make_context(const ResolutionProof& proof, NodeId n, ContextSide side);
ContextPair detect_contexts(const ResolutionProof& proof, NodeId n);

// Applicable rules, most preferred first. S1' is reported on contexts that
// have the shape S1 produces (C3 is a resolvent on v(s) sharing the parent
// C2 with C4), so that it can undo S1.
std::vector<RuleKind> classify(const ResolutionProof& proof, const RuleContext& ctx);

// True if applying `rule` here requires duplicating C4.
bool needs_split(const ResolutionProof& proof, const RuleContext& ctx, RuleKind rule);

struct ApplyOutcome {
  bool applied = false;
  bool root_clause_changed = false;
  // Node now holding the context root's clause (differs from ctx.root after R3).
  NodeId result = kNoNode;
  std::vector<NodeId> new_nodes;
  std::vector<NodeId> detached;
};

// Rewrites the context. With allow_split == false, rules that would need a
// copy of C4 are skipped (applied == false). Throws kRuleNotApplicable if the
// context is stale or the rule does not match it. After a reducing rule the
// nodes below the context root are left for reconstruction.
ApplyOutcome apply_rule(ResolutionProof& proof, const RuleContext& ctx, RuleKind rule,
                        bool allow_split = true);

struct RuleChoice {
  RuleContext context;
  RuleKind rule;
};

class RuleStrategy {
 public:
  using Decide =
      std::function<std::optional<RuleChoice>(const ResolutionProof&, const ContextPair&)>;

  RuleStrategy(std::string name, Decide decide) : name_(std::move(name)), decide_(std::move(decide)) {}

  static RuleStrategy skip_all();
  // Never S1; no duplication; R2' over R2; S2 only when it does not push a
  // node with more resolvents below one with fewer.
  static RuleStrategy compression();
  // Acts only on contexts whose lower pivot is light and upper pivot heavy.
  // `linear` forbids duplication of C4.
  static RuleStrategy reordering(std::function<bool(Var)> light, bool linear = false);

  std::optional<RuleChoice> decide(const ResolutionProof& proof, const ContextPair& contexts) const {
    return decide_ ? decide_(proof, contexts) : std::nullopt;
  }
  bool is_skip_all() const { return !decide_; }
  const std::string& name() const { return name_; }

 private:
  std::string name_;
  Decide decide_;
};

// Outcome of rebuilding one step from its (possibly changed) parents.
enum class StepOutcome { kSound, kReplaced };

// Recomputes n from its parents, or replaces n by a parent when a pivot
// literal has disappeared.
StepOutcome reconstruct_step(ResolutionProof& proof, NodeId n);

// Rebuilds every descendant of `start` after start's clause was strengthened.
void subsumption_propagation(ResolutionProof& proof, NodeId start);

struct TraversalStats {
  std::size_t rules_applied = 0;
  std::size_t steps_replaced = 0;
};

// One top-down pass: reconstruct each step, then let the strategy apply at
// most one rule rooted at it.
TraversalStats transform_and_reconstruct(ResolutionProof& proof, const RuleStrategy& strategy);

// Up to num_traversals passes; stops once time_limit has elapsed, checked
// after each pass, so at least one pass runs when num_traversals > 0.
std::size_t reduce_and_expose(ResolutionProof& proof, std::size_t num_traversals,
                              std::chrono::nanoseconds time_limit, const RuleStrategy& strategy);

inline constexpr std::chrono::nanoseconds kNoTimeLimit = std::chrono::nanoseconds::max();

}  // namespace resproof
