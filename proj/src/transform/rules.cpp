#include <algorithm>

#include "resproof/error.hpp"
#include "resproof/transform.hpp"

namespace resproof {

namespace {

// Makes n the resolvent of a and b on pivot, whichever order they come in.
void rewire(ResolutionProof& proof, NodeId n, NodeId a, NodeId b, Var pivot) {
  if (!proof.clause(a).contains(pos(pivot))) std::swap(a, b);
  Clause c = resolve(proof.clause(a), proof.clause(b), pivot);
  proof.set_parents(n, a, b, pivot);
  proof.set_clause(n, std::move(c));
}

void check_context(const ResolutionProof& proof, const RuleContext& ctx) {
  auto stale = [] { throw Error(ErrorCode::kRuleNotApplicable, "context no longer matches the proof"); };
  if (!proof.contains(ctx.root) || !proof.contains(ctx.inner) || !proof.contains(ctx.c1) ||
      !proof.contains(ctx.c2) || !proof.contains(ctx.c3))
    stale();
  const auto& root = proof.node(ctx.root);
  const auto& inner = proof.node(ctx.inner);
  if (!root.is_inner() || !inner.is_inner()) stale();
  if (root.pivot != ctx.t.var() || inner.pivot != ctx.s.var()) stale();
  NodeId expect_inner = ctx.side == ContextSide::kLeft ? root.parent_pos : root.parent_neg;
  NodeId expect_c3 = ctx.side == ContextSide::kLeft ? root.parent_neg : root.parent_pos;
  if (expect_inner != ctx.inner || expect_c3 != ctx.c3) stale();
  bool pair = (inner.parent_pos == ctx.c1 && inner.parent_neg == ctx.c2) ||
              (inner.parent_neg == ctx.c1 && inner.parent_pos == ctx.c2);
  if (!pair || !proof.clause(ctx.c1).contains(ctx.s) || !proof.clause(ctx.c1).contains(ctx.t))
    stale();
}

void note_detached(const ResolutionProof& proof, const RuleContext& ctx, ApplyOutcome& out) {
  for (NodeId n : {ctx.root, ctx.inner, ctx.c1, ctx.c2, ctx.c3})
    if (!proof.contains(n) && std::find(out.detached.begin(), out.detached.end(), n) == out.detached.end())
      out.detached.push_back(n);
}

}  // namespace

ApplyOutcome apply_rule(ResolutionProof& proof, const RuleContext& ctx, RuleKind rule,
                        bool allow_split) {
  check_context(proof, ctx);
  auto rules = classify(proof, ctx);
  if (std::find(rules.begin(), rules.end(), rule) == rules.end())
    throw Error(ErrorCode::kRuleNotApplicable,
                std::string(rule_name(rule)) + " does not match the context");
  ApplyOutcome out;
  out.result = ctx.root;
  if (needs_split(proof, ctx, rule)) {
    if (!allow_split) return out;
    out.new_nodes.push_back(split_node(proof, ctx.inner, ctx.root));
  }
  const Var vs = ctx.s.var();
  const Var vt = ctx.t.var();
  const Clause before = proof.clause(ctx.root);

  switch (rule) {
    case RuleKind::kS2:
    case RuleKind::kR2:
      rewire(proof, ctx.inner, ctx.c1, ctx.c3, vt);
      rewire(proof, ctx.root, ctx.inner, ctx.c2, vs);
      break;
    case RuleKind::kS1: {
      rewire(proof, ctx.inner, ctx.c1, ctx.c3, vt);
      NodeId lower = proof.add_resolvent(ctx.c2, ctx.c3, vt);
      out.new_nodes.push_back(lower);
      rewire(proof, ctx.root, ctx.inner, lower, vs);
      break;
    }
    case RuleKind::kS1Prime: {
      // Here C4 = Res(C1, C2'), C3 = Res(C2'', C2) on v(s) with C2 shared.
      const auto& c3 = proof.node(ctx.c3);
      NodeId other = c3.parent_pos == ctx.c2 ? c3.parent_neg : c3.parent_pos;
      NodeId merged;
      if (proof.node(ctx.inner).children.size() == 1) {
        merged = ctx.inner;
        rewire(proof, merged, ctx.c1, other, vt);
      } else {
        merged = proof.add_resolvent(ctx.c1, other, vt);
        out.new_nodes.push_back(merged);
      }
      NodeId old_inner = ctx.inner;
      rewire(proof, ctx.root, merged, ctx.c2, vs);
      proof.prune_if_orphan(ctx.c3);
      if (merged != old_inner) proof.prune_if_orphan(old_inner);
      break;
    }
    case RuleKind::kR1:
    case RuleKind::kR2Prime:
      rewire(proof, ctx.root, ctx.c1, ctx.c3, vt);
      proof.prune_if_orphan(ctx.inner);
      break;
    case RuleKind::kR3:
      out.result = substitute(proof, ctx.root, ctx.c2);
      break;
  }
  out.applied = true;
  out.root_clause_changed = proof.clause(out.result) != before;
  note_detached(proof, ctx, out);
  return out;
}

}  // namespace resproof
