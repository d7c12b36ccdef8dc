#include "resproof/transform.hpp"

namespace resproof {

const char* rule_name(RuleKind rule) {
  switch (rule) {
    case RuleKind::kS1: return "S1";
    case RuleKind::kS1Prime: return "S1'";
    case RuleKind::kS2: return "S2";
    case RuleKind::kR1: return "R1";
    case RuleKind::kR2: return "R2";
    case RuleKind::kR2Prime: return "R2'";
    case RuleKind::kR3: return "R3";
  }
  return "?";
}

int rule_rank(RuleKind rule) {
  switch (rule) {
    case RuleKind::kR3: return 0;
    case RuleKind::kR2Prime:
    case RuleKind::kR1: return 1;
    case RuleKind::kR2: return 2;
    case RuleKind::kS1Prime: return 3;
    case RuleKind::kS2: return 4;
    case RuleKind::kS1: return 5;
  }
  return 6;
}

bool is_reducing(RuleKind rule) {
  return rule == RuleKind::kR1 || rule == RuleKind::kR2 || rule == RuleKind::kR2Prime ||
         rule == RuleKind::kR3;
}

std::optional<RuleContext> make_context(const ResolutionProof& proof, NodeId n, ContextSide side) {
  const auto& root = proof.node(n);
  if (!root.is_inner()) return std::nullopt;
  NodeId inner = side == ContextSide::kLeft ? root.parent_pos : root.parent_neg;
  NodeId c3 = side == ContextSide::kLeft ? root.parent_neg : root.parent_pos;
  const auto& in = proof.node(inner);
  if (!in.is_inner()) return std::nullopt;
  Literal t(root.pivot, side == ContextSide::kRight);
  if (!in.clause.contains(t)) return std::nullopt;
  const Clause& a = proof.clause(in.parent_pos);
  const Clause& b = proof.clause(in.parent_neg);
  bool t_in_a = a.contains(t), t_in_b = b.contains(t);
  bool c1_is_pos;
  if (t_in_a && t_in_b) {
    // Either parent may play C1. Pick the one whose v(s) literal also sits
    // in C3 so that the context reads as R1 rather than an unsound S1.
    c1_is_pos = !proof.clause(c3).contains(neg(in.pivot));
  } else if (t_in_a || t_in_b) {
    c1_is_pos = t_in_a;
  } else {
    return std::nullopt;
  }
  RuleContext ctx;
  ctx.root = n;
  ctx.inner = inner;
  ctx.c1 = c1_is_pos ? in.parent_pos : in.parent_neg;
  ctx.c2 = c1_is_pos ? in.parent_neg : in.parent_pos;
  ctx.c3 = c3;
  ctx.s = Literal(in.pivot, !c1_is_pos);
  ctx.t = t;
  ctx.side = side;
  return ctx;
}

ContextPair detect_contexts(const ResolutionProof& proof, NodeId n) {
  ContextPair out;
  if (!proof.node(n).is_inner()) return out;
  out.left = make_context(proof, n, ContextSide::kLeft);
  out.right = make_context(proof, n, ContextSide::kRight);
  return out;
}

namespace {

// The S1 output shape: C3 = Res_{v(s)}(C2', C2) shares the parent C2 with C4.
bool s1_prime_shape(const ResolutionProof& proof, const RuleContext& ctx) {
  const auto& c3 = proof.node(ctx.c3);
  if (!c3.is_inner() || c3.pivot != ctx.s.var()) return false;
  if (c3.parent_pos != ctx.c2 && c3.parent_neg != ctx.c2) return false;
  NodeId other = c3.parent_pos == ctx.c2 ? c3.parent_neg : c3.parent_pos;
  return proof.clause(other).contains(~ctx.t);
}

}  // namespace

std::vector<RuleKind> classify(const ResolutionProof& proof, const RuleContext& ctx) {
  const Clause& c2 = proof.clause(ctx.c2);
  const Clause& c3 = proof.clause(ctx.c3);
  bool s_in_c3 = c3.contains(ctx.s);
  bool ns_in_c3 = c3.contains(~ctx.s);
  bool t_in_c2 = c2.contains(ctx.t);
  std::vector<RuleKind> out;
  if (ns_in_c3 && !t_in_c2) out.push_back(RuleKind::kR3);
  if (s_in_c3 && t_in_c2) out.push_back(RuleKind::kR1);
  if (s_in_c3 && !t_in_c2) {
    out.push_back(RuleKind::kR2Prime);
    out.push_back(RuleKind::kR2);
  }
  if (!s_in_c3 && !ns_in_c3 && !t_in_c2) {
    if (s1_prime_shape(proof, ctx)) out.push_back(RuleKind::kS1Prime);
    out.push_back(RuleKind::kS2);
  }
  if (!s_in_c3 && !ns_in_c3 && t_in_c2) out.push_back(RuleKind::kS1);
  return out;
}

bool needs_split(const ResolutionProof& proof, const RuleContext& ctx, RuleKind rule) {
  if (rule != RuleKind::kS1 && rule != RuleKind::kS2 && rule != RuleKind::kR2) return false;
  return proof.node(ctx.inner).children.size() > 1;
}

}  // namespace resproof
