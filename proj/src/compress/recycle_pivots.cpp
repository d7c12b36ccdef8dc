#include <algorithm>

#include "resproof/compress.hpp"

namespace resproof {

namespace {

using LitSet = std::vector<Literal>;  // sorted

bool has(const LitSet& s, Literal l) { return std::binary_search(s.begin(), s.end(), l); }

LitSet with(LitSet s, Literal l) {
  auto it = std::lower_bound(s.begin(), s.end(), l);
  if (it == s.end() || *it != l) s.insert(it, l);
  return s;
}

LitSet intersect(const LitSet& a, const LitSet& b) {
  LitSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

enum Cut : std::uint8_t { kKeepBoth = 0, kKeepPos = 1, kKeepNeg = 2 };

// Literals of v resolved away below n decide which parent is redundant.
Cut decide(const LitSet& rl, Var v) {
  if (has(rl, neg(v))) return kKeepNeg;
  if (has(rl, pos(v))) return kKeepPos;
  return kKeepBoth;
}

std::size_t reconstruct_with_cuts(ResolutionProof& proof, const std::vector<Cut>& cut) {
  auto order = topological_order(proof, Direction::kTopDown);
  std::vector<std::uint64_t> stamp(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) stamp[i] = proof.node(order[i]).stamp;
  std::size_t severed = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    NodeId n = order[i];
    if (!proof.contains(n) || proof.node(n).stamp != stamp[i]) continue;
    const auto& node = proof.node(n);
    if (!node.is_inner()) continue;
    if (cut[n] != kKeepBoth) {
      ++severed;
      substitute(proof, n, cut[n] == kKeepPos ? node.parent_pos : node.parent_neg);
      continue;
    }
    reconstruct_step(proof, n);
  }
  return severed;
}

struct RlPass {
  std::vector<LitSet> rl;
  std::vector<Cut> cut;
};

RlPass intersection_pass(const ResolutionProof& proof) {
  RlPass out;
  out.rl.assign(proof.id_bound(), {});
  out.cut.assign(proof.id_bound(), kKeepBoth);
  std::vector<char> seen(proof.id_bound(), 0);
  auto give = [&](NodeId parent, const LitSet& rl) {
    if (!seen[parent]) {
      seen[parent] = 1;
      out.rl[parent] = rl;
    } else {
      out.rl[parent] = intersect(out.rl[parent], rl);
    }
  };
  NodeId root = proof.root();
  if (!proof.contains(root)) return out;
  const auto& lits = proof.clause(root).literals();
  out.rl[root].assign(lits.begin(), lits.end());
  seen[root] = 1;
  for (NodeId n : topological_order(proof, Direction::kBottomUp)) {
    const auto& node = proof.node(n);
    if (!node.is_inner()) continue;
    if (!seen[n]) continue;  // every child severed this node
    const LitSet& rl = out.rl[n];
    Cut c = decide(rl, node.pivot);
    out.cut[n] = c;
    if (c == kKeepNeg) {
      give(node.parent_neg, rl);
    } else if (c == kKeepPos) {
      give(node.parent_pos, rl);
    } else {
      give(node.parent_neg, with(rl, neg(node.pivot)));
      give(node.parent_pos, with(rl, pos(node.pivot)));
    }
  }
  return out;
}

}  // namespace

std::size_t recycle_pivots(ResolutionProof& proof) {
  if (!proof.contains(proof.root())) return 0;
  std::vector<Cut> cut(proof.id_bound(), kKeepBoth);
  std::vector<char> visited(proof.id_bound(), 0);
  std::vector<std::pair<NodeId, LitSet>> stack;
  stack.emplace_back(proof.root(), LitSet{});
  while (!stack.empty()) {
    auto [n, rl] = std::move(stack.back());
    stack.pop_back();
    if (visited[n]) continue;
    visited[n] = 1;
    const auto& node = proof.node(n);
    if (!node.is_inner()) continue;
    if (node.children.size() > 1) rl.clear();
    Cut c = decide(rl, node.pivot);
    cut[n] = c;
    if (c == kKeepNeg) {
      stack.emplace_back(node.parent_neg, std::move(rl));
    } else if (c == kKeepPos) {
      stack.emplace_back(node.parent_pos, std::move(rl));
    } else {
      stack.emplace_back(node.parent_neg, with(rl, neg(node.pivot)));
      stack.emplace_back(node.parent_pos, with(std::move(rl), pos(node.pivot)));
    }
  }
  return reconstruct_with_cuts(proof, cut);
}

std::vector<std::vector<Literal>> removable_literals(const ResolutionProof& proof) {
  return intersection_pass(proof).rl;
}

std::size_t recycle_pivots_intersection(ResolutionProof& proof) {
  auto pass = intersection_pass(proof);
  return reconstruct_with_cuts(proof, pass.cut);
}

}  // namespace resproof
