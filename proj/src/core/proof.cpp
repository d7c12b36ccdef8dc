#include "resproof/proof.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>
#include <utility>

#include "resproof/error.hpp"

namespace resproof {

namespace {

[[noreturn]] void bad_node(NodeId n) {
  throw Error(ErrorCode::kInvalidNode, "node " + std::to_string(n) + " does not exist");
}

}  // namespace

NodeId ResolutionProof::allocate() {
  NodeId id;
  if (!free_.empty()) {
    id = free_.back();
    free_.pop_back();
    nodes_[id] = ProofNode{};
  } else {
    id = static_cast<NodeId>(nodes_.size());
    nodes_.emplace_back();
  }
  nodes_[id].alive = true;
  nodes_[id].stamp = next_stamp_++;
  ++alive_;
  return id;
}

void ResolutionProof::release(NodeId n) {
  nodes_[n] = ProofNode{};
  free_.push_back(n);
  --alive_;
  if (root_ == n) root_ = kNoNode;
}

ProofNode& ResolutionProof::mut(NodeId n) {
  if (!contains(n)) bad_node(n);
  return nodes_[n];
}

const ProofNode& ResolutionProof::node(NodeId n) const {
  if (!contains(n)) bad_node(n);
  return nodes_[n];
}

void ResolutionProof::add_edge(NodeId parent, NodeId child) {
  mut(parent).children.push_back(child);
}

void ResolutionProof::remove_edge(NodeId parent, NodeId child) {
  auto& ch = mut(parent).children;
  auto it = std::find(ch.begin(), ch.end(), child);
  if (it != ch.end()) ch.erase(it);
}

NodeId ResolutionProof::add_leaf(Clause clause, LeafOrigin origin) {
  NodeId id = allocate();
  nodes_[id].clause = std::move(clause);
  nodes_[id].origin = origin;
  if (root_ == kNoNode) root_ = id;
  return id;
}

NodeId ResolutionProof::add_resolvent(NodeId a, NodeId b, Var pivot) {
  if (!contains(a)) bad_node(a);
  if (!contains(b)) bad_node(b);
  if (nodes_[a].clause.contains(neg(pivot)) && nodes_[b].clause.contains(pos(pivot)))
    std::swap(a, b);
  Clause c = resolve(nodes_[a].clause, nodes_[b].clause, pivot);
  return add_inner_unchecked(a, b, pivot, std::move(c));
}

NodeId ResolutionProof::add_resolvent(NodeId a, NodeId b) {
  return add_resolvent(a, b, find_pivot(clause(a), clause(b)));
}

NodeId ResolutionProof::add_inner_unchecked(NodeId pos_parent, NodeId neg_parent,
                                            Var pivot, Clause clause) {
  if (!contains(pos_parent)) bad_node(pos_parent);
  if (!contains(neg_parent)) bad_node(neg_parent);
  NodeId id = allocate();
  auto& n = nodes_[id];
  n.kind = NodeKind::kInner;
  n.clause = std::move(clause);
  n.pivot = pivot;
  n.parent_pos = pos_parent;
  n.parent_neg = neg_parent;
  add_edge(pos_parent, id);
  add_edge(neg_parent, id);
  // While a proof is built bottom-up the root moves to whichever node
  // consumes it.
  if (root_ == pos_parent || root_ == neg_parent) root_ = id;
  return id;
}

void ResolutionProof::set_root(NodeId n) {
  if (!contains(n)) bad_node(n);
  root_ = n;
}

std::size_t ResolutionProof::inner_count() const {
  std::size_t count = 0;
  for (const auto& n : nodes_)
    if (n.alive && n.is_inner()) ++count;
  return count;
}

std::vector<NodeId> ResolutionProof::ids() const {
  std::vector<NodeId> out;
  out.reserve(alive_);
  for (NodeId i = 0; i < nodes_.size(); ++i)
    if (nodes_[i].alive) out.push_back(i);
  return out;
}

void ResolutionProof::set_parents(NodeId n, NodeId pos_parent, NodeId neg_parent,
                                  Var pivot) {
  auto& node = mut(n);
  if (!contains(pos_parent)) bad_node(pos_parent);
  if (!contains(neg_parent)) bad_node(neg_parent);
  if (node.is_inner()) {
    remove_edge(node.parent_pos, n);
    remove_edge(node.parent_neg, n);
  }
  node.kind = NodeKind::kInner;
  node.parent_pos = pos_parent;
  node.parent_neg = neg_parent;
  node.pivot = pivot;
  node.origin = LeafOrigin::kUnknown;
  add_edge(pos_parent, n);
  add_edge(neg_parent, n);
}

void ResolutionProof::set_clause(NodeId n, Clause clause) {
  mut(n).clause = std::move(clause);
}

void ResolutionProof::set_origin(NodeId n, LeafOrigin origin) { mut(n).origin = origin; }

void ResolutionProof::set_pinned(NodeId n, bool pinned) { mut(n).pinned = pinned; }

void ResolutionProof::make_leaf(NodeId n, Clause clause, LeafOrigin origin) {
  auto& node = mut(n);
  NodeId p = node.parent_pos, q = node.parent_neg;
  bool was_inner = node.is_inner();
  node.kind = NodeKind::kLeaf;
  node.parent_pos = node.parent_neg = kNoNode;
  node.pivot = 0;
  node.clause = std::move(clause);
  node.origin = origin;
  if (was_inner) {
    remove_edge(p, n);
    remove_edge(q, n);
    prune_if_orphan(p);
    if (q != p) prune_if_orphan(q);
  }
}

void ResolutionProof::move_children(NodeId from, NodeId to) {
  auto kids = std::move(mut(from).children);
  mut(from).children.clear();
  for (NodeId c : kids) {
    auto& child = mut(c);
    if (child.parent_pos == from)
      child.parent_pos = to;
    else
      child.parent_neg = to;
    add_edge(to, c);
  }
}

void ResolutionProof::move_child(NodeId from, NodeId child, NodeId to) {
  auto& c = mut(child);
  if (c.parent_pos == from)
    c.parent_pos = to;
  else if (c.parent_neg == from)
    c.parent_neg = to;
  else
    throw Error(ErrorCode::kInvalidNode, "node " + std::to_string(child) +
                                             " is not a child of " +
                                             std::to_string(from));
  remove_edge(from, child);
  add_edge(to, child);
}

std::vector<NodeId> ResolutionProof::prune_if_orphan(NodeId start) {
  std::vector<NodeId> deleted;
  std::vector<NodeId> work{start};
  while (!work.empty()) {
    NodeId n = work.back();
    work.pop_back();
    if (!contains(n) || n == root_) continue;
    auto& node = nodes_[n];
    if (node.pinned || !node.children.empty()) continue;
    if (node.is_inner()) {
      NodeId p = node.parent_pos, q = node.parent_neg;
      remove_edge(p, n);
      remove_edge(q, n);
      work.push_back(p);
      if (q != p) work.push_back(q);
    }
    release(n);
    deleted.push_back(n);
  }
  return deleted;
}

std::size_t ResolutionProof::collect_garbage() {
  std::vector<char> keep(nodes_.size(), 0);
  std::vector<NodeId> work;
  if (contains(root_)) work.push_back(root_);
  for (NodeId i = 0; i < nodes_.size(); ++i)
    if (nodes_[i].alive && nodes_[i].pinned) work.push_back(i);
  while (!work.empty()) {
    NodeId n = work.back();
    work.pop_back();
    if (keep[n]) continue;
    keep[n] = 1;
    const auto& node = nodes_[n];
    if (node.is_inner()) {
      if (contains(node.parent_pos)) work.push_back(node.parent_pos);
      if (contains(node.parent_neg)) work.push_back(node.parent_neg);
    }
  }
  std::size_t removed = 0;
  for (NodeId i = 0; i < nodes_.size(); ++i) {
    if (!nodes_[i].alive || keep[i]) continue;
    auto& node = nodes_[i];
    if (node.is_inner()) {
      if (contains(node.parent_pos) && keep[node.parent_pos])
        remove_edge(node.parent_pos, i);
      if (contains(node.parent_neg) && keep[node.parent_neg])
        remove_edge(node.parent_neg, i);
    }
  }
  for (NodeId i = 0; i < nodes_.size(); ++i) {
    if (nodes_[i].alive && !keep[i]) {
      release(i);
      ++removed;
    }
  }
  return removed;
}

std::vector<NodeId> topological_order(const ResolutionProof& proof, Direction direction) {
  std::vector<NodeId> out;
  NodeId root = proof.root();
  if (!proof.contains(root)) return out;
  out.reserve(proof.size());
  std::vector<std::uint8_t> color(proof.id_bound(), 0);  // 0 new, 1 open, 2 done
  std::vector<NodeId> stack{root};
  while (!stack.empty()) {
    NodeId n = stack.back();
    if (color[n] == 0) {
      color[n] = 1;
      const auto& node = proof.node(n);
      if (node.is_inner()) {
        // Pushed neg first so that the pos parent is finished first.
        for (NodeId p : {node.parent_neg, node.parent_pos}) {
          if (color[p] == 1)
            throw Error(ErrorCode::kCycleDetected,
                        "cycle through node " + std::to_string(p));
          if (color[p] == 0) stack.push_back(p);
        }
      }
    } else {
      stack.pop_back();
      if (color[n] == 1) {
        color[n] = 2;
        out.push_back(n);
      }
    }
  }
  if (direction == Direction::kBottomUp) std::reverse(out.begin(), out.end());
  return out;
}

NodeId substitute(ResolutionProof& proof, NodeId n, NodeId replacement) {
  if (n == replacement) return n;
  proof.node(n);
  if (!proof.contains(replacement))
    throw Error(ErrorCode::kInvalidNode, "replacement " + std::to_string(replacement));
  bool was_root = proof.root() == n;
  proof.move_children(n, replacement);
  if (was_root) proof.set_root(replacement);
  // n is childless and no longer the root, so pruning deletes it together
  // with any ancestors that only served it.
  proof.prune_if_orphan(n);
  if (was_root && !proof.node(replacement).children.empty()) proof.collect_garbage();
  return replacement;
}

NodeId replace_with_parent(ResolutionProof& proof, NodeId n, Side side) {
  const auto& node = proof.node(n);
  if (!node.is_inner())
    throw Error(ErrorCode::kInvalidNode, "node " + std::to_string(n) + " is a leaf");
  return substitute(proof, n, node.parent(side));
}

NodeId split_node(ResolutionProof& proof, NodeId n, NodeId keep_child) {
  const auto& node = proof.node(n);
  if (node.children.size() < 2)
    throw Error(ErrorCode::kSingleChild,
                "node " + std::to_string(n) + " has fewer than two children");
  if (std::find(node.children.begin(), node.children.end(), keep_child) ==
      node.children.end())
    throw Error(ErrorCode::kInvalidNode, "node " + std::to_string(keep_child) +
                                             " is not a child of " + std::to_string(n));
  NodeId copy;
  if (node.is_inner()) {
    copy = proof.add_inner_unchecked(node.parent_pos, node.parent_neg, node.pivot,
                                     node.clause);
  } else {
    copy = proof.add_leaf(node.clause, node.origin);
  }
  std::vector<NodeId> movers;
  for (NodeId c : proof.node(n).children)
    if (c != keep_child) movers.push_back(c);
  for (NodeId c : movers) proof.move_child(n, c, copy);
  return copy;
}

std::vector<Clause> unsat_core(const ResolutionProof& proof) {
  if (!proof.contains(proof.root()) || !proof.clause(proof.root()).empty())
    throw Error(ErrorCode::kNotARefutation, "root clause is not empty");
  std::set<Clause> core;
  for (NodeId n : topological_order(proof, Direction::kTopDown))
    if (proof.node(n).is_leaf()) core.insert(proof.clause(n));
  return {core.begin(), core.end()};
}

bool is_refutation(const ResolutionProof& proof) {
  return proof.contains(proof.root()) && proof.clause(proof.root()).empty();
}

std::size_t LegalityReport::count(ViolationKind kind) const {
  return static_cast<std::size_t>(std::count_if(
      violations.begin(), violations.end(),
      [kind](const Violation& v) { return v.kind == kind; }));
}

std::string LegalityReport::to_string() const {
  std::string out;
  for (const auto& v : violations) {
    out += "node ";
    out += v.node == kNoNode ? std::string("-") : std::to_string(v.node);
    out += ": " + v.message + "\n";
  }
  return out;
}

LegalityReport check_legal(const ResolutionProof& proof) {
  LegalityReport report;
  auto add = [&](ViolationKind k, NodeId n, std::string msg) {
    report.violations.push_back({k, n, std::move(msg)});
  };
  const NodeId root = proof.root();
  if (!proof.contains(root)) {
    add(ViolationKind::kNoRoot, kNoNode, "proof has no root");
    return report;
  }
  auto ids = proof.ids();
  bool dangling = false;

  // Edge multisets implied by parent slots and by children lists.
  std::vector<std::pair<NodeId, NodeId>> from_slots, from_lists;
  for (NodeId n : ids) {
    const auto& node = proof.node(n);
    for (NodeId c : node.children) from_lists.emplace_back(n, c);
    if (node.is_leaf()) continue;
    bool ok = true;
    for (NodeId p : {node.parent_pos, node.parent_neg}) {
      if (!proof.contains(p)) {
        add(ViolationKind::kDanglingLink, n, "parent " + std::to_string(p) + " does not exist");
        ok = false;
        dangling = true;
      } else {
        from_slots.emplace_back(p, n);
      }
    }
    if (!ok) continue;
    const Clause& cp = proof.clause(node.parent_pos);
    const Clause& cn = proof.clause(node.parent_neg);
    if (!cp.contains(pos(node.pivot)) || !cn.contains(neg(node.pivot))) {
      add(ViolationKind::kMissingPivot, n,
          "pivot " + std::to_string(node.pivot) + " missing from a parent");
      continue;
    }
    try {
      Clause r = resolve(cp, cn, node.pivot);
      if (r != node.clause)
        add(ViolationKind::kWrongResolvent, n,
            "clause {" + node.clause.to_string() + "} but resolvent is {" + r.to_string() + "}");
    } catch (const Error& e) {
      add(ViolationKind::kWrongResolvent, n, e.what());
    }
  }
  for (const auto& [p, c] : from_lists) {
    if (!proof.contains(c)) {
      add(ViolationKind::kDanglingLink, p, "child " + std::to_string(c) + " does not exist");
      dangling = true;
    }
  }
  std::sort(from_slots.begin(), from_slots.end());
  std::sort(from_lists.begin(), from_lists.end());
  if (from_slots != from_lists) {
    std::vector<std::pair<NodeId, NodeId>> diff;
    std::set_symmetric_difference(from_slots.begin(), from_slots.end(), from_lists.begin(),
                                  from_lists.end(), std::back_inserter(diff));
    for (const auto& [p, c] : diff)
      add(ViolationKind::kInconsistentChildren, c,
          "edge " + std::to_string(p) + " -> " + std::to_string(c) +
              " is not recorded on both ends");
  }
  if (!proof.node(root).children.empty())
    add(ViolationKind::kRootHasChildren, root, "root has children");

  // Cycle detection over all nodes, following valid parent links only.
  std::vector<std::uint8_t> color(proof.id_bound(), 0);
  bool cyclic = false;
  for (NodeId start : ids) {
    if (color[start] != 0) continue;
    std::vector<NodeId> stack{start};
    while (!stack.empty()) {
      NodeId n = stack.back();
      if (color[n] == 0) {
        color[n] = 1;
        const auto& node = proof.node(n);
        if (!node.is_inner()) continue;
        for (NodeId p : {node.parent_neg, node.parent_pos}) {
          if (!proof.contains(p)) continue;
          if (color[p] == 1) {
            if (!cyclic) add(ViolationKind::kCycle, p, "node lies on a cycle");
            cyclic = true;
          } else if (color[p] == 0) {
            stack.push_back(p);
          }
        }
      } else {
        stack.pop_back();
        if (color[n] == 1) color[n] = 2;
      }
    }
  }
  if (!cyclic && !dangling) {
    std::vector<char> reached(proof.id_bound(), 0);
    for (NodeId n : topological_order(proof, Direction::kTopDown)) reached[n] = 1;
    for (NodeId n : ids)
      if (!reached[n] && !proof.node(n).pinned)
        add(ViolationKind::kDetachedNode, n, "node does not reach the root");
  }
  return report;
}

bool isomorphic(const ResolutionProof& a, const ResolutionProof& b) {
  if (a.size() != b.size()) return false;
  if (!a.contains(a.root()) || !b.contains(b.root())) return false;
  std::unordered_map<NodeId, NodeId> ab, ba;
  std::vector<std::pair<NodeId, NodeId>> work{{a.root(), b.root()}};
  while (!work.empty()) {
    auto [x, y] = work.back();
    work.pop_back();
    auto fx = ab.find(x);
    auto fy = ba.find(y);
    if (fx != ab.end() || fy != ba.end()) {
      if (fx == ab.end() || fy == ba.end() || fx->second != y || fy->second != x) return false;
      continue;
    }
    ab[x] = y;
    ba[y] = x;
    const auto& nx = a.node(x);
    const auto& ny = b.node(y);
    if (nx.kind != ny.kind || nx.clause != ny.clause) return false;
    if (nx.children.size() != ny.children.size()) return false;
    if (nx.is_inner()) {
      if (nx.pivot != ny.pivot) return false;
      work.emplace_back(nx.parent_pos, ny.parent_pos);
      work.emplace_back(nx.parent_neg, ny.parent_neg);
    }
  }
  return ab.size() == a.size();
}

}  // namespace resproof
