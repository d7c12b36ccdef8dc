#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "resproof/clause.hpp"

namespace resproof {

using NodeId = std::uint32_t;
inline constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();

enum class NodeKind : std::uint8_t { kLeaf, kInner };
enum class Side : std::uint8_t { kPos, kNeg };
// Partition tag of a leaf, used by interpolation.
enum class LeafOrigin : std::uint8_t { kUnknown, kA, kB, kTheoryLemma };
enum class Direction : std::uint8_t { kTopDown, kBottomUp };

inline Side opposite(Side s) { return s == Side::kPos ? Side::kNeg : Side::kPos; }

struct ProofNode {
  Clause clause;
  NodeKind kind = NodeKind::kLeaf;
  Var pivot = 0;
  NodeId parent_pos = kNoNode;
  NodeId parent_neg = kNoNode;
  // One entry per edge: a child resolving this node against itself on both
  // sides would be listed twice.
  std::vector<NodeId> children;
  LeafOrigin origin = LeafOrigin::kUnknown;
  // Creation stamp; ids are recycled, stamps are not.
  std::uint64_t stamp = 0;
  bool alive = false;
  bool pinned = false;

  bool is_leaf() const { return kind == NodeKind::kLeaf; }
  bool is_inner() const { return kind == NodeKind::kInner; }
  NodeId parent(Side s) const { return s == Side::kPos ? parent_pos : parent_neg; }
};

class ResolutionProof {
 public:
  NodeId add_leaf(Clause clause, LeafOrigin origin = LeafOrigin::kUnknown);
  // `a` and `b` may be given in either order; the resolvent is computed.
  NodeId add_resolvent(NodeId a, NodeId b, Var pivot);
  NodeId add_resolvent(NodeId a, NodeId b);
  // Stores `clause` as given. For parsers and tests that build illegal
  // states on purpose.
  NodeId add_inner_unchecked(NodeId pos, NodeId neg, Var pivot, Clause clause);

  NodeId root() const { return root_; }
  void set_root(NodeId n);

  bool contains(NodeId n) const { return n < nodes_.size() && nodes_[n].alive; }
  const ProofNode& node(NodeId n) const;
  const Clause& clause(NodeId n) const { return node(n).clause; }
  std::size_t size() const { return alive_; }
  std::size_t inner_count() const;
  std::size_t edge_count() const { return 2 * inner_count(); }
  // Every valid id is below this bound.
  std::size_t id_bound() const { return nodes_.size(); }
  std::vector<NodeId> ids() const;

  // --- mutation; children lists are kept consistent, nothing is pruned ---
  void set_parents(NodeId n, NodeId pos, NodeId neg, Var pivot);
  void set_clause(NodeId n, Clause clause);
  void set_origin(NodeId n, LeafOrigin origin);
  void set_pinned(NodeId n, bool pinned);
  // Turns n into a leaf; its former parents are pruned if orphaned.
  void make_leaf(NodeId n, Clause clause, LeafOrigin origin);
  // Every child edge of `from` is redirected to `to`.
  void move_children(NodeId from, NodeId to);
  // Redirects the single edge from -> child to to -> child.
  void move_child(NodeId from, NodeId child, NodeId to);

  // Deletes n if it is childless, not the root and not pinned, then does the
  // same for its former parents. Returns the deleted ids.
  std::vector<NodeId> prune_if_orphan(NodeId n);
  // Deletes every node that reaches neither the root nor a pinned node.
  std::size_t collect_garbage();

  // Direct access that bypasses every invariant; tests use it to build
  // corrupted graphs.
  ProofNode& raw_node(NodeId n) { return nodes_.at(n); }

 private:
  NodeId allocate();
  void release(NodeId n);
  void add_edge(NodeId parent, NodeId child);
  void remove_edge(NodeId parent, NodeId child);
  ProofNode& mut(NodeId n);

  std::vector<ProofNode> nodes_;
  std::vector<NodeId> free_;
  NodeId root_ = kNoNode;
  std::size_t alive_ = 0;
  std::uint64_t next_stamp_ = 1;
};

// Iterative DFS over parent links from the root. kTopDown lists every node
// after both of its parents; kBottomUp is the reverse. Nodes that do not
// reach the root are not listed. Throws kCycleDetected.
std::vector<NodeId> topological_order(const ResolutionProof& proof,
                                      Direction direction);

// The chosen parent takes over n's children (and the root role); n is
// deleted and the other parent pruned if it has no children left.
NodeId replace_with_parent(ResolutionProof& proof, NodeId n, Side side);

// Generalisation of replace_with_parent: `replacement` must be an ancestor
// of n or otherwise not a descendant of it.
NodeId substitute(ResolutionProof& proof, NodeId n, NodeId replacement);

// Copies n; the copy takes every child except keep_child. Returns the copy.
NodeId split_node(ResolutionProof& proof, NodeId n, NodeId keep_child);

// Distinct leaf clauses reachable from the root, sorted.
std::vector<Clause> unsat_core(const ResolutionProof& proof);

enum class ViolationKind {
  kWrongResolvent,
  kMissingPivot,
  kCycle,
  kDanglingLink,
  kInconsistentChildren,
  kTautologicalClause,
  kRootHasChildren,
  kDetachedNode,
  kNoRoot,
};

struct Violation {
  ViolationKind kind;
  NodeId node = kNoNode;
  std::string message;
};

struct LegalityReport {
  std::vector<Violation> violations;
  bool legal() const { return violations.empty(); }
  std::size_t count(ViolationKind kind) const;
  std::string to_string() const;
};

LegalityReport check_legal(const ResolutionProof& proof);

bool is_refutation(const ResolutionProof& proof);

// Rooted isomorphism that respects the pos/neg orientation of parents and
// compares clauses and pivots.
bool isomorphic(const ResolutionProof& a, const ResolutionProof& b);

}  // namespace resproof
