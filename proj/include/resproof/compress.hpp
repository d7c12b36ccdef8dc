#pragma once

#include <chrono>
#include <cstddef>
#include <string>
#include <vector>

#include "resproof/proof.hpp"
#include "resproof/transform.hpp"

namespace resproof {

// Depth-first from the root; RL is reset at nodes with several children.
// Returns the number of severed steps.
std::size_t recycle_pivots(ResolutionProof& proof);

// Bottom-up variant that intersects RL over all children. The root's RL is
// seeded with the root clause.
std::size_t recycle_pivots_intersection(ResolutionProof& proof);

// Removable literals per node as computed by the intersection variant,
// without modifying the proof. Indexed by node id; entries of dead or
// unreachable nodes are empty. Each set is sorted.
std::vector<std::vector<Literal>> removable_literals(const ResolutionProof& proof);

struct PushdownReport {
  // Units in collection order, duplicates by literal removed.
  std::vector<Literal> collected;
  // Units resolved back in at the bottom, in tail order.
  std::vector<Literal> reinserted;
};

PushdownReport pushdown_units(ResolutionProof& proof);

// Merges inner nodes with the same ordered parent pair, and leaves with the
// same clause and origin. Returns the number of merged nodes.
std::size_t structural_hashing(ResolutionProof& proof);

enum class StageKind { kPU, kSH, kRP, kRPI, kRE };

struct Stage {
  StageKind kind;
  std::size_t num_traversals = 0;  // RE only
};

struct PipelinePlan {
  std::vector<Stage> stages;
  std::size_t num_global_iterations = 1;
  std::chrono::nanoseconds time_limit = kNoTimeLimit;
};

const char* stage_name(StageKind kind);
// "pu,sh,rpi,re" style; "re" takes `traversals`, "re:N" overrides it.
// Throws kInvalidArgument.
PipelinePlan parse_plan(const std::string& text, std::size_t traversals = 1,
                        std::size_t loops = 1);

struct CompressionMetrics {
  std::size_t nodes_before = 0, nodes_after = 0;
  std::size_t edges_before = 0, edges_after = 0;
  std::size_t core_before = 0, core_after = 0;
  std::chrono::nanoseconds wall_time{0};

  double red_nodes() const;
  double red_edges() const;
  double red_core() const;
};

// Percentage reduction, 0 when before is 0.
double reduction_percent(std::size_t before, std::size_t after);

CompressionMetrics metrics(const ResolutionProof& before, const ResolutionProof& after);

CompressionMetrics run_pipeline(ResolutionProof& proof, const PipelinePlan& plan,
                                const RuleStrategy& strategy);

std::string metrics_csv_header();
std::string metrics_csv_row(const std::string& name, const CompressionMetrics& m);

}  // namespace resproof
