#include <algorithm>
#include <cstdio>
#include <set>
#include <sstream>

#include "resproof/compress.hpp"
#include "resproof/error.hpp"

namespace resproof {

const char* stage_name(StageKind kind) {
  switch (kind) {
    case StageKind::kPU: return "pu";
    case StageKind::kSH: return "sh";
    case StageKind::kRP: return "rp";
    case StageKind::kRPI: return "rpi";
    case StageKind::kRE: return "re";
  }
  return "?";
}

PipelinePlan parse_plan(const std::string& text, std::size_t traversals, std::size_t loops) {
  PipelinePlan plan;
  plan.num_global_iterations = loops;
  if (loops == 0) throw Error(ErrorCode::kInvalidArgument, "loops must be at least 1");
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::string name = item;
    std::size_t travs = traversals;
    if (auto colon = item.find(':'); colon != std::string::npos) {
      name = item.substr(0, colon);
      try {
        travs = std::stoul(item.substr(colon + 1));
      } catch (const std::exception&) {
        throw Error(ErrorCode::kInvalidArgument, "bad traversal count in '" + item + "'");
      }
    }
    std::transform(name.begin(), name.end(), name.begin(), ::tolower);
    if (name == "pu") plan.stages.push_back({StageKind::kPU});
    else if (name == "sh") plan.stages.push_back({StageKind::kSH});
    else if (name == "rp") plan.stages.push_back({StageKind::kRP});
    else if (name == "rpi") plan.stages.push_back({StageKind::kRPI});
    else if (name == "re") plan.stages.push_back({StageKind::kRE, travs});
    else if (!name.empty())
      throw Error(ErrorCode::kInvalidArgument, "unknown stage '" + name + "'");
  }
  if (plan.stages.empty()) throw Error(ErrorCode::kInvalidArgument, "empty plan");
  return plan;
}

double reduction_percent(std::size_t before, std::size_t after) {
  if (before == 0) return 0.0;
  return 100.0 * (static_cast<double>(before) - static_cast<double>(after)) /
         static_cast<double>(before);
}

double CompressionMetrics::red_nodes() const { return reduction_percent(nodes_before, nodes_after); }
double CompressionMetrics::red_edges() const { return reduction_percent(edges_before, edges_after); }
double CompressionMetrics::red_core() const { return reduction_percent(core_before, core_after); }

namespace {

std::size_t core_size(const ResolutionProof& proof) {
  std::set<Clause> core;
  for (NodeId n : topological_order(proof, Direction::kTopDown))
    if (proof.node(n).is_leaf()) core.insert(proof.clause(n));
  return core.size();
}

}  // namespace

CompressionMetrics metrics(const ResolutionProof& before, const ResolutionProof& after) {
  CompressionMetrics m;
  m.nodes_before = before.size();
  m.nodes_after = after.size();
  m.edges_before = before.edge_count();
  m.edges_after = after.edge_count();
  m.core_before = core_size(before);
  m.core_after = core_size(after);
  return m;
}

CompressionMetrics run_pipeline(ResolutionProof& proof, const PipelinePlan& plan,
                                const RuleStrategy& strategy) {
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  CompressionMetrics m;
  m.nodes_before = proof.size();
  m.edges_before = proof.edge_count();
  m.core_before = core_size(proof);

  const std::size_t loops = std::max<std::size_t>(plan.num_global_iterations, 1);
  const auto timeslot =
      plan.time_limit == kNoTimeLimit
          ? kNoTimeLimit
          : plan.time_limit / static_cast<std::chrono::nanoseconds::rep>(loops);
  bool has_pu = std::any_of(plan.stages.begin(), plan.stages.end(),
                            [](const Stage& s) { return s.kind == StageKind::kPU; });
  bool only_pu = std::all_of(plan.stages.begin(), plan.stages.end(),
                             [](const Stage& s) { return s.kind == StageKind::kPU; });
  if (has_pu) pushdown_units(proof);
  if (!only_pu) {
    for (std::size_t i = 0; i < loops; ++i) {
      const auto slot_start = Clock::now();
      for (const auto& stage : plan.stages) {
        switch (stage.kind) {
          case StageKind::kSH: structural_hashing(proof); break;
          case StageKind::kRP: recycle_pivots(proof); break;
          case StageKind::kRPI: recycle_pivots_intersection(proof); break;
          default: break;
        }
      }
      for (const auto& stage : plan.stages) {
        if (stage.kind != StageKind::kRE) continue;
        std::chrono::nanoseconds budget = kNoTimeLimit;
        if (timeslot != kNoTimeLimit) {
          auto used = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - slot_start);
          budget = std::max(timeslot - used, std::chrono::nanoseconds{0});
        }
        reduce_and_expose(proof, stage.num_traversals, budget, strategy);
      }
    }
  }

  m.nodes_after = proof.size();
  m.edges_after = proof.edge_count();
  m.core_after = core_size(proof);
  m.wall_time = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start);
  return m;
}

std::string metrics_csv_header() {
  return "name,nodes_before,nodes_after,edges_before,edges_after,core_before,core_after,time_ms";
}

std::string metrics_csv_row(const std::string& name, const CompressionMetrics& m) {
  char time[32];
  std::snprintf(time, sizeof time, "%.3f",
                std::chrono::duration<double, std::milli>(m.wall_time).count());
  std::ostringstream out;
  out << name << ',' << m.nodes_before << ',' << m.nodes_after << ',' << m.edges_before << ','
      << m.edges_after << ',' << m.core_before << ',' << m.core_after << ',' << time;
  return out.str();
}

}  // namespace resproof
