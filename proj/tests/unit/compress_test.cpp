#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "resproof/compress.hpp"
#include "resproof/error.hpp"

using namespace resproof;
using namespace resproof::testing;

namespace {

std::vector<Literal> lits(std::initializer_list<int> d) {
  Clause c(d);
  return {c.literals().begin(), c.literals().end()};
}

void expect_sound(const ResolutionProof& p, const CorpusItem& item) {
  auto rep = check_legal(p);
  EXPECT_TRUE(rep.legal()) << item.name << ": " << rep.to_string();
  EXPECT_TRUE(is_refutation(p)) << item.name;
  EXPECT_TRUE(leaves_within(p, item.cnf)) << item.name;
}

const std::vector<CorpusItem>& corpus() {
  static const auto items = [] {
    CorpusSpec spec;
    spec.count = 60;
    spec.seed = 99;
    return make_corpus(spec);
  }();
  return items;
}

}  // namespace

TEST(RecyclePivots, WorkedExample) {
  auto f = recycle_start();
  EXPECT_EQ(recycle_pivots(f.proof), 1u);
  EXPECT_TRUE(check_legal(f.proof).legal());
  EXPECT_TRUE(isomorphic(f.proof, recycle_expected().proof));
}

TEST(RecyclePivots, ResetAtSharedNodes) {
  // -pq is shared in the DAG figure; nothing there is provably redundant.
  auto f = fig_dag();
  EXPECT_EQ(recycle_pivots(f.proof), 0u);
  EXPECT_EQ(f.proof.size(), 6u);
}

TEST(Rpi, RemovableLiteralsOfIntersectionFigure) {
  auto f = rpi_start();
  auto rl = removable_literals(f.proof);
  EXPECT_EQ(rl[f.proof.root()], lits({R}));
  EXPECT_EQ(rl[f.at["rp"]], lits({R, P}));
  EXPECT_EQ(rl[f.at["rs"]], lits({R, P, S}));
  EXPECT_EQ(rl[f.at["r-sp"]], lits({R, P, -S}));
  EXPECT_EQ(rl[f.at["qr"]], lits({R, P, Q}));
}

TEST(Rpi, IntersectionFigure) {
  auto f = rpi_start();
  EXPECT_EQ(f.proof.size(), 10u);
  EXPECT_EQ(recycle_pivots_intersection(f.proof), 1u);
  EXPECT_TRUE(check_legal(f.proof).legal());
  EXPECT_FALSE(f.proof.contains(f.at["-pr"]));
  EXPECT_EQ(f.proof.size(), 8u);
  EXPECT_TRUE(isomorphic(f.proof, rpi_expected().proof));
}

TEST(Rpi, PlainRecyclePivotsMissesSharedNode) {
  auto f = rpi_start();
  recycle_pivots(f.proof);
  EXPECT_EQ(f.proof.size(), 10u);
}

TEST(Pushdown, WorkedExample) {
  auto f = pushdown_start();
  auto report = pushdown_units(f.proof);
  EXPECT_EQ(report.collected, (std::vector<Literal>{neg(P), neg(R)}));
  EXPECT_EQ(report.reinserted, (std::vector<Literal>{neg(P), neg(R)}));
  EXPECT_TRUE(check_legal(f.proof).legal());
  EXPECT_EQ(f.proof.clause(f.proof.root()), Clause{U});
  EXPECT_EQ(f.proof.size(), 9u);
  EXPECT_TRUE(isomorphic(f.proof, pushdown_expected().proof));
}

TEST(Pushdown, NoUnitsNoChange) {
  auto f = fig_dag();
  auto report = pushdown_units(f.proof);
  EXPECT_TRUE(report.collected.empty());
  EXPECT_EQ(f.proof.size(), 6u);
}

TEST(StructuralHashing, SplitThenMerge) {
  auto f = fig_dag();
  split_node(f.proof, f.at["-pq"], f.at["oq"]);
  EXPECT_EQ(f.proof.size(), 7u);
  EXPECT_EQ(structural_hashing(f.proof), 1u);
  EXPECT_EQ(f.proof.size(), 6u);
  EXPECT_TRUE(check_legal(f.proof).legal());
}

TEST(StructuralHashing, FoldsUnrolledTree) {
  auto tree = unroll(fig_dag().proof);
  EXPECT_EQ(tree.size(), 7u);
  structural_hashing(tree);
  EXPECT_TRUE(isomorphic(tree, fig_dag().proof));
  EXPECT_EQ(tree.size(), 6u);
}

TEST(StructuralHashing, KeepsDistinctOrigins) {
  ResolutionProof p;
  NodeId a = p.add_leaf(Clause{1}, LeafOrigin::kA);
  NodeId b = p.add_leaf(Clause{1}, LeafOrigin::kB);
  NodeId na = p.add_leaf(Clause{-1, 2}), nb = p.add_leaf(Clause{-1, -2});
  p.set_root(p.add_resolvent(p.add_resolvent(a, na), p.add_resolvent(b, nb)));
  EXPECT_EQ(structural_hashing(p), 0u);
}

TEST(Plan, Parse) {
  auto plan = parse_plan("pu,sh,rpi,re", 5, 3);
  ASSERT_EQ(plan.stages.size(), 4u);
  EXPECT_EQ(plan.stages[3].kind, StageKind::kRE);
  EXPECT_EQ(plan.stages[3].num_traversals, 5u);
  EXPECT_EQ(plan.num_global_iterations, 3u);
  EXPECT_EQ(parse_plan("RE:7").stages[0].num_traversals, 7u);
  EXPECT_STREQ(stage_name(StageKind::kRPI), "rpi");
  for (const char* bad : {"", "xx", "re:q"}) EXPECT_THROW(parse_plan(bad), Error);
  EXPECT_THROW(parse_plan("rp", 1, 0), Error);
}

TEST(Metrics, Reduction) {
  EXPECT_DOUBLE_EQ(reduction_percent(10, 8), 20.0);
  EXPECT_DOUBLE_EQ(reduction_percent(0, 0), 0.0);
  auto before = rpi_start();
  auto after = rpi_expected();
  auto m = metrics(before.proof, after.proof);
  EXPECT_EQ(m.nodes_before, 10u);
  EXPECT_EQ(m.nodes_after, 8u);
  EXPECT_EQ(m.edges_before, 10u);
  EXPECT_EQ(m.edges_after, 8u);
  EXPECT_EQ(m.core_before, 5u);
  EXPECT_EQ(m.core_after, 4u);
  EXPECT_DOUBLE_EQ(m.red_nodes(), 20.0);
  EXPECT_EQ(metrics_csv_header().substr(0, 5), "name,");
  EXPECT_EQ(metrics_csv_row("x", m), "x,10,8,10,8,5,4,0.000");
}

TEST(Pipeline, RpiPlanOnFigure) {
  auto f = rpi_start();
  auto m = run_pipeline(f.proof, parse_plan("rpi"), RuleStrategy::compression());
  EXPECT_EQ(m.nodes_after, 8u);
  EXPECT_TRUE(isomorphic(f.proof, rpi_expected().proof));
}

TEST(Corpus, EveryAlgorithmSoundAndMonotone) {
  for (const auto& item : corpus()) {
    std::size_t n = item.proof.size();
    {
      auto p = item.proof;
      recycle_pivots(p);
      expect_sound(p, item);
      EXPECT_LE(p.size(), n);
    }
    {
      auto p = item.proof;
      recycle_pivots_intersection(p);
      expect_sound(p, item);
      EXPECT_LE(p.size(), n);
    }
    {
      auto p = item.proof;
      pushdown_units(p);
      expect_sound(p, item);
      EXPECT_LE(p.size(), n);
    }
    {
      auto p = item.proof;
      structural_hashing(p);
      expect_sound(p, item);
      EXPECT_LE(p.size(), n);
    }
  }
}

TEST(Corpus, RpiRemovesAtLeastWhatRpRemovesOnTrees) {
  // On a tree every node has one child, so both variants compute the same RL.
  for (std::size_t i = 0; i < 10; ++i) {
    auto tree = unroll(corpus()[i].proof);
    if (tree.size() > 4000) continue;
    auto a = tree, b = tree;
    recycle_pivots(a);
    recycle_pivots_intersection(b);
    EXPECT_LE(b.size(), a.size());
  }
}

TEST(Corpus, FullPipelineWithLoops) {
  for (std::size_t loops : {2, 3}) {
    for (const auto& item : corpus()) {
      auto p = item.proof;
      auto m = run_pipeline(p, parse_plan("pu,sh,rpi,re", 3, loops), RuleStrategy::compression());
      expect_sound(p, item);
      EXPECT_EQ(m.nodes_after, p.size());
    }
  }
}
