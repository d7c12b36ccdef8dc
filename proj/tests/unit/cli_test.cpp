#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "fixtures.hpp"
#include "resproof/cli.hpp"
#include "resproof/io.hpp"
#include "resproof/sat.hpp"

using namespace resproof;
using namespace resproof::testing;
namespace fs = std::filesystem;

namespace {

const fs::path kData = RESPROOF_EXAMPLE_DIR;

struct Run {
  int rc;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "resproof");
  std::ostringstream out, err;
  int rc = run_cli(args, out, err);
  return {rc, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("resproof_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  std::string data(const std::string& name) const { return (kData / name).string(); }
  fs::path dir_;
};

}  // namespace

TEST_F(Cli, CheckDagFigure) {
  auto r = run({"check", data("fig2.trace")});
  EXPECT_EQ(r.rc, kExitOk) << r.err;
  EXPECT_NE(r.out.find("legal proof"), std::string::npos);
}

TEST_F(Cli, CheckReportsViolation) {
  write_file(path("bad.trace"), "1 1 0 0\n2 -1 2 0 0\n3 3 0 1 2 0\n");
  auto r = run({"check", path("bad.trace")});
  EXPECT_EQ(r.rc, kExitViolation);
  EXPECT_NE(r.out.find("but resolvent is {2}"), std::string::npos) << r.out;
}

TEST_F(Cli, ParseErrorIsViolation) {
  write_file(path("bad.trace"), "1 1 0 0\n2 -1 0 1 7 0\n");
  auto r = run({"compress", path("bad.trace"), "--plan", "rp"});
  EXPECT_EQ(r.rc, kExitViolation);
  EXPECT_NE(r.err.find("DanglingAntecedent"), std::string::npos) << r.err;
}

TEST_F(Cli, CompressIntersectionFigure) {
  auto r = run({"compress", "--plan", "rpi", data("fig8.trace"), "-o", path("out.trace")});
  ASSERT_EQ(r.rc, kExitOk) << r.err;
  auto p = parse_tracecheck(read_file(path("out.trace")));
  EXPECT_TRUE(isomorphic(p, rpi_expected().proof));
  EXPECT_EQ(run({"check", path("out.trace")}).rc, kExitOk);
}

TEST_F(Cli, CompressIsDeterministic) {
  std::mt19937_64 rng(5);
  auto cnf = random_kcnf(rng, 12, 66);
  write_file(path("f.cnf"), write_dimacs(cnf));
  std::vector<std::string> args{"compress", path("f.cnf"), "--plan", "pu,sh,rpi,re",
                                "--loops", "2", "--travs", "3", "--seed", "7"};
  auto a = args, b = args;
  a.insert(a.end(), {"-o", path("a.trace")});
  b.insert(b.end(), {"-o", path("b.trace")});
  auto ra = run(a), rb = run(b);
  if (ra.rc == kExitViolation) GTEST_SKIP() << "instance is satisfiable";
  ASSERT_EQ(ra.rc, kExitOk) << ra.err;
  ASSERT_EQ(rb.rc, kExitOk);
  EXPECT_EQ(read_file(path("a.trace")), read_file(path("b.trace")));
  EXPECT_EQ(run({"check", path("a.trace")}).rc, kExitOk);
}

TEST_F(Cli, CompressMetricsCsv) {
  auto r = run({"compress", data("fig8.trace"), "--plan", "rpi", "--metrics", "-"});
  ASSERT_EQ(r.rc, kExitOk);
  EXPECT_NE(r.out.find("fig8.trace,10,8,10,8,5,4,"), std::string::npos) << r.out;
}

TEST_F(Cli, RatioNeedsSolveTimeOnProofs) {
  auto r = run({"compress", data("fig8.trace"), "--plan", "re", "--ratio", "0.5"});
  EXPECT_EQ(r.rc, kExitUsage);
  r = run({"compress", data("fig8.trace"), "--plan", "re", "--ratio", "0.5", "--solve-time", "10"});
  EXPECT_EQ(r.rc, kExitOk) << r.err;
}

TEST_F(Cli, InterpolateSmallExample) {
  for (const char* algo : {"mcmillan", "mcmillan-prime"}) {
    auto r = run({"interpolate", "--algo", algo, "--verify", data("ex.cnf")});
    EXPECT_EQ(r.rc, kExitOk) << r.err;
    EXPECT_EQ(r.out, "2\n");
    EXPECT_NE(r.err.find("c verified"), std::string::npos);
  }
}

TEST_F(Cli, InterpolateWithTwoFiles) {
  write_file(path("a.cnf"), "p cnf 2 2\n1 0\n-1 2 0\n");
  write_file(path("b.cnf"), "p cnf 2 1\n-2 0\n");
  auto r = run({"interpolate", "--a", path("a.cnf"), "--b", path("b.cnf"), "--verify",
                "--reorder", "cnf", "--dimacs", path("i.cnf")});
  EXPECT_EQ(r.rc, kExitOk) << r.err;
  EXPECT_EQ(r.out, "2\n");
  EXPECT_EQ(parse_dimacs(read_file(path("i.cnf"))).clauses, std::vector<Clause>{Clause{2}});
}

TEST_F(Cli, InterpolateNeedsPartition) {
  write_file(path("x.cnf"), "p cnf 1 2\n1 0\n-1 0\n");
  EXPECT_EQ(run({"interpolate", path("x.cnf")}).rc, kExitUsage);
}

TEST_F(Cli, ResourceLimitExitCode) {
  std::string a = "p cnf 25 25\n1 0\n";
  for (int v = 1; v < 25; ++v) a += std::to_string(-v) + " " + std::to_string(v + 1) + " 0\n";
  write_file(path("a.cnf"), a);
  write_file(path("b.cnf"), "p cnf 25 1\n-25 0\n");
  auto r = run({"interpolate", "--a", path("a.cnf"), "--b", path("b.cnf"), "--verify"});
  EXPECT_EQ(r.rc, kExitResource) << r.err;
}

TEST_F(Cli, ReorderAndExtractAxiomFigure) {
  auto r = run({"reorder", data("fig12.trace"), "--light", "5-8", "-o", path("r.trace")});
  ASSERT_EQ(r.rc, kExitOk) << r.err;
  EXPECT_NE(r.out.find("unordered 0"), std::string::npos);
  EXPECT_TRUE(isomorphic(parse_tracecheck(read_file(path("r.trace"))), axiom_expected().proof));
  auto e = run({"extract-lemmas", data("fig12.trace"), "--mixed", "5-8"});
  ASSERT_EQ(e.rc, kExitOk) << e.err;
  EXPECT_EQ(e.out, "-1 2 3 4 0\n");
  auto residue = run({"extract-lemmas", data("fig12.trace"), "--mixed", "5-8", "--no-reorder"});
  EXPECT_EQ(residue.rc, kExitViolation);
}

TEST_F(Cli, SolveAndCheck) {
  write_file(path("u.cnf"), "p cnf 2 4\n1 2 0\n-1 2 0\n1 -2 0\n-1 -2 0\n");
  auto r = run({"solve", path("u.cnf"), "-o", path("u.trace")});
  EXPECT_EQ(r.rc, kExitOk);
  EXPECT_NE(r.out.find("s UNSATISFIABLE"), std::string::npos);
  EXPECT_EQ(run({"check", path("u.trace")}).rc, kExitOk);
  write_file(path("s.cnf"), "p cnf 2 1\n1 2 0\n");
  auto s = run({"solve", path("s.cnf")});
  EXPECT_EQ(s.rc, kExitOk);
  EXPECT_NE(s.out.find("s SATISFIABLE"), std::string::npos);
}

TEST_F(Cli, Dot) {
  auto r = run({"dot", data("fig2.trace")});
  EXPECT_EQ(r.rc, kExitOk);
  EXPECT_EQ(r.out.rfind("digraph", 0), 0u);
}

TEST_F(Cli, Bench) {
  fs::create_directories(path("bench"));
  CorpusSpec spec;
  spec.count = 4;
  for (const auto& item : make_corpus(spec))
    write_file(path("bench/" + item.name + ".trace"), write_tracecheck(item.proof));
  auto r = run({"bench", path("bench"), "--plan", "pu,sh,rpi,re", "--jobs", "2"});
  EXPECT_EQ(r.rc, kExitOk) << r.err;
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 5);
  EXPECT_NE(r.err.find("c instances 4"), std::string::npos);
}

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(run({}).rc, kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).rc, kExitUsage);
  EXPECT_EQ(run({"compress", data("fig8.trace"), "--plan", "nope"}).rc, kExitUsage);
  EXPECT_EQ(run({"check"}).rc, kExitUsage);
  EXPECT_EQ(run({"--help"}).rc, kExitOk);
}
