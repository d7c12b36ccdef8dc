#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "resproof/error.hpp"
#include "resproof/sat.hpp"

using namespace resproof;
using namespace resproof::testing;

namespace {

Formula lit(int d) { return Formula::literal(Literal::from_dimacs(d)); }

CnfFormula cnf_of(std::vector<Clause> clauses) {
  CnfFormula cnf;
  for (auto& c : clauses) cnf.add(std::move(c));
  return cnf;
}

// PHP(n+1, n): pigeon i in hole j is variable i*n + j + 1.
CnfFormula pigeonhole(int holes) {
  CnfFormula cnf;
  int pigeons = holes + 1;
  auto x = [&](int i, int j) { return i * holes + j + 1; };
  for (int i = 0; i < pigeons; ++i) {
    std::vector<Literal> c;
    for (int j = 0; j < holes; ++j) c.push_back(Literal::from_dimacs(x(i, j)));
    cnf.add(Clause::from_literals(c));
  }
  for (int j = 0; j < holes; ++j)
    for (int a = 0; a < pigeons; ++a)
      for (int b = a + 1; b < pigeons; ++b) cnf.add(Clause{-x(a, j), -x(b, j)});
  return cnf;
}

}  // namespace

TEST(Solver, TrivialUnsat) {
  auto res = solve_with_proof(cnf_of({Clause{1}, Clause{-1}}));
  ASSERT_EQ(res.status, SolveStatus::kUnsat);
  ASSERT_TRUE(res.proof);
  EXPECT_EQ(res.proof->size(), 3u);
  EXPECT_TRUE(is_refutation(*res.proof));
}

TEST(Solver, TrivialSat) {
  auto cnf = cnf_of({Clause{1, 2}});
  auto res = solve_with_proof(cnf);
  ASSERT_EQ(res.status, SolveStatus::kSat);
  EXPECT_TRUE(satisfies(res.model, cnf));
}

TEST(Solver, EmptyInputClause) {
  auto res = solve_with_proof(cnf_of({Clause{1, 2}, Clause{}}));
  ASSERT_EQ(res.status, SolveStatus::kUnsat);
  EXPECT_TRUE(check_legal(*res.proof).legal());
}

TEST(Solver, Pigeonhole) {
  for (int holes : {2, 3, 4}) {
    auto cnf = pigeonhole(holes);
    auto res = solve_with_proof(cnf);
    ASSERT_EQ(res.status, SolveStatus::kUnsat);
    EXPECT_TRUE(check_legal(*res.proof).legal());
    EXPECT_TRUE(is_refutation(*res.proof));
    EXPECT_TRUE(leaves_within(*res.proof, cnf));
    // The saturation oracle is only practical up to 12 variables.
    if (holes <= 3) {
      EXPECT_TRUE(saturation_refute(cnf_of(unsat_core(*res.proof))).has_value())
          << "core must stay unsat";
    }
  }
}

TEST(Solver, ConflictLimit) {
  SolverOptions opts;
  opts.conflict_limit = 1;
  try {
    solve_with_proof(pigeonhole(5), opts);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kResourceLimit);
  }
}

TEST(Solver, DeterministicUnderSeed) {
  std::mt19937_64 rng(1);
  auto cnf = random_kcnf(rng, 12, 60);
  SolverOptions opts;
  opts.seed = 4;
  auto a = solve_with_proof(cnf, opts), b = solve_with_proof(cnf, opts);
  ASSERT_EQ(a.status, b.status);
  if (a.proof) {
    EXPECT_EQ(write_tracecheck(*a.proof), write_tracecheck(*b.proof));
  }
}

TEST(Oracle, Implication) {
  EXPECT_TRUE(implies_oracle(Formula::conj(lit(1), lit(2)), lit(1)));
  EXPECT_FALSE(implies_oracle(lit(1), lit(2)));
  auto a = Formula::conj(lit(1), Formula::disj(lit(-1), lit(2)));
  EXPECT_TRUE(implies_oracle(a, lit(2)));
  EXPECT_TRUE(implies_oracle(Formula::falsity(), Formula::falsity()));
  EXPECT_FALSE(implies_oracle(Formula::truth(), Formula::falsity()));
}

TEST(Oracle, TooManyVariables) {
  std::vector<Formula> parts;
  for (int v = 1; v <= 25; ++v) parts.push_back(lit(v));
  try {
    implies_oracle(Formula::conj(parts), Formula::truth());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTooManyVariables);
  }
}

TEST(Saturation, Basics) {
  auto p = saturation_refute(cnf_of({Clause{1}, Clause{-1}}));
  ASSERT_TRUE(p);
  EXPECT_EQ(p->size(), 3u);
  EXPECT_FALSE(saturation_refute(cnf_of({Clause{1, 2}})));
  auto php = saturation_refute(pigeonhole(2));
  ASSERT_TRUE(php);
  EXPECT_TRUE(check_legal(*php).legal());
  EXPECT_TRUE(is_refutation(*php));
}

TEST(Solver, AgreesWithSaturation) {
  std::mt19937_64 rng(2);
  for (int it = 0; it < 200; ++it) {
    auto cnf = random_kcnf(rng, 4 + rng() % 6, 10 + rng() % 35);
    auto res = solve_with_proof(cnf);
    auto sat = saturation_refute(cnf);
    EXPECT_EQ(res.status == SolveStatus::kUnsat, sat.has_value());
    if (res.status == SolveStatus::kSat) {
      EXPECT_TRUE(satisfies(res.model, cnf));
    } else {
      EXPECT_TRUE(check_legal(*res.proof).legal());
      EXPECT_TRUE(leaves_within(*res.proof, cnf));
    }
  }
}

TEST(RandomCnf, Shape) {
  std::mt19937_64 rng(3);
  auto cnf = random_kcnf(rng, 10, 40);
  EXPECT_EQ(cnf.clauses.size(), 40u);
  for (const auto& c : cnf.clauses) {
    EXPECT_EQ(c.size(), 3u);
    EXPECT_LE(c.max_var(), 10u);
  }
}
