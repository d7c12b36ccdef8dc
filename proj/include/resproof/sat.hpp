#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "resproof/formula.hpp"
#include "resproof/io.hpp"
#include "resproof/proof.hpp"

namespace resproof {

struct SolverOptions {
  std::uint64_t seed = 0;
  std::uint64_t conflict_limit = 0;              // 0 = unlimited
  std::chrono::milliseconds time_limit{0};       // 0 = unlimited
};

struct SolverStats {
  std::uint64_t decisions = 0;
  std::uint64_t conflicts = 0;
  std::uint64_t propagations = 0;
  std::uint64_t learned = 0;
  std::uint64_t restarts = 0;
};

enum class SolveStatus { kSat, kUnsat };

struct SolveResult {
  SolveStatus status = SolveStatus::kSat;
  // Indexed by variable; entry 0 is unused. Only meaningful when sat.
  std::vector<bool> model;
  std::optional<ResolutionProof> proof;
  SolverStats stats;
  std::chrono::microseconds time{0};
};

// CDCL search; on unsat the refutation is rebuilt from the logged learning
// chains. Throws kResourceLimit when a budget runs out.
SolveResult solve_with_proof(const CnfFormula& cnf, const SolverOptions& options = {});

// Exhaustive check that every model of `premise` satisfies `conclusion`.
// Throws kTooManyVariables above 24 variables.
bool implies_oracle(const Formula& premise, const Formula& conclusion);
inline constexpr std::size_t kOracleMaxVars = 24;

// Breadth-first resolution closure with tautology and subsumption deletion.
// Returns a refutation, or nothing if the closure has no empty clause.
std::optional<ResolutionProof> saturation_refute(const CnfFormula& cnf,
                                                 std::size_t clause_limit = 2'000'000);

// Uniform random k-CNF: distinct variables per clause, random signs.
CnfFormula random_kcnf(std::mt19937_64& rng, std::size_t num_vars, std::size_t num_clauses,
                       std::size_t k = 3);

bool satisfies(const std::vector<bool>& model, const CnfFormula& cnf);

}  // namespace resproof
