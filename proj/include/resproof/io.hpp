#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "resproof/clause.hpp"
#include "resproof/proof.hpp"

namespace resproof {

struct CnfFormula {
  std::size_t num_vars = 0;
  std::vector<Clause> clauses;
  // 1-based position in the input of each kept clause (tautologies are
  // dropped while parsing, so this is not always the identity).
  std::vector<std::size_t> origin;

  void add(Clause c);
  std::vector<Var> variables() const;
  CnfFormula deduplicated() const;
};

CnfFormula parse_dimacs(std::string_view text, std::vector<std::string>* warnings = nullptr);
std::string write_dimacs(const CnfFormula& cnf);

struct TracecheckOptions {
  // Compare stated clauses with recomputed resolvents. When off, stated
  // clauses are kept as given, so the result may be illegal.
  bool validate_clauses = true;
};

ResolutionProof parse_tracecheck(std::string_view text, const TracecheckOptions& options = {});
std::string write_tracecheck(const ResolutionProof& proof);
std::string export_dot(const ResolutionProof& proof);

// True if the text looks like DIMACS rather than TraceCheck.
bool looks_like_dimacs(std::string_view text);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view text);

}  // namespace resproof
