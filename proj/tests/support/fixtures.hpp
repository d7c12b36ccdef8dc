#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "resproof/interpolate.hpp"
#include "resproof/io.hpp"
#include "resproof/proof.hpp"

namespace resproof::testing {

// Letter variables used by the worked examples.
inline constexpr int P = 1, Q = 2, R = 3, S = 4, O = 5, U = 6, V = 7;

struct Figure {
  ResolutionProof proof;
  std::map<std::string, NodeId> at;
};

// Leaves op, -p q, -o p r; root qr.
Figure fig_dag();
// R2 + propagation example: leaves pq, -p r, p -q, -p u, -r v; root uv.
Figure fig_propagation();
Figure fig_propagation_expected();  // root v
// Irregular proof with root rs.
Figure regularization_start();
Figure regularization_expected();  // 5 nodes, root r
// Redundant pivot o, before and after recycling.
Figure recycle_start();
Figure recycle_expected();
// Shared-node example for the intersection variant, root r.
Figure rpi_start();
Figure rpi_expected();
// Unit push-down example.
Figure pushdown_start();
Figure pushdown_expected();
// Array-axiom refutation over p1..p8.
Figure axiom_start();
Figure axiom_expected();  // light pivots moved above heavy ones

// Full tree copy: every node gets one copy per path to the root.
ResolutionProof unroll(const ResolutionProof& proof);

struct CorpusItem {
  std::string name;
  CnfFormula cnf;
  ResolutionProof proof;
};

struct CorpusSpec {
  std::size_t count = 500;
  std::uint64_t seed = 20240611;
  std::size_t min_vars = 8, max_vars = 14;
  double min_ratio = 4.5, max_ratio = 6.0;
};

// Random unsat 3-CNFs solved by the CDCL engine; satisfiable draws are
// skipped.
std::vector<CorpusItem> make_corpus(const CorpusSpec& spec);

struct SplitInstance {
  CnfFormula a, b;
  VariableLabeling labeling;
  ResolutionProof proof;  // leaves tagged A/B
};

// Random A/B split of a corpus formula, both sides nonempty.
SplitInstance random_split(const CorpusItem& item, std::mt19937_64& rng);

// Leaves of `proof` all appear in `cnf`.
bool leaves_within(const ResolutionProof& proof, const CnfFormula& cnf);

}  // namespace resproof::testing
