#pragma once

#include <functional>
#include <set>
#include <vector>

#include "resproof/formula.hpp"
#include "resproof/io.hpp"
#include "resproof/proof.hpp"

namespace resproof {

enum class VarClass : std::uint8_t { kALocal, kBLocal, kABCommon };

const char* var_class_name(VarClass c);

class VariableLabeling {
 public:
  void set(Var v, VarClass c);
  void set_mixed(Var v, bool mixed = true);

  bool known(Var v) const;
  bool is_mixed(Var v) const { return mixed_.count(v) != 0; }
  // Throws kUnknownVariable.
  VarClass of(Var v) const;
  std::vector<Var> common() const;
  const std::set<Var>& mixed() const { return mixed_; }

  // Throws kUnknownVariable if the proof mentions a variable that is neither
  // labeled nor flagged mixed.
  void check_covers(const ResolutionProof& proof) const;

 private:
  std::vector<std::int8_t> cls_;  // -1 unknown
  std::set<Var> mixed_;
};

VariableLabeling label_variables(const CnfFormula& a, const CnfFormula& b,
                                 const std::vector<Var>& mixed = {});

// Tags each leaf as A or B by looking its clause up in the partition. A
// clause present in both counts as A. Leaves found in neither keep their tag
// (theory lemmas stay theory lemmas). Returns the number of leaves left
// untagged.
std::size_t tag_leaves(ResolutionProof& proof, const CnfFormula& a, const CnfFormula& b);

// Splits `cnf` by per-clause tags (true = A), indexed by input position
// (CnfFormula::origin) so that dropped tautologies do not shift them.
std::pair<CnfFormula, CnfFormula> split_partition(const CnfFormula& cnf,
                                                  const std::vector<bool>& in_a);

// Reads `<clause-index> <a|b>` lines (1-based indices). Throws kSyntaxError.
std::vector<bool> parse_partition(std::string_view text, std::size_t num_clauses);

// Theory lemmas count as B clauses. Throw kMixedVariablePresent or
// kUntaggedLeaf.
Formula itp_mcmillan(const ResolutionProof& proof, const VariableLabeling& labeling);
Formula itp_mcmillan_prime(const ResolutionProof& proof, const VariableLabeling& labeling);

// A => I, I and B unsatisfiable, vars(I) within the common variables.
bool verify_interpolant(const CnfFormula& a, const CnfFormula& b, const Formula& i);

using VarPredicate = std::function<bool(Var)>;

struct UnorderedContext {
  NodeId root;
  NodeId inner;
  Var lower;  // light pivot
  Var upper;  // heavy pivot
};

struct OrderedContextReport {
  std::vector<UnorderedContext> unordered;
  std::size_t count() const { return unordered.size(); }
  bool ordered() const { return unordered.empty(); }
};

OrderedContextReport find_unordered_contexts(const ResolutionProof& proof, const VarPredicate& light);

struct ReorderStats {
  std::size_t rounds = 0;
  std::size_t rules_applied = 0;
  bool watchdog_hit = false;
};

// Repeated passes with the reordering strategy until no unordered context
// remains, a pass changes nothing, or 10 x the initial node count rounds
// have run.
ReorderStats pivot_reordering(ResolutionProof& proof, const VarPredicate& light,
                              bool linear = false);

struct ExtractedLemma {
  Clause lemma;
  NodeId node;
};

// Replaces maximal subproofs with only mixed pivots and a mixed-free root
// clause by theory-lemma leaves. Throws kMixedResidue if a mixed variable is
// still present afterwards.
std::vector<ExtractedLemma> extract_ab_mixed(ResolutionProof& proof, const VarPredicate& mixed);

}  // namespace resproof
