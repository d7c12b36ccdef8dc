#include "fixtures.hpp"

#include <random>
#include <set>

#include "resproof/sat.hpp"

namespace resproof::testing {

namespace {

struct Builder {
  Figure f;
  NodeId leaf(const std::string& name, Clause c) {
    NodeId id = f.proof.add_leaf(std::move(c));
    f.at[name] = id;
    return id;
  }
  NodeId step(const std::string& name, const std::string& a, const std::string& b, int pivot) {
    NodeId id = f.proof.add_resolvent(f.at.at(a), f.at.at(b), static_cast<Var>(pivot));
    f.at[name] = id;
    return id;
  }
  Figure done(const std::string& root) {
    f.proof.set_root(f.at.at(root));
    return std::move(f);
  }
};

}  // namespace

Figure fig_dag() {
  Builder b;
  b.leaf("op", {O, P});
  b.leaf("-pq", {-P, Q});
  b.leaf("-opr", {-O, P, R});
  b.step("oq", "op", "-pq", P);
  b.step("-oqr", "-pq", "-opr", P);
  b.step("qr", "oq", "-oqr", O);
  return b.done("qr");
}

Figure fig_propagation() {
  Builder b;
  b.leaf("pq", {P, Q});
  b.leaf("-pr", {-P, R});
  b.leaf("p-q", {P, -Q});
  b.leaf("-pu", {-P, U});
  b.leaf("-rv", {-R, V});
  b.step("qr", "pq", "-pr", P);
  b.step("pr", "qr", "p-q", Q);
  b.step("ru", "pr", "-pu", P);
  b.step("uv", "ru", "-rv", R);
  return b.done("uv");
}

Figure fig_propagation_expected() {
  Builder b;
  b.leaf("pq", {P, Q});
  b.leaf("p-q", {P, -Q});
  b.leaf("-pr", {-P, R});
  b.leaf("-rv", {-R, V});
  b.step("p", "pq", "p-q", Q);
  b.step("r", "p", "-pr", P);
  b.step("v", "r", "-rv", R);
  return b.done("v");
}

Figure regularization_start() {
  Builder b;
  b.leaf("pq", {P, Q});
  b.leaf("-po", {-P, O});
  b.leaf("p-q", {P, -Q});
  b.leaf("qr", {Q, R});
  b.leaf("-p-q", {-P, -Q});
  b.leaf("-os", {-O, S});
  b.step("qo", "pq", "-po", P);
  b.step("po", "qo", "p-q", Q);
  b.step("-pr", "qr", "-p-q", Q);
  b.step("or", "po", "-pr", P);
  b.step("rs", "or", "-os", O);
  return b.done("rs");
}

Figure regularization_expected() {
  Builder b;
  b.leaf("qr", {Q, R});
  b.leaf("p-q", {P, -Q});
  b.leaf("-p-q", {-P, -Q});
  b.step("-q", "p-q", "-p-q", P);
  b.step("r", "qr", "-q", Q);
  return b.done("r");
}

Figure recycle_start() {
  Builder b;
  b.leaf("pq", {P, Q});
  b.leaf("-po", {-P, O});
  b.leaf("p-q", {P, -Q});
  b.leaf("qo", {Q, O});
  b.leaf("-p-q", {-P, -Q});
  b.step("qo'", "pq", "-po", P);
  b.step("po", "qo'", "p-q", Q);
  b.step("-po'", "qo", "-p-q", Q);
  b.step("o", "po", "-po'", P);
  return b.done("o");
}

Figure recycle_expected() {
  Builder b;
  b.leaf("pq", {P, Q});
  b.leaf("p-q", {P, -Q});
  b.leaf("qo", {Q, O});
  b.leaf("-p-q", {-P, -Q});
  b.step("p", "pq", "p-q", Q);
  b.step("-po'", "qo", "-p-q", Q);
  b.step("o", "p", "-po'", P);
  return b.done("o");
}

Figure rpi_start() {
  Builder b;
  b.leaf("pq", {P, Q});
  b.leaf("-pr", {-P, R});
  b.leaf("-qs", {-Q, S});
  b.leaf("-q-sp", {-Q, -S, P});
  b.leaf("-p", {-P});
  b.step("qr", "pq", "-pr", P);
  b.step("rs", "qr", "-qs", Q);
  b.step("r-sp", "qr", "-q-sp", Q);
  b.step("rp", "rs", "r-sp", S);
  b.step("r", "rp", "-p", P);
  return b.done("r");
}

Figure rpi_expected() {
  Builder b;
  b.leaf("pq", {P, Q});
  b.leaf("-qs", {-Q, S});
  b.leaf("-q-sp", {-Q, -S, P});
  b.leaf("-p", {-P});
  b.step("ps", "pq", "-qs", Q);
  b.step("-sp", "pq", "-q-sp", Q);
  b.step("p", "ps", "-sp", S);
  b.step("[]", "p", "-p", P);
  return b.done("[]");
}

Figure pushdown_start() {
  Builder b;
  b.leaf("pqr", {P, Q, R});
  b.leaf("-p", {-P});
  b.leaf("-qpo", {-Q, P, O});
  b.leaf("-r", {-R});
  b.leaf("-ou", {-O, U});
  b.leaf("-p'", {-P});
  b.step("qr", "pqr", "-p", P);
  b.step("rpo", "qr", "-qpo", Q);
  b.step("po", "rpo", "-r", R);
  b.step("pu", "po", "-ou", O);
  b.step("u", "pu", "-p'", P);
  return b.done("u");
}

Figure pushdown_expected() {
  Builder b;
  b.leaf("pqr", {P, Q, R});
  b.leaf("-qpo", {-Q, P, O});
  b.leaf("-ou", {-O, U});
  b.leaf("-p", {-P});
  b.leaf("-r", {-R});
  b.step("rpo", "pqr", "-qpo", Q);
  b.step("pru", "rpo", "-ou", O);
  b.step("ru", "pru", "-p", P);
  b.step("u", "ru", "-r", R);
  return b.done("u");
}

Figure axiom_start() {
  Builder b;
  b.leaf("p7p8", {7, 8});
  b.leaf("-p1p3-p8", {-1, 3, -8});
  b.leaf("p4-p5-p7", {4, -5, -7});
  b.leaf("-p4", {-4});
  b.leaf("p5p6", {5, 6});
  b.leaf("-p1p2-p6", {-1, 2, -6});
  b.leaf("-p3", {-3});
  b.leaf("p1", {1});
  b.leaf("-p2", {-2});
  b.step("-p1p3p7", "p7p8", "-p1p3-p8", 8);
  b.step("-p1p3p4-p5", "-p1p3p7", "p4-p5-p7", 7);
  b.step("-p1p3-p5", "-p1p3p4-p5", "-p4", 4);
  b.step("-p1p2p5", "p5p6", "-p1p2-p6", 6);
  b.step("-p1p2p3", "-p1p2p5", "-p1p3-p5", 5);
  b.step("-p1p2", "-p1p2p3", "-p3", 3);
  b.step("p2", "p1", "-p1p2", 1);
  b.step("[]", "p2", "-p2", 2);
  return b.done("[]");
}

Figure axiom_expected() {
  Builder b;
  b.leaf("p7p8", {7, 8});
  b.leaf("-p1p3-p8", {-1, 3, -8});
  b.leaf("p4-p5-p7", {4, -5, -7});
  b.leaf("-p4", {-4});
  b.leaf("p5p6", {5, 6});
  b.leaf("-p1p2-p6", {-1, 2, -6});
  b.leaf("-p3", {-3});
  b.leaf("p1", {1});
  b.leaf("-p2", {-2});
  b.step("-p1p3p7", "p7p8", "-p1p3-p8", 8);
  b.step("-p1p3p4-p5", "-p1p3p7", "p4-p5-p7", 7);
  b.step("-p1p2p5", "p5p6", "-p1p2-p6", 6);
  b.step("-p1p2p3p4", "-p1p2p5", "-p1p3p4-p5", 5);
  b.step("-p1p2p3", "-p1p2p3p4", "-p4", 4);
  b.step("-p1p2", "-p1p2p3", "-p3", 3);
  b.step("p2", "p1", "-p1p2", 1);
  b.step("[]", "p2", "-p2", 2);
  return b.done("[]");
}

ResolutionProof unroll(const ResolutionProof& proof) {
  ResolutionProof out;
  if (!proof.contains(proof.root())) return out;
  // Post-order over the tree of paths; each visit makes a fresh copy.
  struct Frame {
    NodeId n;
    int stage;
    NodeId pos_copy;
  };
  std::vector<Frame> stack{{proof.root(), 0, kNoNode}};
  std::vector<NodeId> results;
  while (!stack.empty()) {
    Frame& fr = stack.back();
    const auto& node = proof.node(fr.n);
    if (node.is_leaf()) {
      results.push_back(out.add_leaf(node.clause, node.origin));
      stack.pop_back();
      continue;
    }
    if (fr.stage == 0) {
      fr.stage = 1;
      stack.push_back({node.parent_pos, 0, kNoNode});
    } else if (fr.stage == 1) {
      fr.stage = 2;
      fr.pos_copy = results.back();
      results.pop_back();
      stack.push_back({node.parent_neg, 0, kNoNode});
    } else {
      NodeId neg_copy = results.back();
      results.pop_back();
      NodeId id = out.add_inner_unchecked(fr.pos_copy, neg_copy, node.pivot, node.clause);
      stack.pop_back();
      results.push_back(id);
    }
  }
  out.set_root(results.back());
  return out;
}

std::vector<CorpusItem> make_corpus(const CorpusSpec& spec) {
  std::mt19937_64 rng(spec.seed);
  std::uniform_int_distribution<std::size_t> vars(spec.min_vars, spec.max_vars);
  std::uniform_real_distribution<double> ratio(spec.min_ratio, spec.max_ratio);
  std::vector<CorpusItem> out;
  std::size_t attempt = 0;
  while (out.size() < spec.count) {
    ++attempt;
    std::size_t n = vars(rng);
    auto m = static_cast<std::size_t>(ratio(rng) * static_cast<double>(n) + 0.5);
    CnfFormula cnf = random_kcnf(rng, n, m);
    SolverOptions opts;
    opts.seed = attempt;
    auto res = solve_with_proof(cnf, opts);
    if (res.status != SolveStatus::kUnsat) continue;
    out.push_back({"rand" + std::to_string(out.size()), std::move(cnf), std::move(*res.proof)});
  }
  return out;
}

SplitInstance random_split(const CorpusItem& item, std::mt19937_64& rng) {
  const std::size_t m = item.cnf.clauses.size();
  std::vector<bool> in_a(m);
  for (std::size_t i = 0; i < m; ++i) in_a[i] = rng() % 2 == 0;
  in_a[0] = true;
  in_a[m - 1] = false;
  SplitInstance out;
  for (std::size_t i = 0; i < m; ++i) (in_a[i] ? out.a : out.b).add(item.cnf.clauses[i]);
  out.labeling = label_variables(out.a, out.b);
  out.proof = item.proof;
  tag_leaves(out.proof, out.a, out.b);
  return out;
}

bool leaves_within(const ResolutionProof& proof, const CnfFormula& cnf) {
  std::set<Clause> input(cnf.clauses.begin(), cnf.clauses.end());
  for (NodeId n : topological_order(proof, Direction::kTopDown))
    if (proof.node(n).is_leaf() && !input.count(proof.clause(n))) return false;
  return true;
}

}  // namespace resproof::testing
