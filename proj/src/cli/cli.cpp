#include "resproof/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <thread>

#include "resproof/compress.hpp"
#include "resproof/error.hpp"
#include "resproof/interpolate.hpp"
#include "resproof/io.hpp"
#include "resproof/sat.hpp"
#include "resproof/transform.hpp"

namespace resproof {

namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

// Raised for a failed check or verification; maps to exit code 1.
struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  std::vector<std::string> inputs;
  std::string output;
  std::string metrics;
  std::string plan = "pu,sh,rpi,re";
  std::string strategy = "compression";
  std::uint64_t seed = 0;
  double time_limit = -1;  // seconds, < 0 = none
  double ratio = -1;
  double solve_time = -1;  // ms, for --ratio on proof inputs
  std::size_t num_traversals = 3;
  std::size_t num_global_iterations = 2;
  bool validate_clauses = true;
  bool linear = false;
  // interpolate
  std::string algo = "mcmillan";
  std::string reorder;
  bool verify = false;
  std::string partition, a_file, b_file, dimacs_out;
  // reorder / extract
  std::string light, mixed;
  bool no_reorder = false;
  std::size_t jobs = 1;
};

std::uint64_t default_seed() {
  if (const char* env = std::getenv("RESPROOF_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw Usage(std::string("RESPROOF_SEED is not a number: ") + env);
    }
  }
  return 0;
}

struct Loaded {
  ResolutionProof proof;
  std::optional<CnfFormula> cnf;
  double solve_ms = -1;
};

Loaded load(const std::string& path, const RunConfig& cfg, std::ostream& err) {
  std::string text = read_file(path);
  Loaded out;
  if (looks_like_dimacs(text)) {
    std::vector<std::string> warnings;
    out.cnf = parse_dimacs(text, &warnings);
    for (const auto& w : warnings) err << "warning: " << path << ": " << w << '\n';
    SolverOptions opts;
    opts.seed = cfg.seed;
    auto t0 = Clock::now();
    auto res = solve_with_proof(*out.cnf, opts);
    out.solve_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    if (res.status == SolveStatus::kSat) throw Failure(path + ": formula is satisfiable");
    out.proof = std::move(*res.proof);
  } else {
    TracecheckOptions opts;
    opts.validate_clauses = cfg.validate_clauses;
    out.proof = parse_tracecheck(text, opts);
  }
  return out;
}

std::chrono::nanoseconds budget(const RunConfig& cfg, double solve_ms) {
  if (cfg.time_limit >= 0)
    return std::chrono::duration_cast<std::chrono::nanoseconds>(
        std::chrono::duration<double>(cfg.time_limit));
  if (cfg.ratio >= 0) {
    double base = cfg.solve_time >= 0 ? cfg.solve_time : solve_ms;
    if (base < 0) throw Usage("--ratio on a proof input needs --solve-time");
    return std::chrono::duration_cast<std::chrono::nanoseconds>(
        std::chrono::duration<double, std::milli>(cfg.ratio * base));
  }
  return kNoTimeLimit;
}

RuleStrategy make_strategy(const std::string& name) {
  if (name == "compression") return RuleStrategy::compression();
  if (name == "skip") return RuleStrategy::skip_all();
  throw Usage("unknown strategy '" + name + "'");
}

// "1,2,5-8"
std::set<Var> parse_varlist(const std::string& text) {
  std::set<Var> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    try {
      auto dash = item.find('-');
      if (dash != std::string::npos && dash > 0) {
        Var lo = static_cast<Var>(std::stoul(item.substr(0, dash)));
        Var hi = static_cast<Var>(std::stoul(item.substr(dash + 1)));
        for (Var v = lo; v <= hi; ++v) out.insert(v);
      } else {
        out.insert(static_cast<Var>(std::stoul(item)));
      }
    } catch (const std::exception&) {
      throw Usage("bad variable list item '" + item + "'");
    }
  }
  return out;
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-")
    out << text;
  else
    write_file(path, text);
}

int cmd_check(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  RunConfig relaxed = cfg;
  relaxed.validate_clauses = false;
  auto loaded = load(cfg.inputs.at(0), relaxed, err);
  auto report = check_legal(loaded.proof);
  out << "nodes " << loaded.proof.size() << " inner " << loaded.proof.inner_count() << '\n';
  if (report.legal()) {
    out << (is_refutation(loaded.proof) ? "legal refutation\n" : "legal proof\n");
    return kExitOk;
  }
  out << report.to_string();
  return kExitViolation;
}

int cmd_solve(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::vector<std::string> warnings;
  auto cnf = parse_dimacs(read_file(cfg.inputs.at(0)), &warnings);
  for (const auto& w : warnings) err << "warning: " << w << '\n';
  SolverOptions opts;
  opts.seed = cfg.seed;
  if (cfg.time_limit >= 0)
    opts.time_limit = std::chrono::milliseconds(static_cast<long>(cfg.time_limit * 1000));
  auto res = solve_with_proof(cnf, opts);
  if (res.status == SolveStatus::kSat) {
    out << "s SATISFIABLE\nv";
    for (Var v = 1; v < res.model.size(); ++v) out << ' ' << (res.model[v] ? "" : "-") << v;
    out << " 0\n";
    return kExitOk;
  }
  out << "s UNSATISFIABLE\n";
  out << "c nodes " << res.proof->size() << " conflicts " << res.stats.conflicts << '\n';
  if (!cfg.output.empty()) write_file(cfg.output, write_tracecheck(*res.proof));
  return kExitOk;
}

std::string name_of(const std::string& path) { return fs::path(path).filename().string(); }

int cmd_compress(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  auto loaded = load(cfg.inputs.at(0), cfg, err);
  auto plan = parse_plan(cfg.plan, cfg.num_traversals, cfg.num_global_iterations);
  plan.time_limit = budget(cfg, loaded.solve_ms);
  auto m = run_pipeline(loaded.proof, plan, make_strategy(cfg.strategy));
  auto report = check_legal(loaded.proof);
  if (!report.legal()) throw Failure("compressed proof is illegal:\n" + report.to_string());
  out << "nodes " << m.nodes_before << " -> " << m.nodes_after << " edges " << m.edges_before
      << " -> " << m.edges_after << " core " << m.core_before << " -> " << m.core_after << '\n';
  if (!cfg.output.empty()) write_file(cfg.output, write_tracecheck(loaded.proof));
  if (!cfg.metrics.empty())
    emit(cfg.metrics,
         metrics_csv_header() + "\n" + metrics_csv_row(name_of(cfg.inputs.at(0)), m) + "\n", out);
  return kExitOk;
}

CnfFormula read_cnf(const std::string& path, std::ostream& err) {
  std::vector<std::string> warnings;
  auto cnf = parse_dimacs(read_file(path), &warnings);
  for (const auto& w : warnings) err << "warning: " << path << ": " << w << '\n';
  return cnf;
}

int cmd_interpolate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  CnfFormula a, b;
  Loaded loaded;
  if (!cfg.a_file.empty() || !cfg.b_file.empty()) {
    if (cfg.a_file.empty() || cfg.b_file.empty()) throw Usage("--a and --b go together");
    a = read_cnf(cfg.a_file, err);
    b = read_cnf(cfg.b_file, err);
    if (!cfg.inputs.empty()) {
      loaded = load(cfg.inputs.at(0), cfg, err);
    } else {
      CnfFormula both = a;
      for (const auto& c : b.clauses) both.add(c);
      both.num_vars = std::max(a.num_vars, b.num_vars);
      SolverOptions opts;
      opts.seed = cfg.seed;
      auto res = solve_with_proof(both, opts);
      if (res.status == SolveStatus::kSat) throw Failure("A and B are jointly satisfiable");
      loaded.proof = std::move(*res.proof);
    }
  } else {
    if (cfg.inputs.empty()) throw Usage("interpolate needs an input or --a/--b");
    std::string path = cfg.inputs.at(0);
    std::string part = cfg.partition;
    if (part.empty() && fs::exists(path + ".part")) part = path + ".part";
    if (part.empty()) throw Usage("no partition: use --partition, --a/--b or a .part file");
    auto cnf = read_cnf(path, err);
    std::size_t inputs = 0;
    for (auto o : cnf.origin) inputs = std::max(inputs, o);
    inputs = std::max(inputs, cnf.clauses.size());
    auto in_a = parse_partition(read_file(part), inputs);
    std::tie(a, b) = split_partition(cnf, in_a);
    loaded = load(path, cfg, err);
  }
  if (tag_leaves(loaded.proof, a, b) != 0)
    throw Error(ErrorCode::kUntaggedLeaf, "some leaves belong to neither A nor B");
  auto labeling = label_variables(a, b);
  labeling.check_covers(loaded.proof);
  if (!cfg.reorder.empty()) {
    VarClass light_class;
    if (cfg.reorder == "cnf")
      light_class = VarClass::kALocal;
    else if (cfg.reorder == "dnf")
      light_class = VarClass::kBLocal;
    else
      throw Usage("--reorder takes cnf or dnf");
    auto stats = pivot_reordering(
        loaded.proof, [&](Var v) { return labeling.of(v) == light_class; }, cfg.linear);
    err << "c reordering rounds " << stats.rounds << " nodes " << loaded.proof.size() << '\n';
  }
  Formula itp;
  if (cfg.algo == "mcmillan")
    itp = itp_mcmillan(loaded.proof, labeling);
  else if (cfg.algo == "mcmillan-prime")
    itp = itp_mcmillan_prime(loaded.proof, labeling);
  else
    throw Usage("--algo takes mcmillan or mcmillan-prime");
  out << itp.to_string() << '\n';
  err << "c shape " << shape_name(formula_shape(itp)) << '\n';
  if (!cfg.dimacs_out.empty()) {
    auto clauses = formula_to_clauses(itp);
    if (!clauses) throw Failure("interpolant is not in CNF; no DIMACS written");
    CnfFormula f;
    for (auto& c : *clauses) f.add(std::move(c));
    write_file(cfg.dimacs_out, write_dimacs(f));
  }
  if (cfg.verify) {
    if (!verify_interpolant(a, b, itp)) throw Failure("interpolant verification failed");
    err << "c verified\n";
  }
  return kExitOk;
}

// Light variables from a DIMACS file: those of its clauses that no other
// leaf of the proof mentions.
std::set<Var> light_from_file(const std::string& path, const ResolutionProof& proof,
                              std::ostream& err) {
  auto a = read_cnf(path, err);
  std::set<Clause> in_a(a.clauses.begin(), a.clauses.end());
  std::set<Var> vars, elsewhere;
  for (const auto& c : a.clauses)
    for (Literal l : c.literals()) vars.insert(l.var());
  for (NodeId n : topological_order(proof, Direction::kTopDown)) {
    const auto& node = proof.node(n);
    if (node.is_leaf() && !in_a.count(node.clause))
      for (Literal l : node.clause.literals()) elsewhere.insert(l.var());
  }
  std::set<Var> out;
  for (Var v : vars)
    if (!elsewhere.count(v)) out.insert(v);
  return out;
}

int cmd_reorder(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  auto loaded = load(cfg.inputs.at(0), cfg, err);
  std::set<Var> light = fs::is_regular_file(cfg.light)
                            ? light_from_file(cfg.light, loaded.proof, err)
                            : parse_varlist(cfg.light);
  auto pred = [&](Var v) { return light.count(v) != 0; };
  auto stats = pivot_reordering(loaded.proof, pred, cfg.linear);
  auto left = find_unordered_contexts(loaded.proof, pred).count();
  out << "rounds " << stats.rounds << " rules " << stats.rules_applied << " nodes "
      << loaded.proof.size() << " unordered " << left << '\n';
  auto report = check_legal(loaded.proof);
  if (!report.legal()) throw Failure("reordered proof is illegal:\n" + report.to_string());
  if (!cfg.output.empty()) write_file(cfg.output, write_tracecheck(loaded.proof));
  return stats.watchdog_hit ? kExitViolation : kExitOk;
}

int cmd_extract(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  auto loaded = load(cfg.inputs.at(0), cfg, err);
  auto mixed = parse_varlist(cfg.mixed);
  auto pred = [&](Var v) { return mixed.count(v) != 0; };
  if (!cfg.no_reorder) pivot_reordering(loaded.proof, pred, cfg.linear);
  auto lemmas = extract_ab_mixed(loaded.proof, pred);
  for (const auto& l : lemmas) {
    for (int lit : l.lemma.to_dimacs()) out << lit << ' ';
    out << "0\n";
  }
  if (!cfg.output.empty()) write_file(cfg.output, write_tracecheck(loaded.proof));
  return kExitOk;
}

int cmd_dot(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  auto loaded = load(cfg.inputs.at(0), cfg, err);
  emit(cfg.output, export_dot(loaded.proof), out);
  return kExitOk;
}

int cmd_bench(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::vector<std::string> files;
  for (const auto& entry : fs::directory_iterator(cfg.inputs.at(0)))
    if (entry.is_regular_file()) files.push_back(entry.path().string());
  std::sort(files.begin(), files.end());
  auto plan = parse_plan(cfg.plan, cfg.num_traversals, cfg.num_global_iterations);
  std::vector<std::optional<CompressionMetrics>> results(files.size());
  std::vector<std::string> errors(files.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    std::ostringstream sink;
    for (std::size_t i = next++; i < files.size(); i = next++) {
      try {
        auto loaded = load(files[i], cfg, sink);
        PipelinePlan p = plan;
        p.time_limit = budget(cfg, loaded.solve_ms);
        auto m = run_pipeline(loaded.proof, p, make_strategy(cfg.strategy));
        if (!check_legal(loaded.proof).legal()) throw Failure("illegal result");
        results[i] = m;
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };
  std::size_t jobs = std::max<std::size_t>(cfg.jobs, 1);
  std::vector<std::thread> pool;
  for (std::size_t j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::ostringstream csv;
  csv << metrics_csv_header() << '\n';
  double nodes = 0, edges = 0, core = 0;
  std::size_t ok = 0;
  bool failed = false;
  for (std::size_t i = 0; i < files.size(); ++i) {
    if (!results[i]) {
      err << "error: " << files[i] << ": " << errors[i] << '\n';
      failed = true;
      continue;
    }
    csv << metrics_csv_row(name_of(files[i]), *results[i]) << '\n';
    nodes += results[i]->red_nodes();
    edges += results[i]->red_edges();
    core += results[i]->red_core();
    ++ok;
  }
  emit(cfg.metrics, csv.str(), out);
  if (ok > 0) {
    char line[160];
    std::snprintf(line, sizeof line, "c instances %zu RedNodes%% %.2f RedEdges%% %.2f RedCore%% %.2f\n",
                  ok, nodes / ok, edges / ok, core / ok);
    err << line;
  }
  return failed ? kExitViolation : kExitOk;
}

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::kResourceLimit:
    case ErrorCode::kTooManyVariables: return kExitResource;
    case ErrorCode::kInvalidArgument: return kExitUsage;
    default: return kExitViolation;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Resolution proof toolkit", "resproof"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", cfg.seed, "solver seed (default: $RESPROOF_SEED or 0)");
    sub->add_flag("--no-validate", [&](std::int64_t) { cfg.validate_clauses = false; },
                  "do not compare stated clauses with recomputed resolvents");
  };
  auto add_plan = [&](CLI::App* sub) {
    sub->add_option("--plan", cfg.plan, "stages: pu,sh,rp,rpi,re[:N]");
    sub->add_option("--loops", cfg.num_global_iterations, "global iterations")
        ->check(CLI::PositiveNumber);
    sub->add_option("--travs", cfg.num_traversals, "traversals per RE stage");
    sub->add_option("--time-limit", cfg.time_limit, "seconds")->check(CLI::NonNegativeNumber);
    sub->add_option("--ratio", cfg.ratio, "time limit as a multiple of solve time")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--solve-time", cfg.solve_time, "solve time in ms for --ratio on proofs");
    sub->add_option("--strategy", cfg.strategy, "compression or skip");
    sub->add_option("--metrics", cfg.metrics, "CSV output (- for stdout)");
  };

  auto* check = app.add_subcommand("check", "report legality of a proof");
  check->add_option("proof", cfg.inputs)->required()->expected(1);
  add_common(check);

  auto* solve = app.add_subcommand("solve", "solve a CNF and log a proof");
  solve->add_option("cnf", cfg.inputs)->required()->expected(1);
  solve->add_option("-o,--output", cfg.output, "TraceCheck output");
  solve->add_option("--time-limit", cfg.time_limit, "seconds")->check(CLI::NonNegativeNumber);
  add_common(solve);

  auto* compress = app.add_subcommand("compress", "compress a proof");
  compress->add_option("proof", cfg.inputs)->required()->expected(1);
  compress->add_option("-o,--output", cfg.output, "TraceCheck output");
  add_plan(compress);
  add_common(compress);

  auto* itp = app.add_subcommand("interpolate", "compute an interpolant");
  itp->add_option("input", cfg.inputs)->expected(0, 1);
  itp->add_option("--algo", cfg.algo, "mcmillan or mcmillan-prime");
  itp->add_option("--reorder", cfg.reorder, "cnf or dnf");
  itp->add_flag("--verify", cfg.verify, "check the interpolant with the truth-table oracle");
  itp->add_flag("--linear", cfg.linear, "no node duplication while reordering");
  itp->add_option("--partition", cfg.partition, "'<clause-index> <a|b>' lines");
  itp->add_option("--a", cfg.a_file, "DIMACS file with the A clauses");
  itp->add_option("--b", cfg.b_file, "DIMACS file with the B clauses");
  itp->add_option("--dimacs", cfg.dimacs_out, "also write the interpolant as DIMACS");
  add_common(itp);

  auto* reorder = app.add_subcommand("reorder", "move light pivots above heavy ones");
  reorder->add_option("proof", cfg.inputs)->required()->expected(1);
  reorder->add_option("--light", cfg.light, "variable list (1,2,5-8) or DIMACS A file")
      ->required();
  reorder->add_flag("--linear", cfg.linear, "no node duplication");
  reorder->add_option("-o,--output", cfg.output, "TraceCheck output");
  add_common(reorder);

  auto* extract = app.add_subcommand("extract-lemmas", "cut out AB-mixed subproofs");
  extract->add_option("proof", cfg.inputs)->required()->expected(1);
  extract->add_option("--mixed", cfg.mixed, "variable list (1,2,5-8)")->required();
  extract->add_flag("--no-reorder", cfg.no_reorder, "skip the reordering pass");
  extract->add_flag("--linear", cfg.linear, "no node duplication while reordering");
  extract->add_option("-o,--output", cfg.output, "TraceCheck output");
  add_common(extract);

  auto* dot = app.add_subcommand("dot", "export a proof as DOT");
  dot->add_option("proof", cfg.inputs)->required()->expected(1);
  dot->add_option("-o,--output", cfg.output, "DOT output (default stdout)");
  add_common(dot);

  auto* bench = app.add_subcommand("bench", "run a plan over every file of a directory");
  bench->add_option("dir", cfg.inputs)->required()->expected(1);
  bench->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
  add_plan(bench);
  add_common(bench);

  try {
    cfg.seed = default_seed();
    std::vector<std::string> rest(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
    app.parse(rest);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const Usage& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    CLI::App* sub = app.get_subcommands().front();
    cfg.command = sub->get_name();
    if (cfg.command == "check") return cmd_check(cfg, out, err);
    if (cfg.command == "solve") return cmd_solve(cfg, out, err);
    if (cfg.command == "compress") return cmd_compress(cfg, out, err);
    if (cfg.command == "interpolate") return cmd_interpolate(cfg, out, err);
    if (cfg.command == "reorder") return cmd_reorder(cfg, out, err);
    if (cfg.command == "extract-lemmas") return cmd_extract(cfg, out, err);
    if (cfg.command == "dot") return cmd_dot(cfg, out, err);
    if (cfg.command == "bench") return cmd_bench(cfg, out, err);
    return kExitUsage;
  } catch (const Usage& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Failure& e) {
    err << "failed: " << e.what() << '\n';
    return kExitViolation;
  } catch (const Error& e) {
    err << "error: " << error_code_name(e.code()) << ": " << e.what() << '\n';
    return exit_code_for(e);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitViolation;
  }
}

int run_cli(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return run_cli(args, std::cout, std::cerr);
}

}  // namespace resproof
