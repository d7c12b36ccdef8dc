#include <algorithm>
#include <charconv>
#include <cctype>
#include <optional>
#include <unordered_map>
#include <unordered_set>

#include "resproof/error.hpp"
#include "resproof/io.hpp"

namespace resproof {

namespace {

struct Entry {
  long long id = 0;
  std::optional<Clause> clause;  // absent for '*'
  std::vector<long long> antecedents;
  std::size_t line = 0;
};

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

long long to_int(std::string_view tok, std::size_t line) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw Error(ErrorCode::kSyntaxError, "bad number '" + std::string(tok) + "'", line);
  return v;
}

Entry parse_line(const std::vector<std::string_view>& toks, std::size_t line) {
  Entry e;
  e.line = line;
  e.id = to_int(toks[0], line);
  if (e.id <= 0) throw Error(ErrorCode::kSyntaxError, "clause ids must be positive", line);
  std::size_t i = 1;
  if (i < toks.size() && toks[i] == "*") {
    ++i;
  } else {
    std::vector<Literal> lits;
    for (;; ++i) {
      if (i >= toks.size())
        throw Error(ErrorCode::kSyntaxError, "unterminated literal list", line);
      long long v = to_int(toks[i], line);
      if (v == 0) break;
      if (v > INT32_MAX || v < -INT32_MAX)
        throw Error(ErrorCode::kSyntaxError, "literal out of range", line);
      lits.push_back(Literal::from_dimacs(static_cast<int>(v)));
    }
    ++i;
    try {
      e.clause = Clause::from_literals(std::move(lits));
    } catch (const Error& err) {
      throw Error(ErrorCode::kSyntaxError, err.what(), line);
    }
  }
  for (;; ++i) {
    if (i >= toks.size())
      throw Error(ErrorCode::kSyntaxError, "unterminated antecedent list", line);
    long long v = to_int(toks[i], line);
    if (v == 0) break;
    if (v < 0) throw Error(ErrorCode::kSyntaxError, "negative antecedent id", line);
    e.antecedents.push_back(v);
  }
  if (i + 1 != toks.size()) throw Error(ErrorCode::kSyntaxError, "trailing tokens", line);
  if (!e.clause && e.antecedents.empty())
    throw Error(ErrorCode::kSyntaxError, "leaf without clause", line);
  return e;
}

// Folds the antecedents left to right. When the next antecedent does not
// resolve with the running clause, the remaining ones are tried in order.
NodeId build_chain(ResolutionProof& proof, const std::vector<NodeId>& ants,
                   std::size_t line) {
  NodeId acc = ants.front();
  std::vector<NodeId> rest(ants.begin() + 1, ants.end());
  while (!rest.empty()) {
    std::optional<Error> first_error;
    bool done = false;
    for (std::size_t j = 0; j < rest.size() && !done; ++j) {
      try {
        Var pivot = find_pivot(proof.clause(acc), proof.clause(rest[j]));
        acc = proof.add_resolvent(acc, rest[j], pivot);
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(j));
        done = true;
      } catch (const Error& e) {
        if (!first_error) first_error = Error(e.code(), e.what(), line);
      }
    }
    if (!done) throw *first_error;
  }
  return acc;
}

}  // namespace

ResolutionProof parse_tracecheck(std::string_view text, const TracecheckOptions& options) {
  std::vector<Entry> entries;
  std::unordered_map<long long, std::size_t> index;
  std::size_t line_no = 0, pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    auto toks = split_ws(text.substr(pos, eol - pos));
    pos = eol + 1;
    ++line_no;
    if (toks.empty()) continue;
    Entry e = parse_line(toks, line_no);
    if (!index.emplace(e.id, entries.size()).second)
      throw Error(ErrorCode::kSyntaxError, "duplicate id " + std::to_string(e.id), line_no);
    entries.push_back(std::move(e));
  }
  if (entries.empty()) throw Error(ErrorCode::kSyntaxError, "empty proof");

  std::unordered_set<long long> referenced;
  for (const auto& e : entries) {
    for (long long a : e.antecedents) {
      if (!index.count(a))
        throw Error(ErrorCode::kDanglingAntecedent, "antecedent " + std::to_string(a) +
                                                         " of clause " + std::to_string(e.id) +
                                                         " is undefined",
                    e.line);
      referenced.insert(a);
    }
  }
  std::vector<std::size_t> roots;
  for (std::size_t i = 0; i < entries.size(); ++i)
    if (!referenced.count(entries[i].id)) roots.push_back(i);
  if (roots.empty()) throw Error(ErrorCode::kSyntaxError, "no root: antecedents are cyclic");
  if (roots.size() > 1) {
    std::vector<std::size_t> empty_roots;
    for (auto r : roots)
      if (entries[r].clause && entries[r].clause->empty()) empty_roots.push_back(r);
    if (empty_roots.size() != 1)
      throw Error(ErrorCode::kAmbiguousRoot,
                  std::to_string(roots.size()) + " unreferenced clauses");
    roots = empty_roots;
  }

  ResolutionProof proof;
  std::vector<NodeId> built(entries.size(), kNoNode);
  std::vector<std::uint8_t> state(entries.size(), 0);
  std::vector<std::size_t> stack{roots.front()};
  while (!stack.empty()) {
    std::size_t i = stack.back();
    const Entry& e = entries[i];
    if (state[i] == 0) {
      state[i] = 1;
      for (auto it = e.antecedents.rbegin(); it != e.antecedents.rend(); ++it) {
        std::size_t j = index.at(*it);
        if (state[j] == 1)
          throw Error(ErrorCode::kSyntaxError, "cyclic antecedents", e.line);
        if (state[j] == 0) stack.push_back(j);
      }
      continue;
    }
    stack.pop_back();
    if (state[i] == 2) continue;
    state[i] = 2;
    if (e.antecedents.empty()) {
      built[i] = proof.add_leaf(*e.clause);
      continue;
    }
    if (e.antecedents.size() == 1)
      throw Error(ErrorCode::kSyntaxError, "a single antecedent is not a resolution step",
                  e.line);
    std::vector<NodeId> ants;
    ants.reserve(e.antecedents.size());
    for (long long a : e.antecedents) ants.push_back(built[index.at(a)]);
    NodeId n = build_chain(proof, ants, e.line);
    if (e.clause && *e.clause != proof.clause(n)) {
      if (options.validate_clauses)
        throw Error(ErrorCode::kClauseMismatch,
                    "clause " + std::to_string(e.id) + " states {" + e.clause->to_string() +
                        "} but resolves to {" + proof.clause(n).to_string() + "}",
                    e.line);
      // Unvalidated: keep what the file says and let check_legal judge it.
      proof.set_clause(n, *e.clause);
    }
    built[i] = n;
  }
  proof.set_root(built[roots.front()]);
  return proof;
}

std::string write_tracecheck(const ResolutionProof& proof) {
  auto report = check_legal(proof);
  if (!report.legal()) throw Error(ErrorCode::kIllegalProof, report.to_string());
  auto order = topological_order(proof, Direction::kTopDown);
  std::vector<std::size_t> number(proof.id_bound(), 0);
  std::string out;
  for (std::size_t k = 0; k < order.size(); ++k) {
    NodeId n = order[k];
    number[n] = k + 1;
    const auto& node = proof.node(n);
    out += std::to_string(k + 1);
    for (int d : node.clause.to_dimacs()) {
      out += ' ';
      out += std::to_string(d);
    }
    out += " 0";
    if (node.is_inner()) {
      out += ' ';
      out += std::to_string(number[node.parent_pos]);
      out += ' ';
      out += std::to_string(number[node.parent_neg]);
    }
    out += " 0\n";
  }
  return out;
}

std::string export_dot(const ResolutionProof& proof) {
  std::string out = "digraph proof {\n";
  auto ids = proof.ids();
  for (NodeId n : ids) {
    out += "  n" + std::to_string(n) + " [label=\"" + proof.clause(n).to_string() + "\"";
    if (n == proof.root()) out += ", shape=box";
    out += "];\n";
  }
  for (NodeId n : ids) {
    const auto& node = proof.node(n);
    if (!node.is_inner()) continue;
    std::string label = " [label=\"" + std::to_string(node.pivot) + "\"];\n";
    out += "  n" + std::to_string(node.parent_pos) + " -> n" + std::to_string(n) + label;
    out += "  n" + std::to_string(node.parent_neg) + " -> n" + std::to_string(n) + label;
  }
  out += "}\n";
  return out;
}

}  // namespace resproof
