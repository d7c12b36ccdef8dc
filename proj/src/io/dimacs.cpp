#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <set>
#include <sstream>

#include "resproof/error.hpp"
#include "resproof/io.hpp"

namespace resproof {

void CnfFormula::add(Clause c) {
  num_vars = std::max<std::size_t>(num_vars, c.max_var());
  clauses.push_back(std::move(c));
  origin.push_back(clauses.size());
}

std::vector<Var> CnfFormula::variables() const {
  std::vector<Var> vars;
  for (const auto& c : clauses)
    for (auto l : c.literals()) vars.push_back(l.var());
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

CnfFormula CnfFormula::deduplicated() const {
  CnfFormula out;
  out.num_vars = num_vars;
  std::set<Clause> seen;
  for (std::size_t i = 0; i < clauses.size(); ++i) {
    if (!seen.insert(clauses[i]).second) continue;
    out.clauses.push_back(clauses[i]);
    out.origin.push_back(origin[i]);
  }
  return out;
}

namespace {

bool parse_int(std::string_view tok, long long& value) {
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  return ec == std::errc() && ptr == tok.data() + tok.size();
}

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

}  // namespace

CnfFormula parse_dimacs(std::string_view text, std::vector<std::string>* warnings) {
  CnfFormula cnf;
  bool have_header = false;
  std::size_t header_vars = 0, header_clauses = 0, seen_clauses = 0;
  std::vector<Literal> current;
  std::size_t line_no = 0, pos = 0;
  auto warn = [&](std::string msg) {
    if (warnings) warnings->push_back(std::move(msg));
  };
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    auto toks = split_ws(line);
    if (toks.empty()) continue;
    if (toks[0] == "c" || toks[0][0] == 'c') continue;
    if (toks[0] == "%") break;  // SATLIB trailer
    if (toks[0] == "p") {
      long long v = 0, c = 0;
      if (have_header || toks.size() != 4 || toks[1] != "cnf" || !parse_int(toks[2], v) ||
          !parse_int(toks[3], c) || v < 0 || c < 0)
        throw Error(ErrorCode::kSyntaxError, "malformed header", line_no);
      have_header = true;
      header_vars = static_cast<std::size_t>(v);
      header_clauses = static_cast<std::size_t>(c);
      cnf.num_vars = header_vars;
      continue;
    }
    for (auto tok : toks) {
      long long value = 0;
      if (!parse_int(tok, value) || value > INT32_MAX || value < -INT32_MAX)
        throw Error(ErrorCode::kSyntaxError, "bad literal '" + std::string(tok) + "'", line_no);
      if (value == 0) {
        ++seen_clauses;
        try {
          Clause c = Clause::from_literals(std::move(current));
          cnf.clauses.push_back(std::move(c));
          cnf.origin.push_back(seen_clauses);
        } catch (const Error&) {
          warn("line " + std::to_string(line_no) + ": tautological clause dropped");
        }
        current.clear();
        continue;
      }
      auto lit = Literal::from_dimacs(static_cast<int>(value));
      if (have_header && lit.var() > header_vars)
        throw Error(ErrorCode::kLiteralOutOfRange,
                    "variable " + std::to_string(lit.var()) + " exceeds header count " +
                        std::to_string(header_vars),
                    line_no);
      current.push_back(lit);
    }
  }
  if (!current.empty()) {
    warn("last clause is not terminated by 0; accepted");
    ++seen_clauses;
    cnf.clauses.push_back(Clause::from_literals(std::move(current)));
    cnf.origin.push_back(seen_clauses);
  }
  if (!have_header) {
    warn("missing 'p cnf' header");
    for (const auto& c : cnf.clauses)
      cnf.num_vars = std::max<std::size_t>(cnf.num_vars, c.max_var());
  } else if (seen_clauses != header_clauses) {
    warn("header announces " + std::to_string(header_clauses) + " clauses, found " +
         std::to_string(seen_clauses));
  }
  return cnf;
}

std::string write_dimacs(const CnfFormula& cnf) {
  std::string out = "p cnf " + std::to_string(cnf.num_vars) + " " +
                    std::to_string(cnf.clauses.size()) + "\n";
  for (const auto& c : cnf.clauses) {
    for (int d : c.to_dimacs()) out += std::to_string(d) + " ";
    out += "0\n";
  }
  return out;
}

bool looks_like_dimacs(std::string_view text) {
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    auto toks = split_ws(text.substr(pos, eol - pos));
    pos = eol + 1;
    if (toks.empty()) continue;
    if (toks[0][0] == 'c') continue;
    return toks[0] == "p";
  }
  return false;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kInvalidArgument, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kInvalidArgument, "cannot write " + path.string());
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
}

}  // namespace resproof
