#include "gridtree/cnf.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <cstdlib>

#include "gridtree/error.hpp"

namespace gridtree {

Clause make_clause(const std::vector<int>& dimacs_literals, int n) {
  if (dimacs_literals.size() != 3) {
    throw ArityError("clause has " + std::to_string(dimacs_literals.size()) +
                     " literals; exactly 3 are required");
  }
  Clause c;
  for (std::size_t i = 0; i < 3; ++i) {
    const int lit = dimacs_literals[i];
    const int var = std::abs(lit);
    if (lit == 0 || var > n) {
      throw PreconditionError("literal " + std::to_string(lit) + " out of range 1.." +
                              std::to_string(n));
    }
    c.lits[i] = {var, lit > 0};
  }
  std::sort(c.lits.begin(), c.lits.end(),
            [](const Literal& a, const Literal& b) { return a.var < b.var; });
  if (c.lits[0].var == c.lits[1].var || c.lits[1].var == c.lits[2].var) {
    throw PreconditionError("clause repeats variable " +
                            std::to_string(c.lits[1].var == c.lits[2].var ? c.lits[1].var
                                                                          : c.lits[0].var));
  }
  return c;
}

CnfFormula make_formula(int n, const std::vector<std::vector<int>>& clauses) {
  if (n < 0) throw PreconditionError("negative variable count");
  CnfFormula f;
  f.n = n;
  for (const auto& c : clauses) f.clauses.push_back(make_clause(c, n));
  return f;
}

namespace {

bool parse_int(std::string_view token, long long& out) {
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc{} && ptr == token.data() + token.size();
}

}  // namespace

CnfFormula parse_dimacs(std::string_view text) {
  long long n = -1;
  long long m = -1;
  std::vector<std::vector<int>> clauses;
  std::vector<int> current;
  std::size_t line_no = 0;
  std::size_t clause_line = 0;

  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;

    std::vector<std::pair<std::string_view, std::size_t>> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
      const std::size_t start = i;
      while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
      if (i > start) tokens.emplace_back(line.substr(start, i - start), start + 1);
    }
    if (tokens.empty() || tokens[0].first[0] == 'c' || tokens[0].first == "%") continue;

    if (tokens[0].first == "p") {
      if (n >= 0) throw ParseError("duplicate problem line", line_no, 1);
      if (tokens.size() != 4 || tokens[1].first != "cnf" || !parse_int(tokens[2].first, n) ||
          !parse_int(tokens[3].first, m) || n < 0 || m < 0 || n > 1'000'000) {
        throw ParseError("expected 'p cnf <vars> <clauses>'", line_no, 1);
      }
      continue;
    }
    if (n < 0) throw ParseError("clause before problem line", line_no, tokens[0].second);

    for (const auto& [token, col] : tokens) {
      long long lit = 0;
      if (!parse_int(token, lit)) {
        throw ParseError("invalid literal '" + std::string(token) + "'", line_no, col);
      }
      if (lit == 0) {
        try {
          make_clause(current, static_cast<int>(n));
        } catch (const ArityError& e) {
          throw ArityError(std::string(e.what()) + " (clause ending at line " +
                           std::to_string(line_no) + ")");
        } catch (const PreconditionError& e) {
          throw PreconditionError(std::string(e.what()) + " (clause ending at line " +
                                  std::to_string(line_no) + ")");
        }
        clauses.push_back(current);
        current.clear();
        continue;
      }
      if (lit > n || lit < -n) {
        throw ParseError("literal " + std::to_string(lit) + " exceeds declared variable count",
                         line_no, col);
      }
      if (current.empty()) clause_line = line_no;
      current.push_back(static_cast<int>(lit));
    }
  }
  if (n < 0) throw ParseError("missing problem line", 0, 0);
  if (!current.empty()) throw ParseError("unterminated clause", clause_line, 1);
  if (static_cast<long long>(clauses.size()) != m) {
    throw ParseError("problem line declares " + std::to_string(m) + " clauses, found " +
                         std::to_string(clauses.size()),
                     0, 0);
  }
  return make_formula(static_cast<int>(n), clauses);
}

std::string write_dimacs(const CnfFormula& f) {
  std::string out = "p cnf " + std::to_string(f.n) + " " + std::to_string(f.m()) + "\n";
  for (const auto& c : f.clauses) {
    for (const auto& l : c.lits) out += std::to_string(l.positive ? l.var : -l.var) + " ";
    out += "0\n";
  }
  return out;
}

bool literal_value(const Literal& l, const Assignment& a) { return a[l.var] == l.positive; }

bool clause_satisfied(const Clause& c, const Assignment& a) {
  return std::any_of(c.lits.begin(), c.lits.end(),
                     [&](const Literal& l) { return literal_value(l, a); });
}

bool satisfies(const CnfFormula& f, const Assignment& a) {
  if (a.values.size() != static_cast<std::size_t>(f.n)) return false;
  return std::all_of(f.clauses.begin(), f.clauses.end(),
                     [&](const Clause& c) { return clause_satisfied(c, a); });
}

namespace {

template <typename Visit>
void enumerate(const CnfFormula& f, Visit&& visit) {
  if (f.n > 24) throw ResourceError("brute force is limited to 24 variables");
  Assignment a;
  a.values.assign(static_cast<std::size_t>(f.n), false);
  const std::uint32_t total = std::uint32_t{1} << f.n;
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    for (int i = 0; i < f.n; ++i) a.values[static_cast<std::size_t>(i)] = ((mask >> i) & 1U) != 0;
    if (satisfies(f, a) && !visit(a)) return;
  }
}

}  // namespace

std::optional<Assignment> brute_force_sat(const CnfFormula& f) {
  std::optional<Assignment> found;
  enumerate(f, [&](const Assignment& a) {
    found = a;
    return false;
  });
  return found;
}

std::vector<Assignment> all_models(const CnfFormula& f) {
  std::vector<Assignment> models;
  enumerate(f, [&](const Assignment& a) {
    models.push_back(a);
    return true;
  });
  return models;
}

Assignment parse_assignment(std::string_view text) {
  Assignment a;
  std::size_t col = 1;
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) {
    text.remove_suffix(1);
  }
  if (text.empty()) return a;
  while (true) {
    const auto comma = text.find(',');
    const auto item = text.substr(0, comma);
    if (item == "1") {
      a.values.push_back(true);
    } else if (item == "0") {
      a.values.push_back(false);
    } else {
      throw ParseError("assignment entries must be 0 or 1", 1, col);
    }
    if (comma == std::string_view::npos) break;
    col += comma + 1;
    text.remove_prefix(comma + 1);
  }
  return a;
}

std::string format_assignment(const Assignment& a) {
  std::string out;
  for (std::size_t i = 0; i < a.values.size(); ++i) {
    if (i > 0) out += ',';
    out += a.values[i] ? '1' : '0';
  }
  return out;
}

}  // namespace gridtree
