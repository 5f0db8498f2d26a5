#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gridtree {

struct Literal {
  int var = 1;  // 1-based
  bool positive = true;

  friend bool operator==(const Literal&, const Literal&) = default;
};

/// Three literals over distinct variables, sorted by variable index, so that
/// lits[0] is the clause's first literal in variable order.
struct Clause {
  std::array<Literal, 3> lits;

  friend bool operator==(const Clause&, const Clause&) = default;
};

struct CnfFormula {
  int n = 0;
  std::vector<Clause> clauses;

  std::size_t m() const { return clauses.size(); }
  friend bool operator==(const CnfFormula&, const CnfFormula&) = default;
};

struct Assignment {
  std::vector<bool> values;  // values[i-1] is x_i

  bool operator[](int var) const { return values[static_cast<std::size_t>(var - 1)]; }
  friend bool operator==(const Assignment&, const Assignment&) = default;
};

/// Validates and sorts a clause given as signed DIMACS literals.
/// Throws ArityError / PreconditionError for bad arity, range or repeated
/// variables.
Clause make_clause(const std::vector<int>& dimacs_literals, int n);
CnfFormula make_formula(int n, const std::vector<std::vector<int>>& clauses);

/// DIMACS CNF; every clause must have exactly three literals over distinct
/// variables. Throws ParseError, ArityError or PreconditionError.
CnfFormula parse_dimacs(std::string_view text);
std::string write_dimacs(const CnfFormula& f);

bool literal_value(const Literal& l, const Assignment& a);
bool clause_satisfied(const Clause& c, const Assignment& a);
bool satisfies(const CnfFormula& f, const Assignment& a);

/// Exhaustive search; x_1 is the least significant bit of the enumeration
/// counter, so the returned model is the first one in that order.
/// Throws ResourceError for n > 24.
std::optional<Assignment> brute_force_sat(const CnfFormula& f);
/// All models in the same order.
std::vector<Assignment> all_models(const CnfFormula& f);

/// "1,0,1" <-> Assignment. Throws ParseError on anything but 0/1 lists.
Assignment parse_assignment(std::string_view text);
std::string format_assignment(const Assignment& a);

}  // namespace gridtree
