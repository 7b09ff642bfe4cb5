#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "pstream/oracles.hpp"

namespace pstream {

// A clause is a set of nonzero literals in DIMACS convention: +v for the
// variable v, -v for its negation, variables numbered 1..num_vars.
struct Clause {
  std::vector<int> literals;
};

struct CnfInstance {
  int num_vars = 0;
  std::vector<Clause> clauses;

  // Validates ranges and rejects clauses holding a variable and its negation.
  static CnfInstance make(int num_vars, std::vector<Clause> clauses);

  int max_clause_size() const;
};

enum class SatResult { Sat, Unsat };

std::string to_string(SatResult r);

// Implication-graph decision for instances whose clauses have at most two
// literals. Empty clauses force Unsat.
SatResult sat2_solve(const CnfInstance& cnf);

// Exhaustive assignment enumeration; refuses instances beyond the desk bound.
SatResult satd_brute(const CnfInstance& cnf, const DeskBounds& bounds = {});

// DIMACS text: "p cnf <vars> <clauses>" header, clause lines terminated by 0.
CnfInstance read_dimacs(std::istream& in);
CnfInstance read_dimacs_file(const std::string& path);
void write_dimacs(std::ostream& out, const CnfInstance& cnf);
void write_dimacs_file(const std::string& path, const CnfInstance& cnf);

}  // namespace pstream
