#include "pstream/cnf.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace pstream {

CnfInstance CnfInstance::make(int num_vars, std::vector<Clause> clauses) {
  if (num_vars < 0) throw std::invalid_argument("CnfInstance: negative variable count");
  for (const Clause& c : clauses) {
    for (int lit : c.literals) {
      int var = std::abs(lit);
      if (lit == 0 || var > num_vars)
        throw std::invalid_argument("CnfInstance: literal out of range");
      if (std::find(c.literals.begin(), c.literals.end(), -lit) != c.literals.end())
        throw std::invalid_argument("CnfInstance: clause contains a variable and its negation");
    }
  }
  return CnfInstance{num_vars, std::move(clauses)};
}

int CnfInstance::max_clause_size() const {
  std::size_t best = 0;
  for (const Clause& c : clauses) best = std::max(best, c.literals.size());
  return static_cast<int>(best);
}

std::string to_string(SatResult r) { return r == SatResult::Sat ? "SAT" : "UNSAT"; }

namespace {

// Node 2v for variable v+1 positive, 2v+1 negated.
int lit_node(int lit) {
  int var = std::abs(lit) - 1;
  return 2 * var + (lit < 0 ? 1 : 0);
}
int negated(int node) { return node ^ 1; }

// Iterative Kosaraju condensation; returns the component id per node.
std::vector<int> scc_ids(const std::vector<std::vector<int>>& out_edges) {
  const int n = static_cast<int>(out_edges.size());
  std::vector<std::vector<int>> in_edges(n);
  for (int u = 0; u < n; ++u)
    for (int v : out_edges[u]) in_edges[v].push_back(u);

  std::vector<int> order;
  order.reserve(n);
  std::vector<char> seen(n, 0);
  std::vector<std::pair<int, std::size_t>> stack;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    seen[s] = 1;
    stack.emplace_back(s, 0);
    while (!stack.empty()) {
      auto& [u, next] = stack.back();
      if (next < out_edges[u].size()) {
        int v = out_edges[u][next++];
        if (!seen[v]) {
          seen[v] = 1;
          stack.emplace_back(v, 0);
        }
      } else {
        order.push_back(u);
        stack.pop_back();
      }
    }
  }

  std::vector<int> component(n, -1);
  int comp = 0;
  std::vector<int> dfs;
  for (int i = n - 1; i >= 0; --i) {
    int s = order[i];
    if (component[s] >= 0) continue;
    component[s] = comp;
    dfs.push_back(s);
    while (!dfs.empty()) {
      int u = dfs.back();
      dfs.pop_back();
      for (int v : in_edges[u])
        if (component[v] < 0) {
          component[v] = comp;
          dfs.push_back(v);
        }
    }
    ++comp;
  }
  return component;
}

}  // namespace

SatResult sat2_solve(const CnfInstance& cnf) {
  std::vector<std::vector<int>> implies(2 * static_cast<std::size_t>(cnf.num_vars));
  for (const Clause& c : cnf.clauses) {
    const auto& lits = c.literals;
    if (lits.size() > 2)
      throw std::invalid_argument("sat2_solve: clause with more than two literals");
    if (lits.empty()) return SatResult::Unsat;
    if (lits.size() == 1) {
      implies[negated(lit_node(lits[0]))].push_back(lit_node(lits[0]));
    } else {
      implies[negated(lit_node(lits[0]))].push_back(lit_node(lits[1]));
      implies[negated(lit_node(lits[1]))].push_back(lit_node(lits[0]));
    }
  }
  const auto component = scc_ids(implies);
  for (int v = 0; v < cnf.num_vars; ++v)
    if (component[2 * v] == component[2 * v + 1]) return SatResult::Unsat;
  return SatResult::Sat;
}

SatResult satd_brute(const CnfInstance& cnf, const DeskBounds& bounds) {
  if (cnf.num_vars > bounds.sat_brute_max_vars)
    throw DeskBoundError("satd_brute: " + std::to_string(cnf.num_vars) +
                         " variables exceeds desk bound " +
                         std::to_string(bounds.sat_brute_max_vars));
  const std::uint64_t assignments = std::uint64_t{1} << cnf.num_vars;
  for (std::uint64_t a = 0; a < assignments; ++a) {
    bool ok = true;
    for (const Clause& c : cnf.clauses) {
      bool clause_true = false;
      for (int lit : c.literals) {
        bool value = a >> (std::abs(lit) - 1) & 1;
        if (lit < 0) value = !value;
        if (value) {
          clause_true = true;
          break;
        }
      }
      if (!clause_true) {
        ok = false;
        break;
      }
    }
    if (ok) return SatResult::Sat;
  }
  return SatResult::Unsat;
}

CnfInstance read_dimacs(std::istream& in) {
  std::string line;
  int num_vars = -1;
  long long num_clauses = -1;
  std::vector<Clause> clauses;
  Clause current;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == 'c' || line[0] == '#') continue;
    if (line[0] == 'p') {
      std::istringstream header(line);
      std::string p, fmt;
      header >> p >> fmt >> num_vars >> num_clauses;
      if (fmt != "cnf" || num_vars < 0)
        throw std::invalid_argument("read_dimacs: bad problem line");
      continue;
    }
    std::istringstream row(line);
    int lit;
    while (row >> lit) {
      if (lit == 0) {
        clauses.push_back(std::move(current));
        current = Clause{};
      } else {
        current.literals.push_back(lit);
      }
    }
  }
  if (num_vars < 0) throw std::invalid_argument("read_dimacs: missing problem line");
  if (!current.literals.empty())
    throw std::invalid_argument("read_dimacs: clause not terminated by 0");
  return CnfInstance::make(num_vars, std::move(clauses));
}

CnfInstance read_dimacs_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  return read_dimacs(in);
}

void write_dimacs(std::ostream& out, const CnfInstance& cnf) {
  out << "p cnf " << cnf.num_vars << ' ' << cnf.clauses.size() << '\n';
  for (const Clause& c : cnf.clauses) {
    for (int lit : c.literals) out << lit << ' ';
    out << "0\n";
  }
}

void write_dimacs_file(const std::string& path, const CnfInstance& cnf) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open " + path + " for writing");
  write_dimacs(out, cnf);
}

}  // namespace pstream
