#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pstream/decision.hpp"
#include "pstream/graph.hpp"
#include "pstream/oracles.hpp"

namespace pstream {

// Outcome of the "store at most M edges or give up" runner.
struct EdgeBudgetOutcome {
  bool over_budget = false;
  std::optional<StoredGraph> graph;  // present iff within budget
  // Insert-only: edges seen when the run aborted (M+1) or total stored.
  // Insert-delete: the end-of-stream net counter.
  std::int64_t final_count = 0;
};

// Single pass. Insert-only streams hold the edges directly and abort as soon
// as the count passes M; insert-delete streams feed an M-sparse recovery
// sketch and judge by the end-of-stream net counter, so deletions can bring a
// stream back under budget.
EdgeBudgetOutcome run_edge_budget(const ReplayableStream& s, std::int64_t budget,
                                  SpaceLedger& ledger, PassCounter& pc);

// Specialized threshold deciders; M per the respective extremal bounds.
Decision k_path_decide(const ReplayableStream& s, int k, RunStats* stats = nullptr,
                       const DeskBounds& bounds = {});
Decision k_treewidth_decide(const ReplayableStream& s, int k, RunStats* stats = nullptr,
                            const DeskBounds& bounds = {});
Decision k_fvs_decide(const ReplayableStream& s, int k, RunStats* stats = nullptr,
                      const DeskBounds& bounds = {});

enum class Direction { Minimize, Maximize };

// A problem plugged into the generic edge-threshold algorithm: over-budget
// streams are immediate NO (minimization) or YES (maximization) instances;
// within budget the stored graph goes to the offline decider.
struct BidimensionalProblemSpec {
  std::string name;
  Direction direction = Direction::Minimize;
  // k -> side length of the grid forced by a k+1 value.
  std::function<std::int64_t(int)> budget_root;
  int grid_exponent = 10;
  std::function<bool(const StoredGraph&, int, const DeskBounds&)> offline_decider;
};

const std::vector<BidimensionalProblemSpec>& builtin_bidimensional_specs();
const BidimensionalProblemSpec* find_bidimensional_spec(std::string_view name);

// M = tau * budget_root(k)^grid_exponent * n. Refuses budgets beyond desk
// scale instead of overflowing.
Decision bidimensional_decide(const ReplayableStream& s, int k,
                              const BidimensionalProblemSpec& spec, std::int64_t tau = 1,
                              RunStats* stats = nullptr, const DeskBounds& bounds = {});

}  // namespace pstream
