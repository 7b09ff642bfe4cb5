#include "pstream/threshold.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pstream/sparse_recovery.hpp"

namespace pstream {

namespace {

std::uint64_t encode_edge(Vertex u, Vertex v, Vertex n) {
  return static_cast<std::uint64_t>(u) * static_cast<std::uint64_t>(n) +
         static_cast<std::uint64_t>(v);
}

std::pair<Vertex, Vertex> decode_edge(std::uint64_t code, Vertex n) {
  return {static_cast<Vertex>(code / n), static_cast<Vertex>(code % n)};
}

EdgeBudgetOutcome run_insert_only(const ReplayableStream& s, std::int64_t budget,
                                  SpaceLedger& ledger, PassCounter& pc) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::int64_t count = 0;
  ledger.charge(1);  // edge counter
  bool over = false;
  s.pass(pc, [&](const EdgeUpdate& e) {
    if (count == budget) {
      over = true;
      ++count;
      return false;
    }
    edges.emplace_back(e.u, e.v);
    ledger.charge(2);
    ++count;
    return true;
  });
  EdgeBudgetOutcome out;
  out.final_count = count;
  if (over) {
    out.over_budget = true;
    ledger.charge(-2 * static_cast<std::int64_t>(edges.size()) - 1);
    return out;
  }
  out.graph = StoredGraph::from_edges(s.vertex_count(), std::move(edges));
  ledger.charge(-2 * count - 1);
  return out;
}

EdgeBudgetOutcome run_insert_delete(const ReplayableStream& s, std::int64_t budget,
                                    SpaceLedger& ledger, PassCounter& pc) {
  const Vertex n = std::max<Vertex>(s.vertex_count(), 1);
  SparseRecoverySketch sketch(budget, encode_edge(n - 1, n - 1, n) + 1, &ledger);
  std::int64_t net = 0;
  ledger.charge(1);  // net counter
  s.pass(pc, [&](const EdgeUpdate& e) {
    const std::uint64_t code = encode_edge(e.u, e.v, n);
    if (e.op == UpdateOp::Insert) {
      sketch.insert(code);
      ++net;
    } else {
      sketch.erase(code);
      --net;
    }
    return true;
  });
  EdgeBudgetOutcome out;
  out.final_count = net;
  if (net > budget) {
    out.over_budget = true;
    ledger.charge(-1);
    return out;
  }
  const auto recovery = sketch.recover();
  if (recovery.status != SparseRecoverySketch::Recovery::Status::Recovered)
    throw std::logic_error(
        "run_edge_budget: sketch overflow although the net counter is within budget");
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(recovery.elements.size());
  for (const auto& [code, mult] : recovery.elements) {
    if (mult != 1)
      throw std::logic_error("run_edge_budget: recovered edge with multiplicity != 1");
    edges.push_back(decode_edge(code, n));
  }
  out.graph = StoredGraph::from_edges(s.vertex_count(), std::move(edges));
  ledger.charge(-1);
  return out;
}

// Shared shape of the three specialized deciders and the generic one.
EdgeBudgetOutcome run_budget(const ReplayableStream& s, std::int64_t budget,
                             RunStats* stats) {
  SpaceLedger ledger;
  PassCounter pc;
  EdgeBudgetOutcome out = s.model() == StreamModel::InsertOnly
                              ? run_insert_only(s, budget, ledger, pc)
                              : run_insert_delete(s, budget, ledger, pc);
  if (stats) {
    stats->passes = pc.passes;
    stats->peak_words = ledger.peak_words();
    stats->threshold = budget;
  }
  return out;
}

}  // namespace

EdgeBudgetOutcome run_edge_budget(const ReplayableStream& s, std::int64_t budget,
                                  SpaceLedger& ledger, PassCounter& pc) {
  if (budget < 1) throw std::invalid_argument("run_edge_budget: budget must be >= 1");
  return s.model() == StreamModel::InsertOnly ? run_insert_only(s, budget, ledger, pc)
                                              : run_insert_delete(s, budget, ledger, pc);
}

Decision k_path_decide(const ReplayableStream& s, int k, RunStats* stats,
                       const DeskBounds& bounds) {
  if (k < 1) throw std::invalid_argument("k_path_decide: k must be >= 1");
  const std::int64_t budget =
      std::max<std::int64_t>(1, static_cast<std::int64_t>(s.vertex_count()) * k);
  EdgeBudgetOutcome out = run_budget(s, budget, stats);
  if (out.over_budget) return Decision{true, {}};
  Decision d;
  std::vector<Vertex> certificate;
  d.yes = has_path_of_length(*out.graph, k, &certificate, bounds);
  if (d.yes) d.witness = std::move(certificate);
  return d;
}

Decision k_treewidth_decide(const ReplayableStream& s, int k, RunStats* stats,
                            const DeskBounds& bounds) {
  if (k < 0) throw std::invalid_argument("k_treewidth_decide: k must be >= 0");
  const std::int64_t budget =
      std::max<std::int64_t>(1, static_cast<std::int64_t>(s.vertex_count()) * k);
  EdgeBudgetOutcome out = run_budget(s, budget, stats);
  if (out.over_budget) return Decision{false, {}};
  return Decision{treewidth_exact(*out.graph, bounds) <= k, {}};
}

Decision k_fvs_decide(const ReplayableStream& s, int k, RunStats* stats,
                      const DeskBounds& bounds) {
  if (k < 0) throw std::invalid_argument("k_fvs_decide: k must be >= 0");
  const std::int64_t budget =
      std::max<std::int64_t>(1, static_cast<std::int64_t>(s.vertex_count()) * (k + 1));
  EdgeBudgetOutcome out = run_budget(s, budget, stats);
  if (out.over_budget) return Decision{false, {}};
  WitnessResult fvs = fvs_min(*out.graph, bounds);
  if (fvs.size <= k) return Decision{true, std::move(fvs.witness)};
  return Decision{false, {}};
}

const std::vector<BidimensionalProblemSpec>& builtin_bidimensional_specs() {
  static const std::vector<BidimensionalProblemSpec> specs = [] {
    auto sqrt_root = [](int k) {
      return static_cast<std::int64_t>(std::ceil(std::sqrt(static_cast<double>(k) + 1.0)));
    };
    std::vector<BidimensionalProblemSpec> v;
    v.push_back({"treewidth",
                 Direction::Minimize,
                 [](int k) { return static_cast<std::int64_t>(k) + 1; },
                 10,
                 [](const StoredGraph& g, int k, const DeskBounds& b) {
                   return treewidth_exact(g, b) <= k;
                 }});
    v.push_back({"vc", Direction::Minimize, sqrt_root, 10,
                 [](const StoredGraph& g, int k, const DeskBounds& b) {
                   return vc_min(g, b).size <= k;
                 }});
    v.push_back({"fvs", Direction::Minimize, sqrt_root, 10,
                 [](const StoredGraph& g, int k, const DeskBounds& b) {
                   return fvs_min(g, b).size <= k;
                 }});
    v.push_back({"path", Direction::Maximize, sqrt_root, 10,
                 [](const StoredGraph& g, int k, const DeskBounds& b) {
                   return has_path_of_length(g, k, nullptr, b);
                 }});
    return v;
  }();
  return specs;
}

const BidimensionalProblemSpec* find_bidimensional_spec(std::string_view name) {
  for (const auto& spec : builtin_bidimensional_specs())
    if (spec.name == name) return &spec;
  return nullptr;
}

Decision bidimensional_decide(const ReplayableStream& s, int k,
                              const BidimensionalProblemSpec& spec, std::int64_t tau,
                              RunStats* stats, const DeskBounds& bounds) {
  if (k < 0) throw std::invalid_argument("bidimensional_decide: k must be >= 0");
  if (tau < 1) throw std::invalid_argument("bidimensional_decide: tau must be >= 1");
  const std::int64_t root = spec.budget_root(k);
  constexpr std::int64_t kMaxBudget = 1'000'000'000'000;
  __int128 budget = tau;
  for (int i = 0; i < spec.grid_exponent; ++i) {
    budget *= root;
    if (budget > kMaxBudget)
      throw DeskBoundError("bidimensional_decide: edge budget exceeds desk scale for k = " +
                           std::to_string(k));
  }
  budget *= std::max<Vertex>(s.vertex_count(), 1);
  if (budget > kMaxBudget)
    throw DeskBoundError("bidimensional_decide: edge budget exceeds desk scale for k = " +
                         std::to_string(k));
  EdgeBudgetOutcome out = run_budget(s, std::max<std::int64_t>(1, static_cast<std::int64_t>(budget)), stats);
  if (out.over_budget)
    return Decision{spec.direction == Direction::Maximize, {}};
  return Decision{spec.offline_decider(*out.graph, k, bounds), {}};
}

}  // namespace pstream
