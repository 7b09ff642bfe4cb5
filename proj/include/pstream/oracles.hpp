#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pstream/graph.hpp"

namespace pstream {

// Explicit size limits for the exact solvers. Inputs beyond a bound are
// refused rather than ground through.
struct DeskBounds {
  int vc_max_n = 24;
  int path_max_n = 18;
  int fvs_max_n = 16;
  int treewidth_max_n = 16;
  int domset_max_n = 24;
  int sat_brute_max_vars = 24;
};

class DeskBoundError : public std::runtime_error {
 public:
  explicit DeskBoundError(const std::string& what) : std::runtime_error(what) {}
};

struct WitnessResult {
  int size = 0;
  std::vector<Vertex> witness;
};

// Minimum vertex cover via bounded branching.
WitnessResult vc_min(const StoredGraph& g, const DeskBounds& bounds = {});

// Number of edges on a longest simple path.
int longest_path_length(const StoredGraph& g, const DeskBounds& bounds = {});

// Decision form with early exit; fills *certificate with a path on k+1
// vertices when one is found and certificate != nullptr.
bool has_path_of_length(const StoredGraph& g, int k,
                        std::vector<Vertex>* certificate = nullptr,
                        const DeskBounds& bounds = {});

// Minimum feedback vertex set by subset enumeration in increasing size.
WitnessResult fvs_min(const StoredGraph& g, const DeskBounds& bounds = {});

// Exact treewidth via the elimination-ordering dynamic program over vertex
// subsets. Edgeless graphs have treewidth 0, forests with an edge 1.
int treewidth_exact(const StoredGraph& g, const DeskBounds& bounds = {});

// Length of the shortest cycle; nullopt when the graph is acyclic.
std::optional<int> girth(const StoredGraph& g);

// Minimum dominating set by subset enumeration in increasing size.
WitnessResult domset_min(const StoredGraph& g, const DeskBounds& bounds = {});

// Exact test for a dominating set of at most `cap` vertices, cap <= 2.
// Unlike domset_min this has no size bound: it scans singletons and pairs.
bool has_dominating_set_of_size(const StoredGraph& g, int cap);

// True when S is a vertex cover of g.
bool is_vertex_cover(const StoredGraph& g, const std::vector<Vertex>& cover);

}  // namespace pstream
