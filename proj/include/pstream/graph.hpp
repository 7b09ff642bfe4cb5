#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "pstream/stream.hpp"

namespace pstream {

// Simple undirected graph on vertex set [0, n), edges stored canonically
// (u < v), sorted and deduplicated.
struct StoredGraph {
  Vertex n = 0;
  std::vector<std::pair<Vertex, Vertex>> edges;

  static StoredGraph from_edges(Vertex n, std::vector<std::pair<Vertex, Vertex>> raw);

  std::size_t edge_count() const { return edges.size(); }
  bool has_edge(Vertex a, Vertex b) const;
  std::vector<std::vector<Vertex>> adjacency() const;
  // Open-neighborhood bitmasks; requires n <= 64.
  std::vector<std::uint64_t> adjacency_masks() const;
};

// Applies the stream's net effect; the stream invariants guarantee end
// multiplicities in {0,1}.
StoredGraph graph_from_stream(const ReplayableStream& s);

// Insert-only stream listing the graph's edges in canonical order.
ReplayableStream stream_from_graph(const StoredGraph& g);

// Block-offset relabeling: vertex v of block i maps to v + sum of earlier
// block sizes.
StoredGraph disjoint_union(std::span<const StoredGraph> parts);

bool is_acyclic(const StoredGraph& g);
int component_count(const StoredGraph& g);

}  // namespace pstream
