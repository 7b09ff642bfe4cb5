#include "pstream/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace pstream {

namespace {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  // Returns false if x and y were already connected.
  bool merge(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    parent_[x] = y;
    return true;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace

StoredGraph StoredGraph::from_edges(Vertex n, std::vector<std::pair<Vertex, Vertex>> raw) {
  for (auto& [a, b] : raw) {
    if (a == b) throw std::invalid_argument("StoredGraph: self-loop");
    if (a > b) std::swap(a, b);
    if (a < 0 || b >= n) throw std::invalid_argument("StoredGraph: vertex out of range");
  }
  std::sort(raw.begin(), raw.end());
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  return StoredGraph{n, std::move(raw)};
}

bool StoredGraph::has_edge(Vertex a, Vertex b) const {
  if (a > b) std::swap(a, b);
  return std::binary_search(edges.begin(), edges.end(), std::make_pair(a, b));
}

std::vector<std::vector<Vertex>> StoredGraph::adjacency() const {
  std::vector<std::vector<Vertex>> adj(n);
  for (const auto& [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

std::vector<std::uint64_t> StoredGraph::adjacency_masks() const {
  if (n > 64) throw std::invalid_argument("adjacency_masks: n > 64");
  std::vector<std::uint64_t> adj(n, 0);
  for (const auto& [u, v] : edges) {
    adj[u] |= std::uint64_t{1} << v;
    adj[v] |= std::uint64_t{1} << u;
  }
  return adj;
}

StoredGraph graph_from_stream(const ReplayableStream& s) {
  std::map<std::pair<Vertex, Vertex>, int> net;
  for (const EdgeUpdate& e : s.updates())
    net[{e.u, e.v}] += e.op == UpdateOp::Insert ? 1 : -1;
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (const auto& [edge, count] : net)
    if (count != 0) edges.push_back(edge);
  return StoredGraph::from_edges(s.vertex_count(), std::move(edges));
}

ReplayableStream stream_from_graph(const StoredGraph& g) {
  std::vector<EdgeUpdate> updates;
  updates.reserve(g.edges.size());
  for (const auto& [u, v] : g.edges) updates.push_back(EdgeUpdate{u, v, UpdateOp::Insert});
  return ReplayableStream::open(g.n, StreamModel::InsertOnly, std::move(updates));
}

StoredGraph disjoint_union(std::span<const StoredGraph> parts) {
  Vertex total = 0;
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (const StoredGraph& g : parts) {
    for (const auto& [u, v] : g.edges)
      edges.emplace_back(u + total, v + total);
    total += g.n;
  }
  return StoredGraph::from_edges(total, std::move(edges));
}

bool is_acyclic(const StoredGraph& g) {
  UnionFind uf(g.n);
  for (const auto& [u, v] : g.edges)
    if (!uf.merge(u, v)) return false;
  return true;
}

int component_count(const StoredGraph& g) {
  UnionFind uf(g.n);
  int components = g.n;
  for (const auto& [u, v] : g.edges)
    if (uf.merge(u, v)) --components;
  return components;
}

}  // namespace pstream
