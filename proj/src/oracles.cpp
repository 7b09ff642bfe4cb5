#include "pstream/oracles.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <queue>

namespace pstream {

namespace {

using Mask = std::uint64_t;

void require_size(int n, int bound, const char* what) {
  if (n > bound)
    throw DeskBoundError(std::string(what) + ": n = " + std::to_string(n) +
                         " exceeds desk bound " + std::to_string(bound));
}

// Lowest set bit index.
int first_bit(Mask m) { return __builtin_ctzll(m); }

// Enumerates size-`size` index subsets of [0, n) in lexicographic order.
// Returns false when exhausted; `combo` must hold `size` slots.
bool next_combination(std::vector<int>& combo, int n) {
  const int size = static_cast<int>(combo.size());
  for (int i = size - 1; i >= 0; --i) {
    if (combo[i] < n - (size - i)) {
      ++combo[i];
      for (int j = i + 1; j < size; ++j) combo[j] = combo[j - 1] + 1;
      return true;
    }
  }
  return false;
}

bool find_uncovered_edge(const std::vector<Mask>& adj, Mask removed, int n,
                         int* u_out, int* v_out) {
  for (int u = 0; u < n; ++u) {
    if (removed >> u & 1) continue;
    Mask open = adj[u] & ~removed;
    if (open) {
      *u_out = u;
      *v_out = first_bit(open);
      return true;
    }
  }
  return false;
}

bool vc_decide(const std::vector<Mask>& adj, int n, Mask removed, int k, Mask* cover) {
  int u, v;
  if (!find_uncovered_edge(adj, removed, n, &u, &v)) {
    *cover = removed;
    return true;
  }
  if (k == 0) return false;
  if (vc_decide(adj, n, removed | (Mask{1} << u), k - 1, cover)) return true;
  return vc_decide(adj, n, removed | (Mask{1} << v), k - 1, cover);
}

std::vector<Vertex> mask_to_vertices(Mask m) {
  std::vector<Vertex> out;
  while (m) {
    out.push_back(first_bit(m));
    m &= m - 1;
  }
  return out;
}

// Longest simple path extension from `u` given visited set; early exit once
// `target` edges are reached when target >= 0.
int path_dfs(const std::vector<Mask>& adj, int u, Mask visited, int target,
             std::vector<Vertex>* trail) {
  int best = 0;
  Mask open = adj[u] & ~visited;
  while (open) {
    int v = first_bit(open);
    open &= open - 1;
    if (trail) trail->push_back(v);
    int len = 1 + path_dfs(adj, v, visited | (Mask{1} << v), target - 1, trail);
    if (len > best) {
      best = len;
      if (target >= 0 && best >= target) return best;
    }
    if (trail) trail->pop_back();
  }
  return best;
}

bool acyclic_after_removal(const StoredGraph& g, Mask removed) {
  // Union-find over surviving vertices.
  std::vector<int> parent(g.n);
  for (int i = 0; i < g.n; ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [u, v] : g.edges) {
    if ((removed >> u & 1) || (removed >> v & 1)) continue;
    int a = find(u), b = find(v);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

}  // namespace

WitnessResult vc_min(const StoredGraph& g, const DeskBounds& bounds) {
  require_size(g.n, bounds.vc_max_n, "vc_min");
  const auto adj = g.adjacency_masks();
  for (int k = 0; k <= g.n; ++k) {
    Mask cover = 0;
    if (vc_decide(adj, g.n, 0, k, &cover)) {
      auto witness = mask_to_vertices(cover);
      // Branching may remove more vertices than the cover needs when k
      // exceeds the optimum; the loop order makes the first hit minimum.
      return WitnessResult{static_cast<int>(witness.size()), std::move(witness)};
    }
  }
  return WitnessResult{g.n, {}};  // unreachable: V always covers
}

int longest_path_length(const StoredGraph& g, const DeskBounds& bounds) {
  require_size(g.n, bounds.path_max_n, "longest_path_length");
  const auto adj = g.adjacency_masks();
  int best = 0;
  for (int s = 0; s < g.n; ++s)
    best = std::max(best, path_dfs(adj, s, Mask{1} << s, -1, nullptr));
  return best;
}

bool has_path_of_length(const StoredGraph& g, int k, std::vector<Vertex>* certificate,
                        const DeskBounds& bounds) {
  if (k <= 0) return g.n > 0 || k <= 0;
  require_size(g.n, bounds.path_max_n, "has_path_of_length");
  const auto adj = g.adjacency_masks();
  for (int s = 0; s < g.n; ++s) {
    std::vector<Vertex> trail{static_cast<Vertex>(s)};
    if (path_dfs(adj, s, Mask{1} << s, k, certificate ? &trail : nullptr) >= k) {
      if (certificate) *certificate = trail;
      return true;
    }
  }
  return false;
}

WitnessResult fvs_min(const StoredGraph& g, const DeskBounds& bounds) {
  require_size(g.n, bounds.fvs_max_n, "fvs_min");
  if (is_acyclic(g)) return WitnessResult{0, {}};
  for (int size = 1; size <= g.n; ++size) {
    std::vector<int> combo(size);
    for (int i = 0; i < size; ++i) combo[i] = i;
    do {
      Mask removed = 0;
      for (int idx : combo) removed |= Mask{1} << idx;
      if (acyclic_after_removal(g, removed))
        return WitnessResult{size, mask_to_vertices(removed)};
    } while (next_combination(combo, g.n));
  }
  return WitnessResult{g.n, {}};  // unreachable
}

int treewidth_exact(const StoredGraph& g, const DeskBounds& bounds) {
  require_size(g.n, bounds.treewidth_max_n, "treewidth_exact");
  const int n = g.n;
  if (n == 0 || g.edges.empty()) return 0;
  const auto adj = g.adjacency_masks();

  // Q(S, v): vertices outside S∪{v} reachable from v via paths whose interior
  // lies in S.
  auto q_count = [&](Mask s, int v) {
    Mask reach = adj[v];
    Mask frontier = reach & s;
    while (frontier) {
      Mask grow = 0;
      while (frontier) {
        int u = first_bit(frontier);
        frontier &= frontier - 1;
        grow |= adj[u];
      }
      grow &= ~reach;
      reach |= grow;
      frontier = grow & s;
    }
    return __builtin_popcountll(reach & ~s & ~(Mask{1} << v));
  };

  const Mask full = (n == 64) ? ~Mask{0} : (Mask{1} << n) - 1;
  std::vector<std::int8_t> best(full + 1, std::numeric_limits<std::int8_t>::max());
  best[0] = 0;
  for (Mask s = 1; s <= full; ++s) {
    int value = std::numeric_limits<int>::max();
    Mask rest = s;
    while (rest) {
      int v = first_bit(rest);
      rest &= rest - 1;
      Mask without = s & ~(Mask{1} << v);
      value = std::min(value, std::max<int>(best[without], q_count(without, v)));
    }
    best[s] = static_cast<std::int8_t>(value);
  }
  return best[full];
}

std::optional<int> girth(const StoredGraph& g) {
  const auto adj = g.adjacency();
  int best = std::numeric_limits<int>::max();
  std::vector<int> dist(g.n), parent(g.n);
  for (int s = 0; s < g.n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(parent.begin(), parent.end(), -1);
    std::queue<int> queue;
    dist[s] = 0;
    queue.push(s);
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop();
      for (int v : adj[u]) {
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          parent[v] = u;
          queue.push(v);
        } else if (v != parent[u]) {
          // Cycle through s of length >= dist[u] + dist[v] + 1; scanning all
          // roots makes the minimum exact.
          best = std::min(best, dist[u] + dist[v] + 1);
        }
      }
    }
  }
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return best;
}

WitnessResult domset_min(const StoredGraph& g, const DeskBounds& bounds) {
  require_size(g.n, bounds.domset_max_n, "domset_min");
  if (g.n == 0) return WitnessResult{0, {}};
  std::vector<Mask> closed(g.n);
  for (int v = 0; v < g.n; ++v) closed[v] = Mask{1} << v;
  for (const auto& [u, v] : g.edges) {
    closed[u] |= Mask{1} << v;
    closed[v] |= Mask{1} << u;
  }
  const Mask full = (g.n == 64) ? ~Mask{0} : (Mask{1} << g.n) - 1;
  for (int size = 1; size <= g.n; ++size) {
    std::vector<int> combo(size);
    for (int i = 0; i < size; ++i) combo[i] = i;
    do {
      Mask dominated = 0;
      for (int idx : combo) dominated |= closed[idx];
      if (dominated == full) {
        std::vector<Vertex> witness(combo.begin(), combo.end());
        return WitnessResult{size, std::move(witness)};
      }
    } while (next_combination(combo, g.n));
  }
  return WitnessResult{g.n, {}};  // unreachable for n >= 1
}

bool has_dominating_set_of_size(const StoredGraph& g, int cap) {
  if (cap > 2) throw std::invalid_argument("has_dominating_set_of_size: cap <= 2 only");
  if (g.n == 0) return true;
  if (cap <= 0) return false;
  const int words = (g.n + 63) / 64;
  std::vector<std::uint64_t> closed(static_cast<std::size_t>(g.n) * words, 0);
  auto set_bit = [&](int row, int bit) {
    closed[static_cast<std::size_t>(row) * words + bit / 64] |= std::uint64_t{1} << (bit % 64);
  };
  for (int v = 0; v < g.n; ++v) set_bit(v, v);
  for (const auto& [u, v] : g.edges) {
    set_bit(u, v);
    set_bit(v, u);
  }
  std::vector<std::uint64_t> fullmask(words, ~std::uint64_t{0});
  if (g.n % 64) fullmask[words - 1] = (std::uint64_t{1} << (g.n % 64)) - 1;
  auto covers = [&](int a, int b) {
    for (int w = 0; w < words; ++w) {
      std::uint64_t got = closed[static_cast<std::size_t>(a) * words + w];
      if (b >= 0) got |= closed[static_cast<std::size_t>(b) * words + w];
      if (got != fullmask[w]) return false;
    }
    return true;
  };
  for (int a = 0; a < g.n; ++a)
    if (covers(a, -1)) return true;
  if (cap >= 2)
    for (int a = 0; a < g.n; ++a)
      for (int b = a + 1; b < g.n; ++b)
        if (covers(a, b)) return true;
  return false;
}

bool is_vertex_cover(const StoredGraph& g, const std::vector<Vertex>& cover) {
  if (g.n > 64) {
    std::vector<char> in(g.n, 0);
    for (Vertex v : cover) in[v] = 1;
    for (const auto& [u, v] : g.edges)
      if (!in[u] && !in[v]) return false;
    return true;
  }
  Mask m = 0;
  for (Vertex v : cover) m |= Mask{1} << v;
  for (const auto& [u, v] : g.edges)
    if (!((m >> u & 1) || (m >> v & 1))) return false;
  return true;
}

}  // namespace pstream
