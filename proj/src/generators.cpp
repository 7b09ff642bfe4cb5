#include "pstream/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

namespace pstream {

namespace {

bool power_of_two(int x) { return x > 0 && (x & (x - 1)) == 0; }

int log2_exact(int x) {
  int bits = 0;
  while ((1 << bits) < x) ++bits;
  return bits;
}

ReplayableStream insert_only_stream(Vertex n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
  std::vector<EdgeUpdate> updates;
  updates.reserve(edges.size());
  for (const auto& [u, v] : edges) updates.push_back(make_update(u, v));
  return ReplayableStream::open(n, StreamModel::InsertOnly, std::move(updates));
}

}  // namespace

PermInstance PermInstance::make(int N, std::vector<int> delta, int bit_index) {
  if (!power_of_two(N)) throw std::invalid_argument("PermInstance: N must be a power of two");
  if (static_cast<int>(delta.size()) != N)
    throw std::invalid_argument("PermInstance: permutation length != N");
  std::vector<char> seen(N + 1, 0);
  for (int image : delta) {
    if (image < 1 || image > N || seen[image])
      throw std::invalid_argument("PermInstance: not a permutation of [1..N]");
    seen[image] = 1;
  }
  const int total_bits = N * log2_exact(N);
  if (bit_index < 1 || bit_index > std::max(total_bits, 1))
    throw std::invalid_argument("PermInstance: bit index out of range");
  return PermInstance{N, std::move(delta), bit_index};
}

PermInstance PermInstance::random(int N, int bit_index, std::uint64_t seed) {
  std::vector<int> delta(N);
  std::iota(delta.begin(), delta.end(), 1);
  std::mt19937_64 rng(seed);
  std::shuffle(delta.begin(), delta.end(), rng);
  return make(N, std::move(delta), bit_index);
}

int PermInstance::bits_per_value() const { return std::max(1, log2_exact(N)); }

std::pair<int, int> PermInstance::split_index() const {
  const int width = bits_per_value();
  const int j = (bit_index - 1) / width + 1;
  const int l = (bit_index - 1) % width + 1;
  return {j, l};
}

namespace {

// l-th bit, 1-based from the most significant, of the (value-1) encoding.
int encoded_bit(int value, int l, int width) {
  return (value - 1) >> (width - l) & 1;
}

}  // namespace

int PermInstance::truth_bit() const {
  const auto [j, l] = split_index();
  return encoded_bit(delta[j - 1], l, bits_per_value());
}

IndexInstance IndexInstance::make(int r, std::vector<std::uint8_t> bits, int index) {
  if (r < 1) throw std::invalid_argument("IndexInstance: r must be >= 1");
  if (static_cast<int>(bits.size()) != r * r)
    throw std::invalid_argument("IndexInstance: bit string length != r*r");
  for (auto b : bits)
    if (b > 1) throw std::invalid_argument("IndexInstance: bits must be 0/1");
  if (index < 1 || index > r * r)
    throw std::invalid_argument("IndexInstance: index out of range");
  return IndexInstance{r, std::move(bits), index};
}

IndexInstance IndexInstance::random(int r, int index, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(r) * r);
  for (auto& b : bits) b = static_cast<std::uint8_t>(rng() & 1);
  return make(r, std::move(bits), index);
}

std::pair<int, int> IndexInstance::cell() const {
  return {(index - 1) / r + 1, (index - 1) % r + 1};
}

GeneratedStream gen_perm_5path(const PermInstance& p) {
  const int N = p.N;
  const int width = p.bits_per_value();
  const auto [j, l] = p.split_index();
  // Ids: w_i -> i-1, x_r -> N+r-1, v -> 2N, y -> 2N+1.
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int i = 1; i <= N; ++i) edges.emplace_back(i - 1, N + p.delta[i - 1] - 1);
  edges.emplace_back(j - 1, 2 * N);
  for (int r = 1; r <= N; ++r)
    if (encoded_bit(r, l, width) == 0) edges.emplace_back(N + r - 1, 2 * N + 1);
  return GeneratedStream{insert_only_stream(2 * N + 2, edges), p.truth_bit()};
}

GeneratedStream gen_perm_treewidth1(const PermInstance& p) {
  const int N = p.N;
  const int width = p.bits_per_value();
  const auto [j, l] = p.split_index();
  // Ids: w_i -> i-1, x_r -> N+r-1, v -> 2N.
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int i = 1; i <= N; ++i) edges.emplace_back(i - 1, N + p.delta[i - 1] - 1);
  edges.emplace_back(j - 1, 2 * N);
  for (int r = 1; r <= N; ++r)
    if (encoded_bit(r, l, width) == 0) edges.emplace_back(N + r - 1, 2 * N);
  return GeneratedStream{insert_only_stream(2 * N + 1, edges), p.truth_bit()};
}

GeneratedStream gen_perm_fvs0(const PermInstance& p) { return gen_perm_treewidth1(p); }

GeneratedStream gen_index_domset3(const IndexInstance& x) {
  const int r = x.r;
  const auto [alpha, beta] = x.cell();
  // Ids: y_i -> i-1, w_i -> r+i-1, x1 -> 2r, x2 -> 2r+1, z1 -> 2r+2, z2 -> 2r+3.
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int idx = 1; idx <= r * r; ++idx)
    if (x.bits[idx - 1]) {
      const int row = (idx - 1) / r + 1;
      const int col = (idx - 1) % r + 1;
      edges.emplace_back(row - 1, r + col - 1);
    }
  edges.emplace_back(2 * r, 2 * r + 1);
  edges.emplace_back(2 * r + 2, 2 * r + 3);
  for (int i = 1; i <= r; ++i)
    if (i != alpha) edges.emplace_back(i - 1, 2 * r);
  for (int i = 1; i <= r; ++i)
    if (i != beta) edges.emplace_back(r + i - 1, 2 * r + 2);
  return GeneratedStream{insert_only_stream(2 * r + 4, edges), x.truth_bit()};
}

GeneratedStream gen_index_girth3(const IndexInstance& x) {
  const int r = x.r;
  const auto [alpha, beta] = x.cell();
  // Ids: y_i -> i-1, w_i -> r+i-1, z -> 2r.
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int idx = 1; idx <= r * r; ++idx)
    if (x.bits[idx - 1]) {
      const int row = (idx - 1) / r + 1;
      const int col = (idx - 1) % r + 1;
      edges.emplace_back(row - 1, r + col - 1);
    }
  edges.emplace_back(alpha - 1, 2 * r);
  edges.emplace_back(r + beta - 1, 2 * r);
  return GeneratedStream{insert_only_stream(2 * r + 1, edges), x.truth_bit()};
}

Generated2Sat gen_index_2sat(int num_vars, const std::vector<std::uint8_t>& bits, int index) {
  if (num_vars < 2 || num_vars % 2 != 0)
    throw std::invalid_argument("gen_index_2sat: variable count must be even and >= 2");
  const int half = num_vars / 2;
  const int n_bits = half * half;
  if (static_cast<int>(bits.size()) != n_bits)
    throw std::invalid_argument("gen_index_2sat: bit string length != (N/2)^2");
  if (index < 1 || index > n_bits)
    throw std::invalid_argument("gen_index_2sat: index out of range");

  // Variables: x_i -> i, y_j -> half + j (DIMACS 1-based).
  std::vector<Clause> clauses;
  for (int L = 1; L <= n_bits; ++L) {
    const int i = (L - 1) / half + 1;
    const int j = (L - 1) % half + 1;
    if (bits[L - 1])
      clauses.push_back(Clause{{-i, half + j}});
    else
      clauses.push_back(Clause{{i, half + j}});
  }
  const int i_star = (index - 1) / half + 1;
  const int j_star = (index - 1) % half + 1;
  clauses.push_back(Clause{{-(half + j_star)}});
  clauses.push_back(Clause{{i_star, half + j_star}});
  return Generated2Sat{CnfInstance::make(num_vars, std::move(clauses)), bits[index - 1]};
}

DomSetEstSample sample_domset_est(int n, int beta, std::uint64_t seed,
                                  std::optional<int> forced_theta) {
  if (beta < 8 || beta % 8 != 0)
    throw std::invalid_argument("sample_domset_est: beta must be a positive multiple of 8");
  if (n < 2 * beta)
    throw std::invalid_argument("sample_domset_est: need n >= 2*beta for the block partition");
  if (forced_theta && *forced_theta != 0 && *forced_theta != 1)
    throw std::invalid_argument("sample_domset_est: theta must be 0 or 1");
  const int block_size = beta / 8;  // p
  const int blocks = 16;            // t
  const int picked = 2 * beta;      // k = t * p

  std::mt19937_64 rng(seed);
  std::vector<int> scratch(n);
  std::iota(scratch.begin(), scratch.end(), 0);

  std::vector<std::vector<int>> sets(n);
  std::vector<int> partition(picked);
  std::vector<int> block_ids(blocks);
  std::vector<std::vector<int>> i_star_blocks;
  std::vector<int> i_star_chosen;

  const int i_star = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
  for (int i = 0; i < n; ++i) {
    // Partial Fisher-Yates: the first `picked` entries become P_i's elements.
    for (int j = 0; j < picked; ++j) {
      const int swap_with = j + static_cast<int>(rng() % static_cast<std::uint64_t>(n - j));
      std::swap(scratch[j], scratch[swap_with]);
    }
    std::copy_n(scratch.begin(), picked, partition.begin());
    std::iota(block_ids.begin(), block_ids.end(), 0);
    std::shuffle(block_ids.begin(), block_ids.end(), rng);
    // Blocks are consecutive chunks; the first t/2 shuffled ids form S_i.
    std::vector<int>& set = sets[i];
    for (int b = 0; b < blocks / 2; ++b) {
      const int id = block_ids[b];
      for (int o = 0; o < block_size; ++o) set.push_back(partition[id * block_size + o]);
    }
    std::sort(set.begin(), set.end());
    if (i == i_star) {
      i_star_blocks.assign(blocks, {});
      for (int b = 0; b < blocks; ++b)
        i_star_blocks[b].assign(partition.begin() + b * block_size,
                                partition.begin() + (b + 1) * block_size);
      i_star_chosen.assign(block_ids.begin(), block_ids.begin() + blocks / 2);
    }
  }

  std::vector<char> chosen(blocks, 0);
  for (int id : i_star_chosen) chosen[id] = 1;
  int theta;
  int block_pick;
  if (forced_theta) {
    theta = *forced_theta;
    std::vector<int> pool;
    for (int b = 0; b < blocks; ++b)
      if ((chosen[b] != 0) == (theta == 0)) pool.push_back(b);
    block_pick = pool[rng() % pool.size()];
  } else {
    block_pick = static_cast<int>(rng() % blocks);
    theta = chosen[block_pick] ? 0 : 1;
  }
  std::vector<int> t_bar = i_star_blocks[block_pick];
  std::sort(t_bar.begin(), t_bar.end());

  // Neighborhoods: N[i] = {i} u S_i for i in [0,n), N[n] = {n} u T. Edges are
  // emitted vertex by vertex, skipping ones an earlier vertex already placed.
  std::vector<char> in_t_bar(n, 0);
  for (int v : t_bar) in_t_bar[v] = 1;
  std::set<std::pair<Vertex, Vertex>> emitted;
  std::vector<EdgeUpdate> updates;
  auto emit = [&](Vertex a, Vertex b) {
    if (a == b) return;
    auto key = std::minmax(a, b);
    if (emitted.insert({key.first, key.second}).second)
      updates.push_back(EdgeUpdate{key.first, key.second, UpdateOp::Insert});
  };
  for (int i = 0; i < n; ++i)
    for (int s : sets[i]) emit(i, s);
  for (int v = 0; v < n; ++v)
    if (!in_t_bar[v]) emit(n, v);

  ReplayableStream stream =
      ReplayableStream::open(n + 1, StreamModel::InsertOnly, std::move(updates));
  StoredGraph graph = graph_from_stream(stream);
  return DomSetEstSample{n,
                         beta,
                         theta,
                         i_star,
                         std::move(sets),
                         std::move(t_bar),
                         std::move(graph),
                         std::move(stream)};
}

std::optional<ReductionTag> reduction_tag_from_name(const std::string& name) {
  if (name == "perm-5path") return ReductionTag::Perm5Path;
  if (name == "perm-treewidth1") return ReductionTag::PermTreewidth1;
  if (name == "perm-fvs0") return ReductionTag::PermFvs0;
  if (name == "index-domset3") return ReductionTag::IndexDomset3;
  if (name == "index-girth3") return ReductionTag::IndexGirth3;
  if (name == "index-2sat") return ReductionTag::Index2Sat;
  if (name == "domset-est") return ReductionTag::DomsetEst;
  return std::nullopt;
}

std::string to_string(ReductionTag tag) {
  switch (tag) {
    case ReductionTag::Perm5Path: return "perm-5path";
    case ReductionTag::PermTreewidth1: return "perm-treewidth1";
    case ReductionTag::PermFvs0: return "perm-fvs0";
    case ReductionTag::IndexDomset3: return "index-domset3";
    case ReductionTag::IndexGirth3: return "index-girth3";
    case ReductionTag::Index2Sat: return "index-2sat";
    case ReductionTag::DomsetEst: return "domset-est";
  }
  return "?";
}

int extract_bit(const StoredGraph& g, ReductionTag tag, const DeskBounds& bounds) {
  switch (tag) {
    case ReductionTag::Perm5Path: {
      // Vertex count 2N+2. At N = 2 the y-star has a single leaf, so the
      // Bob-side path tops out at three edges instead of five; the decision
      // threshold follows the gadget size.
      const int N = (g.n - 2) / 2;
      const int threshold = N >= 4 ? 5 : 3;
      return has_path_of_length(g, threshold, nullptr, bounds) ? 0 : 1;
    }
    case ReductionTag::PermTreewidth1:
      return treewidth_exact(g, bounds) <= 1 ? 1 : 0;
    case ReductionTag::PermFvs0:
      return fvs_min(g, bounds).size == 0 ? 1 : 0;
    case ReductionTag::IndexDomset3:
      return domset_min(g, bounds).size <= 3 ? 1 : 0;
    case ReductionTag::IndexGirth3:
      return girth(g) == std::optional<int>(3) ? 1 : 0;
    case ReductionTag::Index2Sat:
    case ReductionTag::DomsetEst:
      throw std::invalid_argument("extract_bit: tag needs its dedicated decoder");
  }
  throw std::invalid_argument("extract_bit: unknown tag");
}

int extract_bit(const CnfInstance& cnf) {
  return sat2_solve(cnf) == SatResult::Sat ? 0 : 1;
}

}  // namespace pstream
