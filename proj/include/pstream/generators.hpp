#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pstream/cnf.hpp"
#include "pstream/graph.hpp"
#include "pstream/oracles.hpp"
#include "pstream/stream.hpp"

namespace pstream {

// Alice holds a permutation delta of [1..N] (N a power of two), written as
// the bit string formed by concatenating the log2(N)-bit encodings of
// delta(1),...,delta(N); value v is encoded as v-1, most significant bit
// first. Bob holds a 1-based index into that string.
struct PermInstance {
  int N = 0;
  std::vector<int> delta;  // delta[i-1] = image of i, values in [1..N]
  int bit_index = 0;       // 1-based, in [1, N*log2(N)]

  static PermInstance make(int N, std::vector<int> delta, int bit_index);
  static PermInstance random(int N, int bit_index, std::uint64_t seed);

  int bits_per_value() const;            // log2(N)
  std::pair<int, int> split_index() const;  // (j, l), both 1-based
  int truth_bit() const;                 // l-th bit of the encoding of delta(j)
};

// Alice holds a bit string of length r*r addressed through the row-major
// bijection [N] -> [r]x[r]; Bob holds a 1-based position.
struct IndexInstance {
  int r = 0;
  std::vector<std::uint8_t> bits;  // bits[I-1], length r*r
  int index = 0;                   // 1-based I* in [1, r*r]

  static IndexInstance make(int r, std::vector<std::uint8_t> bits, int index);
  static IndexInstance random(int r, int index, std::uint64_t seed);

  std::pair<int, int> cell() const;  // (alpha, beta), 1-based
  int truth_bit() const { return bits[index - 1]; }
};

struct GeneratedStream {
  ReplayableStream stream;
  int truth_bit = 0;
};

// Path gadget on 2N+2 vertices: Alice's perfect matching w_i - x_{delta(i)},
// Bob's pendant v - w_j and the star from y onto the x's whose encoded value
// has bit l equal to zero.
GeneratedStream gen_perm_5path(const PermInstance& p);

// One-extra-vertex gadget on 2N+1 vertices; the graph is acyclic exactly when
// the queried bit is one.
GeneratedStream gen_perm_treewidth1(const PermInstance& p);

// Identical edge set to gen_perm_treewidth1; decided through the feedback
// vertex set oracle instead.
GeneratedStream gen_perm_fvs0(const PermInstance& p);

// Bipartite bit matrix plus the four-vertex domination gadget on 2r+4
// vertices; minimum dominating set is 3 exactly when the queried bit is one.
GeneratedStream gen_index_domset3(const IndexInstance& x);

// Bit matrix plus one apex vertex on 2r+1 vertices; girth 3 exactly when the
// queried bit is one.
GeneratedStream gen_index_girth3(const IndexInstance& x);

struct Generated2Sat {
  CnfInstance cnf;
  int truth_bit = 0;
};

// 2-CNF over num_vars variables split into halves X and Y, one clause per bit
// through the row-major pairing, plus the two query clauses; satisfiable
// exactly when the queried bit is zero.
Generated2Sat gen_index_2sat(int num_vars, const std::vector<std::uint8_t>& bits, int index);

// One draw from the dominating-set estimation distribution, in the block
// formulation (k = 2*beta elements per partition, t = 16 blocks, block size
// beta/8). theta = 0 puts Bob's complement block inside S_{i_star}, theta = 1
// outside. Vertices are 0-based; the special vertex is n.
struct DomSetEstSample {
  int n = 0;
  int beta = 0;
  int theta = 0;
  int i_star = 0;                       // in [0, n)
  std::vector<std::vector<int>> sets;   // sets[i] = S_i, sorted, size beta
  std::vector<int> t_bar;               // sorted, size beta/8
  StoredGraph graph;                    // on n+1 vertices
  ReplayableStream stream;              // vertex-arrival order, deduplicated
};

DomSetEstSample sample_domset_est(int n, int beta, std::uint64_t seed,
                                  std::optional<int> forced_theta = std::nullopt);

enum class ReductionTag {
  Perm5Path,
  PermTreewidth1,
  PermFvs0,
  IndexDomset3,
  IndexGirth3,
  Index2Sat,
  DomsetEst,
};

std::optional<ReductionTag> reduction_tag_from_name(const std::string& name);
std::string to_string(ReductionTag tag);

// Bob-side decoding: recovers the hidden bit from a generated graph through
// the corresponding oracle decision.
int extract_bit(const StoredGraph& g, ReductionTag tag, const DeskBounds& bounds = {});
int extract_bit(const CnfInstance& cnf);

}  // namespace pstream
