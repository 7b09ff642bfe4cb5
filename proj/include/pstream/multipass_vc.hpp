#pragma once

#include <cstdint>
#include <vector>

#include "pstream/decision.hpp"
#include "pstream/stream.hpp"

namespace pstream {

// Lexicographic cursor over the binary strings {0,1}^k, 0^k first; advancing
// past 1^k sets the exhausted sentinel.
class BranchString {
 public:
  explicit BranchString(int k);
  int length() const { return k_; }
  bool exhausted() const { return exhausted_; }
  // 1-based, counted from the most significant position.
  bool bit(int i) const;
  void advance();
  // Ledger cost: the k bits packed into words of floor(log2 n) bits each.
  std::int64_t words(Vertex n) const;

 private:
  int k_;
  bool exhausted_ = false;
  std::uint64_t value_ = 0;
};

// Enumerates the subsets of {0,...,ground_size-1} with at most max_size
// elements, each exactly once, in lexicographic order of the increasing index
// sequences (so: {}, {0}, {0,1}, ..). Storage stays at max_size words.
class BoundedSubsetCursor {
 public:
  BoundedSubsetCursor(int ground_size, int max_size);
  bool exhausted() const { return exhausted_; }
  const std::vector<int>& indices() const { return current_; }
  void advance();

 private:
  int n_;
  int k_;
  bool exhausted_ = false;
  std::vector<int> current_;
};

struct VcResult {
  bool yes = false;
  std::vector<Vertex> cover;
  RunStats stats;
};

// One pass per binary branch string, at most 2^k passes total. Insert-only
// streams only.
VcResult vc_branching(const ReplayableStream& s, int k);

// Maximal-matching bootstrap followed by one compression pass per candidate
// intersection subset; at most 1 + 2^{2k} passes. Insert-only streams only.
VcResult vc_iterative_compression(const ReplayableStream& s, int k);

struct MatchingPassResult {
  bool exceeded = false;
  std::vector<Vertex> matched_vertices;  // sorted; empty when exceeded
};

// Grows a maximal matching greedily in one pass, aborting once the matching
// would exceed `cap` edges.
MatchingPassResult greedy_maximal_matching_pass(const ReplayableStream& s, int cap,
                                                SpaceLedger& ledger, PassCounter& pc);

enum class DisjointVcStatus { Found, TooBig, Conflict };

struct DisjointVcResult {
  DisjointVcStatus status = DisjointVcStatus::Conflict;
  std::vector<Vertex> cover;  // Y plus the forced outside vertices, on Found
};

// One pass deciding whether a vertex cover of size <= budget exists whose
// intersection with S is exactly Y. Requires S to cover every edge of the
// stream, Y a subset of S, both sorted ascending. Conflict: an edge inside
// S\Y. TooBig: the forced outside set exceeds budget - |Y|.
DisjointVcResult disjoint_vc_pass(const ReplayableStream& s, const std::vector<Vertex>& S,
                                  const std::vector<Vertex>& Y, int budget,
                                  SpaceLedger& ledger, PassCounter& pc);

}  // namespace pstream
