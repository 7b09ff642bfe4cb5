#include "pstream/multipass_vc.hpp"

#include <algorithm>
#include <stdexcept>

namespace pstream {

namespace {

void require_insert_only(const ReplayableStream& s, const char* who) {
  if (s.model() != StreamModel::InsertOnly)
    throw ModelMismatchError(std::string(who) + ": insert-only streams only");
}

bool contains(const std::vector<Vertex>& sorted, Vertex v) {
  return std::binary_search(sorted.begin(), sorted.end(), v);
}

}  // namespace

BranchString::BranchString(int k) : k_(k) {
  if (k < 0 || k > 62) throw std::invalid_argument("BranchString: k out of range");
}

bool BranchString::bit(int i) const {
  return value_ >> (k_ - i) & 1;
}

void BranchString::advance() {
  ++value_;
  if (value_ == std::uint64_t{1} << k_) exhausted_ = true;
}

std::int64_t BranchString::words(Vertex n) const {
  if (k_ == 0) return 0;
  int bits_per_word = 1;
  for (Vertex span = 2; span * 2 <= n; span *= 2) ++bits_per_word;
  return (k_ + bits_per_word - 1) / bits_per_word;
}

BoundedSubsetCursor::BoundedSubsetCursor(int ground_size, int max_size)
    : n_(ground_size), k_(max_size) {
  if (ground_size < 0 || max_size < 0)
    throw std::invalid_argument("BoundedSubsetCursor: negative sizes");
}

void BoundedSubsetCursor::advance() {
  if (exhausted_) return;
  const int candidate = current_.empty() ? 0 : current_.back() + 1;
  if (static_cast<int>(current_.size()) < k_ && candidate < n_) {
    current_.push_back(candidate);
    return;
  }
  while (!current_.empty()) {
    int e = current_.back();
    current_.pop_back();
    if (e + 1 < n_) {
      current_.push_back(e + 1);
      return;
    }
  }
  exhausted_ = true;
}

VcResult vc_branching(const ReplayableStream& s, int k) {
  require_insert_only(s, "vc_branching");
  if (k < 0) throw std::invalid_argument("vc_branching: k must be >= 0");

  SpaceLedger ledger;
  PassCounter pc;
  BranchString branch(k);
  ledger.charge(2 + branch.words(s.vertex_count()));  // i, j, and the string

  std::vector<Vertex> cover;
  cover.reserve(k);
  while (!branch.exhausted()) {
    bool failed = false;
    cover.clear();
    s.pass(pc, [&](const EdgeUpdate& e) {
      const bool covered = std::find(cover.begin(), cover.end(), e.u) != cover.end() ||
                           std::find(cover.begin(), cover.end(), e.v) != cover.end();
      if (covered) return true;
      const int depth = static_cast<int>(cover.size()) + 1;
      if (depth > k) {
        failed = true;
        return false;
      }
      cover.push_back(branch.bit(depth) ? e.v : e.u);
      ledger.charge(1);
      return true;
    });
    ledger.charge(-static_cast<std::int64_t>(cover.size()));
    if (!failed) {
      std::sort(cover.begin(), cover.end());
      return VcResult{true, std::move(cover), {pc.passes, ledger.peak_words(), 0}};
    }
    branch.advance();
  }
  return VcResult{false, {}, {pc.passes, ledger.peak_words(), 0}};
}

MatchingPassResult greedy_maximal_matching_pass(const ReplayableStream& s, int cap,
                                                SpaceLedger& ledger, PassCounter& pc) {
  require_insert_only(s, "greedy_maximal_matching_pass");
  std::vector<Vertex> matched;  // kept sorted for membership tests
  std::int64_t size = 0;
  ledger.charge(1);  // matching size counter
  bool exceeded = false;
  s.pass(pc, [&](const EdgeUpdate& e) {
    if (contains(matched, e.u) || contains(matched, e.v)) return true;
    if (size == cap) {
      exceeded = true;
      return false;
    }
    matched.insert(std::upper_bound(matched.begin(), matched.end(), e.u), e.u);
    matched.insert(std::upper_bound(matched.begin(), matched.end(), e.v), e.v);
    ledger.charge(2);
    ++size;
    return true;
  });
  ledger.charge(-1);
  if (exceeded) {
    ledger.charge(-2 * size);
    return MatchingPassResult{true, {}};
  }
  return MatchingPassResult{false, std::move(matched)};
}

DisjointVcResult disjoint_vc_pass(const ReplayableStream& s, const std::vector<Vertex>& S,
                                  const std::vector<Vertex>& Y, int budget,
                                  SpaceLedger& ledger, PassCounter& pc) {
  require_insert_only(s, "disjoint_vc_pass");
  if (static_cast<int>(Y.size()) > budget)
    throw std::invalid_argument("disjoint_vc_pass: |Y| exceeds budget");
  const int external_cap = budget - static_cast<int>(Y.size());

  std::vector<Vertex> forced;  // sorted
  DisjointVcStatus status = DisjointVcStatus::Found;
  s.pass(pc, [&](const EdgeUpdate& e) {
    const bool u_in_rest = contains(S, e.u) && !contains(Y, e.u);
    const bool v_in_rest = contains(S, e.v) && !contains(Y, e.v);
    if (u_in_rest && v_in_rest) {
      status = DisjointVcStatus::Conflict;
      return false;
    }
    Vertex outside = -1;
    if (u_in_rest && !contains(S, e.v))
      outside = e.v;
    else if (v_in_rest && !contains(S, e.u))
      outside = e.u;
    if (outside >= 0 && !contains(forced, outside)) {
      if (static_cast<int>(forced.size()) == external_cap) {
        status = DisjointVcStatus::TooBig;
        return false;
      }
      forced.insert(std::upper_bound(forced.begin(), forced.end(), outside), outside);
      ledger.charge(1);
    }
    return true;
  });
  ledger.charge(-static_cast<std::int64_t>(forced.size()));
  if (status != DisjointVcStatus::Found) return DisjointVcResult{status, {}};

  std::vector<Vertex> cover = Y;
  cover.insert(cover.end(), forced.begin(), forced.end());
  std::sort(cover.begin(), cover.end());
  return DisjointVcResult{DisjointVcStatus::Found, std::move(cover)};
}

VcResult vc_iterative_compression(const ReplayableStream& s, int k) {
  require_insert_only(s, "vc_iterative_compression");
  if (k < 0) throw std::invalid_argument("vc_iterative_compression: k must be >= 0");

  SpaceLedger ledger;
  PassCounter pc;
  ledger.charge(1);  // subset iteration index

  MatchingPassResult matching = greedy_maximal_matching_pass(s, k, ledger, pc);
  if (matching.exceeded)
    return VcResult{false, {}, {pc.passes, ledger.peak_words(), 0}};

  // The saturated vertices form a vertex cover of size <= 2k; an empty
  // maximal matching means an edgeless graph.
  const std::vector<Vertex>& base = matching.matched_vertices;
  if (base.empty())
    return VcResult{true, {}, {pc.passes, ledger.peak_words(), 0}};

  // base stays charged as the cover candidate for the rest of the run.
  BoundedSubsetCursor cursor(static_cast<int>(base.size()), k);
  std::vector<Vertex> y;
  while (!cursor.exhausted()) {
    y.clear();
    for (int idx : cursor.indices()) y.push_back(base[idx]);
    ledger.charge(static_cast<std::int64_t>(y.size()));
    DisjointVcResult attempt = disjoint_vc_pass(s, base, y, k, ledger, pc);
    ledger.charge(-static_cast<std::int64_t>(y.size()));
    if (attempt.status == DisjointVcStatus::Found) {
      ledger.charge(-static_cast<std::int64_t>(base.size()));  // release V_M
      return VcResult{true, std::move(attempt.cover), {pc.passes, ledger.peak_words(), 0}};
    }
    cursor.advance();
  }
  return VcResult{false, {}, {pc.passes, ledger.peak_words(), 0}};
}

}  // namespace pstream
