#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "pstream/ledger.hpp"

namespace pstream {

// M-sparse recovery over a universe [0, U): accepts insertions and deletions
// of elements and recovers the exact net multiset whenever at most M distinct
// elements survive with positive multiplicity.
//
// Implementation: a peeling cell table (kRows rows of 2M+8 cells, each cell a
// count / key-sum / fingerprint-sum triple) plus a global net counter and a
// verification register. Recovery peels pure cells and then cross-checks the
// result against the register, so a wrong multiset is returned only on a
// ~2^-64 fingerprint collision. Space is words() = 3*kRows*(2M+8) + 4 words,
// i.e. c*M with c = 30 plus a constant. Decoding assumes multiplicity * element
// stays below 2^64.
class SparseRecoverySketch {
 public:
  static constexpr int kRows = 5;
  static constexpr std::uint64_t kDefaultSeed = 0x9e3779b97f4a7c15ULL;

  SparseRecoverySketch(std::int64_t capacity, std::uint64_t universe,
                       SpaceLedger* ledger = nullptr,
                       std::uint64_t seed = kDefaultSeed);
  ~SparseRecoverySketch();

  SparseRecoverySketch(SparseRecoverySketch&& other) noexcept;
  SparseRecoverySketch& operator=(SparseRecoverySketch&&) = delete;
  SparseRecoverySketch(const SparseRecoverySketch&) = delete;
  SparseRecoverySketch& operator=(const SparseRecoverySketch&) = delete;

  void insert(std::uint64_t x);
  void erase(std::uint64_t x);

  struct Recovery {
    enum class Status { Recovered, Overflow };
    Status status = Status::Overflow;
    // (element, multiplicity), sorted by element, multiplicities >= 1.
    std::vector<std::pair<std::uint64_t, std::int64_t>> elements;
  };
  Recovery recover() const;

  std::int64_t capacity() const { return capacity_; }
  std::uint64_t universe() const { return universe_; }
  // Net number of updates (inserts minus deletes) over all elements.
  std::int64_t net_update_count() const { return net_count_; }
  std::int64_t words() const;

 private:
  struct Cell {
    std::int64_t count = 0;
    std::uint64_t key_sum = 0;
    std::uint64_t check_sum = 0;
  };

  std::size_t cell_index(int row, std::uint64_t x) const;
  void apply(std::uint64_t x, std::int64_t delta);

  std::int64_t capacity_;
  std::uint64_t universe_;
  std::uint64_t seed_;
  std::size_t cells_per_row_;
  std::vector<Cell> cells_;
  std::int64_t net_count_ = 0;
  std::uint64_t register_sum_ = 0;
  SpaceLedger* ledger_ = nullptr;
};

}  // namespace pstream
