#include "pstream/sparse_recovery.hpp"

#include <algorithm>
#include <stdexcept>

namespace pstream {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

SparseRecoverySketch::SparseRecoverySketch(std::int64_t capacity, std::uint64_t universe,
                                           SpaceLedger* ledger, std::uint64_t seed)
    : capacity_(capacity),
      universe_(universe),
      seed_(seed),
      cells_per_row_(static_cast<std::size_t>(2 * capacity + 8)),
      cells_(cells_per_row_ * kRows),
      ledger_(ledger) {
  if (capacity < 1) throw std::invalid_argument("SparseRecoverySketch: capacity must be >= 1");
  if (ledger_) ledger_->charge(words());
}

SparseRecoverySketch::~SparseRecoverySketch() {
  if (ledger_) ledger_->charge(-words());
}

SparseRecoverySketch::SparseRecoverySketch(SparseRecoverySketch&& other) noexcept
    : capacity_(other.capacity_),
      universe_(other.universe_),
      seed_(other.seed_),
      cells_per_row_(other.cells_per_row_),
      cells_(std::move(other.cells_)),
      net_count_(other.net_count_),
      register_sum_(other.register_sum_),
      ledger_(other.ledger_) {
  other.ledger_ = nullptr;
}

std::int64_t SparseRecoverySketch::words() const {
  return static_cast<std::int64_t>(3 * cells_per_row_ * kRows) + 4;
}

std::size_t SparseRecoverySketch::cell_index(int row, std::uint64_t x) const {
  std::uint64_t h = splitmix64(x ^ splitmix64(seed_ + static_cast<std::uint64_t>(row)));
  return static_cast<std::size_t>(row) * cells_per_row_ + h % cells_per_row_;
}

void SparseRecoverySketch::apply(std::uint64_t x, std::int64_t delta) {
  if (x >= universe_)
    throw std::out_of_range("SparseRecoverySketch: element outside universe");
  const std::uint64_t fp = splitmix64(x ^ seed_ ^ 0x5bf03635ULL);
  const std::uint64_t reg = splitmix64(x ^ seed_ ^ 0xc2b2ae35ULL);
  for (int row = 0; row < kRows; ++row) {
    Cell& c = cells_[cell_index(row, x)];
    c.count += delta;
    c.key_sum += static_cast<std::uint64_t>(delta) * x;
    c.check_sum += static_cast<std::uint64_t>(delta) * fp;
  }
  net_count_ += delta;
  register_sum_ += static_cast<std::uint64_t>(delta) * reg;
}

void SparseRecoverySketch::insert(std::uint64_t x) { apply(x, 1); }
void SparseRecoverySketch::erase(std::uint64_t x) { apply(x, -1); }

SparseRecoverySketch::Recovery SparseRecoverySketch::recover() const {
  std::vector<Cell> work = cells_;
  std::int64_t remaining = net_count_;
  std::uint64_t remaining_register = register_sum_;
  std::vector<std::pair<std::uint64_t, std::int64_t>> found;

  bool progress = true;
  while (progress) {
    progress = false;
    for (const Cell& c : work) {
      if (c.count < 1) continue;
      const std::uint64_t count = static_cast<std::uint64_t>(c.count);
      if (c.key_sum % count != 0) continue;
      const std::uint64_t x = c.key_sum / count;
      if (x >= universe_) continue;
      const std::uint64_t fp = splitmix64(x ^ seed_ ^ 0x5bf03635ULL);
      if (c.check_sum != count * fp) continue;
      // Pure cell: remove the whole multiplicity of x everywhere.
      const std::int64_t mult = c.count;
      for (int row = 0; row < kRows; ++row) {
        Cell& w = work[cell_index(row, x)];
        w.count -= mult;
        w.key_sum -= count * x;
        w.check_sum -= count * fp;
      }
      remaining -= mult;
      remaining_register -= count * splitmix64(x ^ seed_ ^ 0xc2b2ae35ULL);
      found.emplace_back(x, mult);
      progress = true;
    }
  }

  for (const Cell& c : work)
    if (c.count != 0 || c.key_sum != 0 || c.check_sum != 0)
      return Recovery{Recovery::Status::Overflow, {}};
  if (remaining != 0 || remaining_register != 0)
    return Recovery{Recovery::Status::Overflow, {}};
  if (static_cast<std::int64_t>(found.size()) > capacity_)
    return Recovery{Recovery::Status::Overflow, {}};
  std::sort(found.begin(), found.end());
  return Recovery{Recovery::Status::Recovered, std::move(found)};
}

}  // namespace pstream
