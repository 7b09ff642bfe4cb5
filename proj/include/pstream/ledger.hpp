#pragma once

#include <cstdint>
#include <stdexcept>

namespace pstream {

// Word-level accounting of retained algorithm state. One word holds a vertex
// id, a counter, or a flag/bit-string of at most log2(n) bits; an edge costs
// two words. Peak is monotone nondecreasing over a run.
class SpaceLedger {
 public:
  void charge(std::int64_t delta_words) {
    if (current_ + delta_words < 0)
      throw std::logic_error("SpaceLedger: charge would make current_words negative");
    current_ += delta_words;
    if (current_ > peak_) peak_ = current_;
  }

  std::int64_t current_words() const { return current_; }
  std::int64_t peak_words() const { return peak_; }

 private:
  std::int64_t current_ = 0;
  std::int64_t peak_ = 0;
};

// Incremented once each time a stream is replayed from the start, whether or
// not the pass runs to completion.
struct PassCounter {
  int passes = 0;
};

}  // namespace pstream
