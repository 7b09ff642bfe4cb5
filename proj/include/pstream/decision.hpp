#pragma once

#include <cstdint>
#include <vector>

#include "pstream/stream.hpp"

namespace pstream {

struct Decision {
  bool yes = false;
  std::vector<Vertex> witness;  // empty when no certificate applies
};

// Resource readings for one algorithm run; passes and peak_words come from
// the pass counter and ledger, never estimates.
struct RunStats {
  int passes = 0;
  std::int64_t peak_words = 0;
  std::int64_t threshold = 0;  // edge budget M, when the algorithm has one
};

}  // namespace pstream
