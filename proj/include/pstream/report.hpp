#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pstream/decision.hpp"

namespace pstream {

// One experiment run, printed as diffable key=value lines. passes and
// peak_words come straight from the pass counter and ledger.
struct RunReport {
  std::string problem;
  std::optional<int> k;
  std::optional<std::string> model;
  std::string decision;
  std::optional<std::vector<Vertex>> witness;
  int passes = 0;
  std::int64_t peak_words = 0;
  std::optional<std::int64_t> threshold;
  double wall_ms = 0.0;
};

// Everything except wall_time is reproducible bit for bit across reruns with
// the same inputs.
std::string format_report(const RunReport& report);

}  // namespace pstream
