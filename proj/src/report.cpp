#include "pstream/report.hpp"

#include <sstream>

namespace pstream {

std::string format_report(const RunReport& report) {
  std::ostringstream out;
  out << "problem=" << report.problem << '\n';
  if (report.k) out << "k=" << *report.k << '\n';
  if (report.model) out << "model=" << *report.model << '\n';
  out << "decision=" << report.decision << '\n';
  if (report.witness) {
    out << "witness=";
    for (std::size_t i = 0; i < report.witness->size(); ++i) {
      if (i) out << ',';
      out << (*report.witness)[i];
    }
    out << '\n';
  }
  out << "passes=" << report.passes << '\n';
  out << "peak_words=" << report.peak_words << '\n';
  if (report.threshold) out << "threshold=" << *report.threshold << '\n';
  out << "wall_time_ms=" << report.wall_ms << '\n';
  return out.str();
}

}  // namespace pstream
