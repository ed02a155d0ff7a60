#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include "gft/analysis.hpp"

namespace gft::detail {

inline void require_normalized(const TaylorSeries& f, const char* who) {
  if (f.order() < 1 || std::abs(f[0]) > kCoeffTol || std::abs(f[1] - 1.0) > kCoeffTol) {
    throw std::invalid_argument(std::string(who) + ": series must be normalized (f(0)=0, f'(0)=1)");
  }
}

inline void finish(VerificationReport& report) {
  report.passed = report.worst_margin > -report.tolerance;
  report.sharp = report.worst_margin <= kSharpThreshold;
}

/// Samples `series` on the grid and reports the least margin(value).
template <typename Margin>
VerificationReport grid_check(std::string theorem_id, const TaylorSeries& series, const GridSpec& grid,
                              ClassParams params, double tail, Margin margin) {
  const SamplePoints pts = grid_points(grid);
  const SampledValues values = sample(series, pts);
  std::size_t worst = 0;
  double worst_margin = margin(values.at(0));
  for (std::size_t k = 1; k < pts.size(); ++k) {
    const double m = margin(values.at(k));
    if (m < worst_margin) {
      worst_margin = m;
      worst = k;
    }
  }
  VerificationReport report;
  report.theorem_id = std::move(theorem_id);
  report.worst_margin = worst_margin;
  report.worst_point = pts.at(worst);
  report.truncation_tail = tail;
  report.tolerance = tail + kValueTol;
  report.grid = grid;
  report.params = std::move(params);
  finish(report);
  return report;
}

}  // namespace gft::detail
