#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gft/analysis.hpp"

namespace gft {

std::vector<ConjectureRow> conjecture_scan(const RParams& params, int k_max, int num_members, std::uint64_t seed,
                                           int num_angles) {
  if (k_max < 2) throw std::invalid_argument("conjecture_scan: k_max must be at least 2");
  if (num_members < 0) throw std::invalid_argument("conjecture_scan: negative member count");

  const double closed_form = radius_s2_closed_form(params);
  // A radius beyond the unit disc means univalence in the whole disc.
  const double target = std::min(1.0, closed_form);

  std::vector<TaylorSeries> members;
  members.reserve(static_cast<std::size_t>(num_members + kConjectureExtremes));
  for (int i = 0; i < num_members; ++i) members.push_back(sweep_member_R(params, seed, i, k_max));
  for (int j = 0; j < kConjectureExtremes; ++j) {
    const Complex x = std::polar(1.0, 2.0 * std::numbers::pi * j / kConjectureExtremes);
    members.push_back(extreme_function(x, params, k_max));
  }

  std::vector<ConjectureRow> rows;
  rows.reserve(static_cast<std::size_t>(k_max - 1) * members.size());
  for (int k = 2; k <= k_max; ++k) {
    for (std::size_t id = 0; id < members.size(); ++id) {
      const RadiusEstimate est = estimate_univalence_radius(partial_sum(members[id], k), num_angles);
      rows.push_back({k, static_cast<int>(id), params.alpha(), params.beta(), est.radius, closed_form,
                      est.radius >= target - 1e-6});
    }
  }
  return rows;
}

}  // namespace gft
