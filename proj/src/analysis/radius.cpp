#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include <boost/math/tools/minima.hpp>

#include "gft/analysis.hpp"

namespace gft {

double radius_s2_closed_form(const RParams& params) {
  return std::sqrt(10.0 + 6.0 * std::cos(params.alpha())) / (4.0 * (1.0 - params.beta()));
}

TaylorSeries partial_sum(const TaylorSeries& f, int k) {
  if (k < 1 || k > f.order()) throw std::invalid_argument("partial_sum: need 1 <= k <= order");
  return truncate(f, k);
}

double min_re_on_circle(const TaylorSeries& f, double r, int num_angles) {
  if (num_angles < 8) throw std::invalid_argument("min_re_on_circle: need at least 8 angles");
  const SamplePoints pts = circle_points(r, num_angles);
  const SampledValues values = sample(f, pts);
  const auto best = static_cast<int>(std::min_element(values.re.begin(), values.re.end()) - values.re.begin());
  const double sampled = values.re[static_cast<std::size_t>(best)];
  if (r == 0.0) return sampled;

  // The sampled minimum sits within one angular step of the true one.
  const double step = 2.0 * std::numbers::pi / num_angles;
  const double centre = step * best;
  const auto re_at = [&](double theta) { return eval(f, std::polar(r, theta)).real(); };
  const auto [theta, refined] =
      boost::math::tools::brent_find_minima(re_at, centre - step, centre + step, std::numeric_limits<double>::digits / 2);
  (void)theta;
  return std::min(sampled, refined);
}

RadiusEstimate estimate_univalence_radius(const TaylorSeries& s, int num_angles) {
  if (s.order() < 1) throw std::invalid_argument("estimate_univalence_radius: section must have order >= 1");
  const TaylorSeries ds = derivative(s);
  if (!(ds[0].real() > 0.0)) throw std::invalid_argument("estimate_univalence_radius: Re s'(0) must be positive");

  constexpr double kOuter = 1.0 - 1e-9;
  constexpr int kMaxIterations = 60;
  constexpr double kTargetWidth = 1e-12;
  const auto m = [&](double r) { return min_re_on_circle(ds, r, num_angles); };

  RadiusEstimate est;
  // Re s' is harmonic, so the circle minimum is nonincreasing in r; confirm
  // on the sampled function before trusting bisection.
  constexpr int kProbes = 16;
  double prev = ds[0].real();
  for (int j = 1; j <= kProbes; ++j) {
    const double value = m(kOuter * j / kProbes);
    if (value > prev + kValueTol) est.monotone = false;
    prev = value;
  }

  if (prev > 0.0) {
    est.radius = 1.0;
    est.bracket_width = 0.0;
    est.criterion = "no-sign-change-in-disc";
    return est;
  }

  double lo = 0.0;
  double hi = kOuter;
  for (int it = 0; it < kMaxIterations && hi - lo > kTargetWidth; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (m(mid) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  est.radius = 0.5 * (lo + hi);
  est.bracket_width = hi - lo;
  est.criterion = "min-re-derivative-zero";
  return est;
}

}  // namespace gft
