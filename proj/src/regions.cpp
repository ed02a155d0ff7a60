#include "gft/regions.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gft {

Region Region::half_plane(double beta) {
  if (!std::isfinite(beta) || !(beta < 1.0)) throw std::invalid_argument("half-plane requires beta < 1");
  return {Kind::half_plane, beta};
}

Region Region::disc(double b) {
  if (!std::isfinite(b) || !(b > 0.5)) throw std::invalid_argument("disc requires b > 1/2");
  return {Kind::disc, b};
}

Region Region::strip(double b) {
  if (!std::isfinite(b) || !(b > 0.5)) throw std::invalid_argument("strip requires b > 1/2");
  return {Kind::strip, b};
}

double region_margin(const Region& region, Complex w) {
  const double p = region.parameter();
  switch (region.kind()) {
    case Region::Kind::half_plane:
      return w.real() - p;
    case Region::Kind::disc:
      return p - std::abs(w - p);
    case Region::Kind::strip:
      return std::min(w.real(), 2.0 * p - w.real());
  }
  return 0.0;
}

Membership contains(const Region& region, Complex w) {
  const double margin = region_margin(region, w);
  return {margin > 0.0, margin};
}

Complex phi_b(const LParams& params, Complex z) { return (1.0 + z) / (1.0 + params.c() * z); }

std::vector<CurvePoint> phi_boundary_curve(const LParams& params, int num_points) {
  if (num_points < 3) throw std::invalid_argument("boundary curve needs at least 3 points");
  std::vector<CurvePoint> curve;
  curve.reserve(static_cast<std::size_t>(num_points));
  for (int j = 0; j < num_points; ++j) {
    const double phi = 2.0 * std::numbers::pi * j / num_points;
    curve.push_back({phi, phi_b(params, Complex{std::cos(phi), std::sin(phi)})});
  }
  return curve;
}

double boundary_profile(double b, double x) {
  const double c = 1.0 / b - 1.0;
  const double denom = 1.0 + 2.0 * c * x + c * c;
  // |1 + c e^{i phi}|^2 with |c| < 1.
  assert(denom > 0.0);
  return (1.0 / b) * (1.0 + x) / denom;
}

double re_phi_on_boundary(const LParams& params, double phi) { return boundary_profile(params.b(), std::cos(phi)); }

}  // namespace gft
