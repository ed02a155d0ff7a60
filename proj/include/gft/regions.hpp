#pragma once

#include <vector>

#include "gft/gft_ops.hpp"
#include "gft/powser.hpp"

namespace gft {

/// Target image region for subordination checks.
class Region {
 public:
  enum class Kind { half_plane, disc, strip };

  /// {Re w > beta}; beta < 1.
  static Region half_plane(double beta);
  /// {|w - b| < b}; b > 1/2.
  static Region disc(double b);
  /// {0 < Re w < 2b}; b > 1/2.
  static Region strip(double b);

  [[nodiscard]] Kind kind() const { return kind_; }
  /// beta for half_plane, b otherwise.
  [[nodiscard]] double parameter() const { return parameter_; }

 private:
  Region(Kind kind, double parameter) : kind_(kind), parameter_(parameter) {}
  Kind kind_;
  double parameter_;
};

struct Membership {
  bool inside;    // strict membership, margin > 0
  double margin;  // signed; positive iff inside
};

/// half_plane: Re w - beta; disc: b - |w - b|; strip: min(Re w, 2b - Re w).
double region_margin(const Region& region, Complex w);
Membership contains(const Region& region, Complex w);

/// phi_b(z) evaluated by direct complex division.
Complex phi_b(const LParams& params, Complex z);

/// phi_b(e^{i phi_j}) for phi_j = 2 pi j / num_points, j = 0 .. num_points-1.
struct CurvePoint {
  double phi;
  Complex w;
};
std::vector<CurvePoint> phi_boundary_curve(const LParams& params, int num_points);

/// h(x) = (1/b)(1+x) / (1 + 2(1/b-1)x + (1/b-1)^2), -1 <= x <= 1.
double boundary_profile(double b, double x);

/// Re phi_b(e^{i phi}) = h(cos phi).
double re_phi_on_boundary(const LParams& params, double phi);

}  // namespace gft
