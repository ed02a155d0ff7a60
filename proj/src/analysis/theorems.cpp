#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "checks_internal.hpp"

namespace gft {

using detail::finish;
using detail::grid_check;
using detail::require_normalized;

VerificationReport verify_theorem_Re_fprime(const RParams& params, const TaylorSeries& member, const GridSpec& grid,
                                            Truncation truncation) {
  require_normalized(member, "verify_theorem_Re_fprime");
  grid.validate();
  const double tail = truncation == Truncation::class_member
                          ? derivative_tail(params.alpha(), image_coeff_bound(params), member.order(), grid.r_max)
                          : 0.0;
  const double beta = params.beta();
  return grid_check("re-fprime", derivative(member), grid, params, tail, [beta](Complex w) { return w.real() - beta; });
}

VerificationReport verify_theorem_f_over_z(const RParams& params, const TaylorSeries& member, const GridSpec& grid,
                                           Truncation truncation) {
  require_normalized(member, "verify_theorem_f_over_z");
  grid.validate();
  const double tail = truncation == Truncation::class_member
                          ? quotient_tail(params.alpha(), image_coeff_bound(params), member.order(), grid.r_max)
                          : 0.0;
  const double beta = params.beta();
  return grid_check("f-over-z", shift_down(member), grid, params, tail, [beta](Complex w) { return w.real() - beta; });
}

VerificationReport verify_theorem_strip_fprime(const LParams& params, const TaylorSeries& member,
                                               const GridSpec& grid, Truncation truncation) {
  require_normalized(member, "verify_theorem_strip_fprime");
  grid.validate();
  const double tail = truncation == Truncation::class_member
                          ? derivative_tail(params.alpha(), image_coeff_bound(params), member.order(), grid.r_max)
                          : 0.0;
  const Region strip = Region::strip(params.b());
  return grid_check("strip-fprime", derivative(member), grid, params, tail,
                    [&strip](Complex w) { return region_margin(strip, w); });
}

double bound_delta(double r, double b) {
  if (!(r >= 0.0 && r < 1.0) || !(b > 0.5)) throw std::invalid_argument("radial bounds need 0 <= r < 1, b > 1/2");
  return (2.0 * b - 1.0) * r / (b + (b - 1.0) * r);
}

double bound_G(double r, double b) { return 1.0 - bound_delta(r, b); }

double bound_U(double r, double b) { return 1.0 + bound_delta(r, b); }

double arg_bound(double r, double b) { return std::asin(std::min(1.0, bound_delta(r, b))); }

namespace {

// Per-circle scan shared by the radial and argument checks. `margin(w, r)`
// gives the signed margin, `tolerance(r, tail)` the budget on that circle.
template <typename Margin, typename Tolerance>
VerificationReport circle_check(std::string theorem_id, const LParams& params, const TaylorSeries& member,
                                const std::vector<double>& radii, int num_angles, Truncation truncation,
                                Margin margin, Tolerance tolerance) {
  require_normalized(member, theorem_id.c_str());
  if (radii.empty()) throw std::invalid_argument(theorem_id + ": need at least one radius");
  if (num_angles < 8) throw std::invalid_argument(theorem_id + ": need at least 8 angles");
  const TaylorSeries image = apply_L(member, params.alpha());

  VerificationReport report;
  report.theorem_id = std::move(theorem_id);
  report.params = params;
  report.grid = {static_cast<int>(radii.size()), num_angles, *std::max_element(radii.begin(), radii.end())};
  bool first = true;
  double worst_slack = 0.0;
  for (const double r : radii) {
    if (!(r >= 0.0 && r < 1.0)) throw std::invalid_argument(report.theorem_id + ": radii must lie in [0, 1)");
    const double tail = truncation == Truncation::class_member
                            ? operator_image_tail(image_coeff_bound(params), image.order(), r)
                            : 0.0;
    const double tol = tolerance(r, tail);
    const SamplePoints pts = circle_points(r, num_angles);
    const SampledValues values = sample(image, pts);
    for (std::size_t k = 0; k < pts.size(); ++k) {
      const double m = margin(values.at(k), r);
      if (first || m + tol < worst_slack) {
        first = false;
        worst_slack = m + tol;
        report.worst_margin = m;
        report.worst_point = pts.at(k);
        report.truncation_tail = tail;
        report.tolerance = tol;
      }
    }
  }
  finish(report);
  return report;
}

}  // namespace

VerificationReport verify_theorem_radial_bounds(const LParams& params, const TaylorSeries& member,
                                                const std::vector<double>& radii, int num_angles,
                                                Truncation truncation) {
  const double b = params.b();
  return circle_check(
      "radial-bounds", params, member, radii, num_angles, truncation,
      [b](Complex w, double r) { return std::min(w.real() - bound_G(r, b), bound_U(r, b) - w.real()); },
      [](double, double tail) { return tail + kValueTol; });
}

VerificationReport verify_arg_bound(const LParams& params, const TaylorSeries& member, const std::vector<double>& radii,
                                    int num_angles, Truncation truncation) {
  const double b = params.b();
  return circle_check(
      "arg-bound", params, member, radii, num_angles, truncation,
      [b](Complex w, double r) { return arg_bound(r, b) - std::abs(std::arg(w)); },
      [b](double r, double tail) {
        // A perturbation of size `tail` turns a value of modulus >= G(r)
        // by at most arcsin(tail / (G(r) - tail)).
        if (tail == 0.0) return kValueTol;
        const double floor = bound_G(r, b) - tail;
        const double turn = floor > 0.0 ? std::asin(std::min(1.0, tail / floor)) : std::numbers::pi;
        return turn + kValueTol;
      });
}

VerificationReport verify_strip_lemma(const LParams& params, const GridSpec& grid) {
  const SamplePoints pts = grid_points(grid);
  const Region strip = Region::strip(params.b());
  VerificationReport report;
  report.theorem_id = "strip-lemma";
  report.params = params;
  report.grid = grid;
  for (std::size_t k = 0; k < pts.size(); ++k) {
    const double m = region_margin(strip, phi_b(params, pts.at(k)));
    if (k == 0 || m < report.worst_margin) {
      report.worst_margin = m;
      report.worst_point = pts.at(k);
    }
  }
  finish(report);
  return report;
}

ProfileCheck verify_profile_monotone(double b, int samples) {
  if (!(b > 0.5)) throw std::invalid_argument("profile needs b > 1/2");
  if (samples < 2) throw std::invalid_argument("profile needs at least 2 samples");
  ProfileCheck check{};
  check.at_minus_one = boundary_profile(b, -1.0);
  check.at_one = boundary_profile(b, 1.0);
  double prev = check.at_minus_one;
  check.worst_step = std::numeric_limits<double>::infinity();
  for (int j = 1; j < samples; ++j) {
    const double x = -1.0 + 2.0 * j / (samples - 1);
    const double h = boundary_profile(b, x);
    check.worst_step = std::min(check.worst_step, h - prev);
    prev = h;
  }
  check.passed = check.worst_step >= 0.0 && std::abs(check.at_minus_one) <= kCoeffTol &&
                 std::abs(check.at_one - 2.0 * b) <= kCoeffTol;
  return check;
}

VerificationReport verify_coeff_bounds(const RParams& params, int members, std::uint64_t seed, int order) {
  if (members < 0) throw std::invalid_argument("verify_coeff_bounds: negative member count");
  if (order < 2) throw std::invalid_argument("verify_coeff_bounds: order must be at least 2");
  VerificationReport report;
  report.theorem_id = "coeff-bounds";
  report.params = params;
  report.seed = seed;
  report.members = members + kConjectureExtremes;
  report.grid = {1, 8, 0.5};
  report.tolerance = kCoeffTol;
  bool first = true;
  auto consider = [&](double margin, Complex coeff, int member) {
    if (first || margin < report.worst_margin) {
      first = false;
      report.worst_margin = margin;
      report.worst_point = coeff;
      report.worst_member = member;
    }
  };
  for (int i = 0; i < members; ++i) {
    const TaylorSeries f = sweep_member_R(params, seed, i, order);
    for (int n = 2; n <= order; ++n) consider(coeff_bound(n, params) - std::abs(f[n]), f[n], i);
  }
  for (int j = 0; j < kConjectureExtremes; ++j) {
    const Complex x = std::polar(1.0, 2.0 * std::numbers::pi * j / kConjectureExtremes);
    const TaylorSeries f = extreme_function(x, params, order);
    // Extremes must attain the bound: any deviation counts against the margin.
    for (int n = 2; n <= order; ++n) consider(-std::abs(coeff_bound(n, params) - std::abs(f[n])), f[n], members + j);
  }
  finish(report);
  report.sharp = true;
  return report;
}

std::uint64_t member_seed(std::uint64_t seed, int index) {
  // splitmix64 finalizer over seed + (index+1) * golden gamma.
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

TaylorSeries sweep_member_R(const RParams& params, std::uint64_t seed, int index, int order) {
  return random_member_R(params, 1 + index % 8, member_seed(seed, index), order);
}

TaylorSeries sweep_member_L(const LParams& params, std::uint64_t seed, int index, int order) {
  return random_member_L(params, random_schur(member_seed(seed, index)), order);
}

VerificationReport sweep_members(int members, std::uint64_t seed,
                                 const std::function<VerificationReport(int)>& check_member) {
  if (members < 1) throw std::invalid_argument("member sweep needs at least one member");
  VerificationReport worst;
  bool all_passed = true;
  for (int i = 0; i < members; ++i) {
    VerificationReport next = check_member(i);
    all_passed = all_passed && next.passed;
    if (i == 0 || next.worst_margin + next.tolerance < worst.worst_margin + worst.tolerance) {
      worst = std::move(next);
      worst.worst_member = i;
    }
  }
  worst.passed = all_passed;
  worst.members = members;
  worst.seed = seed;
  return worst;
}

}  // namespace gft
