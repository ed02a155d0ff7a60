#pragma once

// Extremal sampling over the unit disc and the verification harness for
// the R(alpha, beta) / L_alpha(b) results.
//
// Sampled checks cannot certify open inequalities, so every report carries a
// tolerance budget: the truncation tail of the evaluated expression (zero for
// series taken as exact polynomials) plus kValueTol. A check passes when the
// worst sampled margin exceeds -budget.

#include <cstdint>
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "gft/gft_ops.hpp"
#include "gft/powser.hpp"
#include "gft/regions.hpp"

namespace gft {

/// Sampling plan: radii r_i = r_max (i+1)/num_radii, angles 2 pi j/num_angles.
/// Points are ordered radius-major, angle-minor.
struct GridSpec {
  int num_radii = 64;
  int num_angles = 256;
  double r_max = 0.95;

  void validate() const;  // throws std::invalid_argument
  [[nodiscard]] double radius(int i) const { return r_max * (i + 1) / num_radii; }
  [[nodiscard]] std::size_t size() const {
    return static_cast<std::size_t>(num_radii) * static_cast<std::size_t>(num_angles);
  }
  friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

/// Structure-of-arrays sample points for the SIMD kernels.
struct SamplePoints {
  std::vector<double> re;
  std::vector<double> im;
  [[nodiscard]] std::size_t size() const { return re.size(); }
  [[nodiscard]] Complex at(std::size_t k) const { return {re[k], im[k]}; }
};

SamplePoints grid_points(const GridSpec& grid);
/// num_angles points on |z| = r, angle-ordered from 0.
SamplePoints circle_points(double r, int num_angles);

/// f evaluated at every sample point, same order.
struct SampledValues {
  std::vector<double> re;
  std::vector<double> im;
  [[nodiscard]] Complex at(std::size_t k) const { return {re[k], im[k]}; }
};
SampledValues sample(const TaylorSeries& f, const SamplePoints& points);

struct GridExtremum {
  double value;
  Complex point;
  std::size_t index;
};

/// Exact minimum of Re f over the sampled points; ties go to the first
/// point in scan order.
GridExtremum min_re_on_grid(const TaylorSeries& f, const GridSpec& grid);
GridExtremum max_re_on_grid(const TaylorSeries& f, const GridSpec& grid);

// ---------------------------------------------------------------------------
// Truncation tails

/// How a checked series relates to the function it stands for.
enum class Truncation {
  exact,         // the polynomial itself is the object under test
  class_member,  // truncation of a class member; add the class tail bound
};

/// sum_{k >= image_order+1} K r^k: tail of L[f] when its coefficients are
/// bounded by K.
double operator_image_tail(double image_coeff_bound, int image_order, double r);
/// Tail of f' for f of the given order in a class with image bound K.
double derivative_tail(double alpha, double image_coeff_bound, int order, double r);
/// Tail of f(z)/z for f of the given order in a class with image bound K.
double quotient_tail(double alpha, double image_coeff_bound, int order, double r);
/// Smallest order whose operator-image tail at radius r is below eps.
int order_for_tail(double image_coeff_bound, double r, double eps);

// ---------------------------------------------------------------------------
// Reports

using ClassParams = std::variant<RParams, LParams>;

struct VerificationReport {
  std::string theorem_id;
  bool passed = false;
  /// Worst margin within the tolerance budget reaches at most 1e-3.
  bool sharp = false;
  double worst_margin = 0.0;
  Complex worst_point{};
  double truncation_tail = 0.0;
  double tolerance = kValueTol;
  GridSpec grid{};
  ClassParams params = RParams{0.0, 0.0};
  int members = 1;
  int worst_member = 0;
  std::uint64_t seed = 0;
};

/// Sharp-flag threshold on the worst margin.
inline constexpr double kSharpThreshold = 1e-3;

// ---------------------------------------------------------------------------
// Membership and theorem checks. Inputs must be normalized: f(0) = 0,
// f'(0) = 1 within kCoeffTol, otherwise std::invalid_argument.

/// min Re L_alpha[f] > beta.
VerificationReport check_membership_R(const TaylorSeries& f, const RParams& params, const GridSpec& grid,
                                      Truncation truncation = Truncation::exact);
/// |L_alpha[f] - b| < b.
VerificationReport check_membership_L(const TaylorSeries& f, const LParams& params, const GridSpec& grid,
                                      Truncation truncation = Truncation::exact);

/// Re f' > beta.
VerificationReport verify_theorem_Re_fprime(const RParams& params, const TaylorSeries& member, const GridSpec& grid,
                                            Truncation truncation = Truncation::exact);
/// Re f(z)/z > beta.
VerificationReport verify_theorem_f_over_z(const RParams& params, const TaylorSeries& member, const GridSpec& grid,
                                           Truncation truncation = Truncation::exact);
/// 0 < Re f' < 2b.
VerificationReport verify_theorem_strip_fprime(const LParams& params, const TaylorSeries& member,
                                               const GridSpec& grid, Truncation truncation = Truncation::exact);

/// delta(r) = (2b-1) r / (b + (b-1) r).
double bound_delta(double r, double b);
/// G(r) = 1 - delta(r).
double bound_G(double r, double b);
/// U(r) = 1 + delta(r).
double bound_U(double r, double b);
/// arcsin delta(r).
double arg_bound(double r, double b);

/// G(r) <= Re L_alpha[f] <= U(r) on each circle |z| = r.
VerificationReport verify_theorem_radial_bounds(const LParams& params, const TaylorSeries& member,
                                                const std::vector<double>& radii, int num_angles,
                                                Truncation truncation = Truncation::exact);
/// |arg L_alpha[f]| <= arcsin delta(r) on each circle |z| = r.
VerificationReport verify_arg_bound(const LParams& params, const TaylorSeries& member, const std::vector<double>& radii,
                                    int num_angles, Truncation truncation = Truncation::exact);

/// phi_b on the grid lies inside the strip 0 < Re w < 2b.
VerificationReport verify_strip_lemma(const LParams& params, const GridSpec& grid);

struct ProfileCheck {
  bool passed;
  double at_minus_one;  // h(-1), expected 0
  double at_one;        // h(1), expected 2b
  double worst_step;    // min over consecutive samples of h(x_{j+1}) - h(x_j)
};
/// h on `samples` equally spaced points of [-1, 1].
ProfileCheck verify_profile_monotone(double b, int samples = 1024);

/// |a_n| <= coeff_bound(n) for seeded members; equality for extreme
/// functions. worst_margin = min(bound - |a_n|) over members.
VerificationReport verify_coeff_bounds(const RParams& params, int members, std::uint64_t seed,
                                       int order = kDefaultOrder);

// ---------------------------------------------------------------------------
// Seeded member sweeps

/// Seed of the i-th member in a sweep.
std::uint64_t member_seed(std::uint64_t seed, int index);
/// i-th R member of a sweep: random_member_R with 1 + (i mod 8) atoms.
TaylorSeries sweep_member_R(const RParams& params, std::uint64_t seed, int index, int order = kDefaultOrder);
/// i-th L member of a sweep: random_member_L with random_schur(member_seed).
TaylorSeries sweep_member_L(const LParams& params, std::uint64_t seed, int index, int order = kDefaultOrder);

/// Runs check_member(i) for i < members and returns the report with the
/// least slack (margin + tolerance), first index winning ties. `passed` is
/// the conjunction over all members.
VerificationReport sweep_members(int members, std::uint64_t seed,
                                 const std::function<VerificationReport(int)>& check_member);

// ---------------------------------------------------------------------------
// Sections and univalence radius

/// sqrt(10 + 6 cos alpha) / (4 (1 - beta)); may exceed 1.
double radius_s2_closed_form(const RParams& params);

/// z + a_2 z^2 + ... + a_k z^k. Requires 1 <= k <= f.order().
TaylorSeries partial_sum(const TaylorSeries& f, int k);

struct RadiusEstimate {
  double radius = 0.0;
  double bracket_width = 0.0;
  /// "min-re-derivative-zero" when a root was bracketed,
  /// "no-sign-change-in-disc" when Re s' stays positive up to 1 - 1e-9.
  std::string criterion;
  /// Sampled m(r) was nonincreasing on the pre-check radii.
  bool monotone = true;
  [[nodiscard]] bool reaches_disc_boundary() const { return criterion == "no-sign-change-in-disc"; }
};

/// Smallest r with min_{|z|=r} Re s'(z) = 0, by bisection on [0, 1 - 1e-9].
/// The circle minimum is taken over num_angles samples and refined by a
/// bounded Brent search around the best sample.
RadiusEstimate estimate_univalence_radius(const TaylorSeries& s, int num_angles = 1024);

/// min over |z| = r of Re f (sampled plus Brent refinement).
double min_re_on_circle(const TaylorSeries& f, double r, int num_angles);

struct ConjectureRow {
  int k;
  int member_id;  // < num_members: seeded member; otherwise extreme x = e^{2 pi i (id - num_members)/16}
  double alpha;
  double beta;
  double estimated_radius;
  double closed_form_radius;
  bool holds;
};

inline constexpr int kConjectureExtremes = 16;

/// For k = 2..k_max and each member (seeded members then 16 extremes).
std::vector<ConjectureRow> conjecture_scan(const RParams& params, int k_max, int num_members, std::uint64_t seed,
                                           int num_angles = 1024);

}  // namespace gft
