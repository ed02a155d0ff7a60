#pragma once

// The operator L_a[f] = f' + ((1 + e^{ia})/2) z f'', its inverse on
// coefficients, the disc map phi_b(z) = (1+z)/(1+(1/b-1)z), the extreme
// functions of R(a, beta) and generators for members of R(a, beta) and
// L_a(b).

#include <cstdint>
#include <random>

#include "gft/powser.hpp"

namespace gft {

/// Parameters of R(alpha, beta): -pi < alpha <= pi, 0 <= beta < 1.
class RParams {
 public:
  RParams(double alpha, double beta);
  [[nodiscard]] double alpha() const { return alpha_; }
  [[nodiscard]] double beta() const { return beta_; }

 private:
  double alpha_;
  double beta_;
};

/// Parameters of L_alpha(b): -pi < alpha <= pi, b > 1/2.
class LParams {
 public:
  LParams(double alpha, double b);
  [[nodiscard]] double alpha() const { return alpha_; }
  [[nodiscard]] double b() const { return b_; }
  /// c = 1/b - 1, the pole coefficient of phi_b. |c| < 1.
  [[nodiscard]] double c() const { return 1.0 / b_ - 1.0; }

 private:
  double alpha_;
  double b_;
};

/// Throws std::invalid_argument unless -pi < alpha <= pi.
void validate_alpha(double alpha);

/// Schwarz function omega(z) = x z^m with |x| = 1, m >= 1.
class SchurSpec {
 public:
  SchurSpec(Complex x, int m);
  /// omega(z) = x z.
  static SchurSpec rotation(Complex x) { return {x, 1}; }
  [[nodiscard]] Complex x() const { return x_; }
  [[nodiscard]] int power() const { return m_; }
  [[nodiscard]] TaylorSeries series(int order) const;

 private:
  Complex x_;
  int m_;
};

/// gamma = (1 + e^{i alpha}) / 2, exactly zero at alpha == pi.
Complex operator_weight(double alpha);

/// n + 1 + (n - 1) e^{i alpha}, the per-coefficient factor of L (times 2/n).
Complex operator_factor(int n, double alpha);

/// L_alpha[f]; coefficient of z^{n-1} is a_n n [n+1+(n-1)e^{i alpha}] / 2.
TaylorSeries apply_L(const TaylorSeries& f, double alpha);

/// Normalized f (f(0)=0, f'(0)=1) with L_alpha[f] = g. Requires g(0) = 1.
TaylorSeries solve_L(const TaylorSeries& g, double alpha);

/// Taylor coefficients of phi_b: g_0 = 1, g_k = (1-c)(-c)^{k-1}.
TaylorSeries phi_b_series(const LParams& params, int order);

/// (1 + (1-2 beta) z) / (1 - z) = 1 + 2(1-beta)(z + z^2 + ...).
TaylorSeries halfplane_series(double beta, int order);

/// Extreme point f_x of R(alpha, beta); requires |x| = 1.
TaylorSeries extreme_function(Complex x, const RParams& params, int order = kDefaultOrder);

/// Sharp bound on |a_n| over R(alpha, beta), n >= 2.
double coeff_bound(int n, const RParams& params);

/// Same shape of bound for any class whose operator image has coefficients
/// bounded by `image_coeff_bound`: 2K / (n |n+1+(n-1)e^{i alpha}|).
double coeff_bound_from_image(int n, double alpha, double image_coeff_bound);

/// Bound on the coefficients of L_alpha[f] for f in R(alpha, beta): 2(1-beta).
double image_coeff_bound(const RParams& params);
/// Bound on the coefficients of L_alpha[f] for f in L_alpha(b): 2 - 1/b.
double image_coeff_bound(const LParams& params);

/// Deterministic generator behind the random members. Given a seed, the
/// stream of draws is fixed on every platform:
///   engine   std::mt19937_64 seeded with the seed
///   uniform  (engine() >> 11) * 2^-53 in [0, 1)
///   atom     x = exp(2 pi i u)
///   weight   e_i = -log(1 - u), w_i = e_i / sum(e)
///   schur    x drawn as an atom, then m = 1 + floor(4u)
class SeededDraws {
 public:
  explicit SeededDraws(std::uint64_t seed);
  double uniform();
  Complex unimodular();
  double exponential();

 private:
  std::mt19937_64 engine_;
};

/// Convex combination of `num_atoms` extreme functions with seeded atoms
/// and weights uniform on the simplex. Draw order: all atoms, then all
/// weights.
TaylorSeries random_member_R(const RParams& params, int num_atoms, std::uint64_t seed, int order = kDefaultOrder);

/// Member of L_alpha(b) solving L_alpha[f] = phi_b o omega.
TaylorSeries random_member_L(const LParams& params, const SchurSpec& schur, int order = kDefaultOrder);

/// Seeded Schwarz function x z^m, m in {1, 2, 3, 4}.
SchurSpec random_schur(std::uint64_t seed);

}  // namespace gft
