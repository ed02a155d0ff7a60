#include "gft/gft_ops.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace gft {

void validate_alpha(double alpha) {
  if (!std::isfinite(alpha) || !(alpha > -std::numbers::pi && alpha <= std::numbers::pi)) {
    throw std::invalid_argument("alpha must lie in (-pi, pi], got " + std::to_string(alpha));
  }
}

RParams::RParams(double alpha, double beta) : alpha_(alpha), beta_(beta) {
  validate_alpha(alpha);
  if (!std::isfinite(beta) || !(beta >= 0.0 && beta < 1.0)) {
    throw std::invalid_argument("beta must lie in [0, 1), got " + std::to_string(beta));
  }
}

LParams::LParams(double alpha, double b) : alpha_(alpha), b_(b) {
  validate_alpha(alpha);
  if (!std::isfinite(b) || !(b > 0.5)) throw std::invalid_argument("b must exceed 1/2, got " + std::to_string(b));
}

SchurSpec::SchurSpec(Complex x, int m) : x_(x), m_(m) {
  if (std::abs(std::abs(x) - 1.0) > kCoeffTol) throw std::invalid_argument("Schur rotation must be unimodular");
  if (m < 1) throw std::invalid_argument("Schur power must be at least 1");
}

TaylorSeries SchurSpec::series(int order) const {
  std::vector<Complex> c(static_cast<std::size_t>(std::max(order, 0)) + 1);
  if (m_ <= order) c[static_cast<std::size_t>(m_)] = x_;
  return TaylorSeries{std::move(c)};
}

Complex operator_weight(double alpha) {
  if (alpha == std::numbers::pi) return 0.0;
  return 0.5 * Complex{1.0 + std::cos(alpha), std::sin(alpha)};
}

Complex operator_factor(int n, double alpha) {
  return 2.0 * (1.0 + static_cast<double>(n - 1) * operator_weight(alpha));
}

TaylorSeries apply_L(const TaylorSeries& f, double alpha) {
  if (f.order() == 0) return TaylorSeries::constant(0.0);
  const Complex gamma = operator_weight(alpha);
  std::vector<Complex> out(static_cast<std::size_t>(f.order()));
  for (int n = 1; n <= f.order(); ++n) {
    // f' + gamma z f'' contributes n a_n (1 + (n-1) gamma) to z^{n-1}.
    out[n - 1] = static_cast<double>(n) * f[n] * (1.0 + static_cast<double>(n - 1) * gamma);
  }
  return TaylorSeries{std::move(out)};
}

TaylorSeries solve_L(const TaylorSeries& g, double alpha) {
  if (std::abs(g[0] - 1.0) > kCoeffTol) throw std::invalid_argument("solve_L: operator image must satisfy g(0) = 1");
  const Complex gamma = operator_weight(alpha);
  std::vector<Complex> a(static_cast<std::size_t>(g.order()) + 2);
  a[1] = 1.0;
  for (int n = 2; n <= g.order() + 1; ++n) {
    a[n] = g[n - 1] / (static_cast<double>(n) * (1.0 + static_cast<double>(n - 1) * gamma));
  }
  return TaylorSeries{std::move(a)};
}

TaylorSeries phi_b_series(const LParams& params, int order) {
  const double c = params.c();
  std::vector<Complex> g(static_cast<std::size_t>(std::max(order, 0)) + 1);
  g[0] = 1.0;
  double term = 1.0 - c;
  for (int k = 1; k <= order; ++k) {
    g[k] = term;
    term *= -c;
  }
  return TaylorSeries{std::move(g)};
}

TaylorSeries halfplane_series(double beta, int order) {
  std::vector<Complex> g(static_cast<std::size_t>(std::max(order, 0)) + 1, Complex{2.0 * (1.0 - beta)});
  g[0] = 1.0;
  return TaylorSeries{std::move(g)};
}

TaylorSeries extreme_function(Complex x, const RParams& params, int order) {
  if (std::abs(std::abs(x) - 1.0) > kCoeffTol) throw std::invalid_argument("extreme_function: |x| must equal 1");
  if (order < 1) throw std::invalid_argument("extreme_function: order must be at least 1");
  x /= std::abs(x);
  const Complex gamma = operator_weight(params.alpha());
  const double scale = 2.0 * (1.0 - params.beta());
  std::vector<Complex> a(static_cast<std::size_t>(order) + 1);
  a[1] = 1.0;
  Complex power = x;
  for (int n = 2; n <= order; ++n) {
    a[n] = scale * power / (static_cast<double>(n) * (1.0 + static_cast<double>(n - 1) * gamma));
    power *= x;
  }
  return TaylorSeries{std::move(a)};
}

double coeff_bound_from_image(int n, double alpha, double image_coeff_bound) {
  if (n < 2) throw std::invalid_argument("coefficient bound is defined for n >= 2");
  const double nn = static_cast<double>(n) * n;
  const double modulus = std::sqrt(2.0 * (nn + 1.0 + (nn - 1.0) * std::cos(alpha)));
  return 2.0 * image_coeff_bound / (static_cast<double>(n) * modulus);
}

double coeff_bound(int n, const RParams& params) {
  return coeff_bound_from_image(n, params.alpha(), image_coeff_bound(params));
}

double image_coeff_bound(const RParams& params) { return 2.0 * (1.0 - params.beta()); }

double image_coeff_bound(const LParams& params) { return 2.0 - 1.0 / params.b(); }

SeededDraws::SeededDraws(std::uint64_t seed) : engine_(seed) {}

double SeededDraws::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

Complex SeededDraws::unimodular() {
  const double angle = 2.0 * std::numbers::pi * uniform();
  return {std::cos(angle), std::sin(angle)};
}

double SeededDraws::exponential() { return -std::log1p(-uniform()); }

TaylorSeries random_member_R(const RParams& params, int num_atoms, std::uint64_t seed, int order) {
  if (num_atoms < 1) throw std::invalid_argument("random_member_R: need at least one atom");
  SeededDraws draws(seed);
  std::vector<Complex> atoms(static_cast<std::size_t>(num_atoms));
  for (auto& x : atoms) x = draws.unimodular();
  std::vector<double> weights(atoms.size());
  double total = 0.0;
  for (auto& w : weights) total += (w = draws.exponential());
  if (!(total > 0.0)) {
    // All draws were exactly zero; fall back to equal weights.
    for (auto& w : weights) w = 1.0;
    total = static_cast<double>(weights.size());
  }

  std::vector<std::pair<Complex, TaylorSeries>> terms;
  terms.reserve(atoms.size());
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    terms.emplace_back(weights[i] / total, extreme_function(atoms[i], params, order));
  }
  return linear_combination(terms);
}

TaylorSeries random_member_L(const LParams& params, const SchurSpec& schur, int order) {
  if (order < 1) throw std::invalid_argument("random_member_L: order must be at least 1");
  const int image_order = order - 1;
  const TaylorSeries image = compose(phi_b_series(params, image_order), schur.series(image_order), image_order);
  return solve_L(image, params.alpha());
}

SchurSpec random_schur(std::uint64_t seed) {
  SeededDraws draws(seed);
  const Complex x = draws.unimodular();
  const int m = 1 + static_cast<int>(std::floor(4.0 * draws.uniform()));
  return {x, m};
}

}  // namespace gft
