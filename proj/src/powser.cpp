#include "gft/powser.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "gft/horner_kernels.hpp"
#include "gft/parallel.hpp"

namespace gft {

namespace {

void validate(const std::vector<Complex>& coeffs) {
  if (coeffs.empty()) throw std::invalid_argument("TaylorSeries needs at least one coefficient");
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (!std::isfinite(coeffs[k].real()) || !std::isfinite(coeffs[k].imag())) {
      throw std::invalid_argument("TaylorSeries coefficient " + std::to_string(k) + " is not finite");
    }
  }
}

void require_order(int order, const char* what) {
  if (order < 0) throw std::invalid_argument(std::string(what) + ": truncation order must be nonnegative");
}

// Split storage for the kernels.
struct SplitCoeffs {
  std::vector<double> re;
  std::vector<double> im;
  explicit SplitCoeffs(std::span<const Complex> c) : re(c.size()), im(c.size()) {
    for (std::size_t k = 0; k < c.size(); ++k) {
      re[k] = c[k].real();
      im[k] = c[k].imag();
    }
  }
};

}  // namespace

TaylorSeries::TaylorSeries(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) { validate(coeffs_); }

TaylorSeries::TaylorSeries(std::initializer_list<Complex> coeffs) : coeffs_(coeffs) { validate(coeffs_); }

Complex eval(const TaylorSeries& f, Complex z) {
  const SplitCoeffs c(f.coeffs());
  const double zr = z.real(), zi = z.imag();
  double wr = 0.0, wi = 0.0;
  simd::horner_scalar({c.re.data(), c.im.data(), c.re.size(), &zr, &zi, &wr, &wi, 1});
  return {wr, wi};
}

void eval_many(const TaylorSeries& f, std::span<const double> z_re, std::span<const double> z_im,
               std::span<double> out_re, std::span<double> out_im) {
  const std::size_t n = z_re.size();
  if (z_im.size() != n || out_re.size() != n || out_im.size() != n) {
    throw std::invalid_argument("eval_many: span lengths differ");
  }
  const SplitCoeffs c(f.coeffs());
  const simd::Isa isa = simd::active_isa();
  // Chunks are multiples of 16 so every chunk boundary falls on a full SIMD
  // block; per-point results do not depend on the split anyway.
  parallel_for(n, 1024, [&](std::size_t begin, std::size_t end) {
    simd::horner_with(isa, {c.re.data(), c.im.data(), c.re.size(), z_re.data() + begin, z_im.data() + begin,
                            out_re.data() + begin, out_im.data() + begin, end - begin});
  });
}

TaylorSeries derivative(const TaylorSeries& f) {
  if (f.order() == 0) return TaylorSeries::constant(0.0);
  std::vector<Complex> out(static_cast<std::size_t>(f.order()));
  for (int k = 0; k < f.order(); ++k) out[k] = static_cast<double>(k + 1) * f[k + 1];
  return TaylorSeries{std::move(out)};
}

TaylorSeries scale_argument(const TaylorSeries& f, Complex x) {
  std::vector<Complex> out(f.coeffs().begin(), f.coeffs().end());
  Complex power = 1.0;
  for (auto& c : out) {
    c *= power;
    power *= x;
  }
  return TaylorSeries{std::move(out)};
}

TaylorSeries shift_down(const TaylorSeries& f) {
  if (f.order() == 0) return TaylorSeries::constant(0.0);
  return TaylorSeries{std::vector<Complex>(f.coeffs().begin() + 1, f.coeffs().end())};
}

TaylorSeries truncate(const TaylorSeries& f, int order) {
  require_order(order, "truncate");
  std::vector<Complex> out(static_cast<std::size_t>(order) + 1);
  for (int k = 0; k <= order; ++k) out[k] = f[k];
  return TaylorSeries{std::move(out)};
}

TaylorSeries multiply(const TaylorSeries& f, const TaylorSeries& g, int order) {
  require_order(order, "multiply");
  std::vector<Complex> out(static_cast<std::size_t>(order) + 1);
  for (int i = 0; i <= std::min(order, f.order()); ++i) {
    if (f[i] == Complex{}) continue;
    for (int j = 0; j <= std::min(order - i, g.order()); ++j) out[i + j] += f[i] * g[j];
  }
  return TaylorSeries{std::move(out)};
}

TaylorSeries compose(const TaylorSeries& g, const TaylorSeries& w, int order) {
  require_order(order, "compose");
  if (std::abs(w[0]) > kCoeffTol) throw std::invalid_argument("compose: inner series must vanish at the origin");
  std::vector<Complex> inner(w.coeffs().begin(), w.coeffs().end());
  inner[0] = 0.0;
  const TaylorSeries w0{std::move(inner)};

  // Horner in the ring of truncated series. Terms of g beyond `order` cannot
  // reach degree <= order because w has no constant term.
  TaylorSeries acc = TaylorSeries::constant(g[std::min(g.order(), order)]);
  for (int k = std::min(g.order(), order) - 1; k >= 0; --k) {
    const TaylorSeries prod = multiply(acc, w0, order);
    std::vector<Complex> next(prod.coeffs().begin(), prod.coeffs().end());
    next[0] += g[k];
    acc = TaylorSeries{std::move(next)};
  }
  return truncate(acc, order);
}

TaylorSeries reciprocal(const TaylorSeries& g, int order) {
  require_order(order, "reciprocal");
  if (g[0] == Complex{}) throw std::invalid_argument("reciprocal: series vanishes at the origin");
  std::vector<Complex> out(static_cast<std::size_t>(order) + 1);
  const Complex inv0 = 1.0 / g[0];
  out[0] = inv0;
  for (int k = 1; k <= order; ++k) {
    Complex sum{};
    for (int j = 1; j <= std::min(k, g.order()); ++j) sum += g[j] * out[k - j];
    out[k] = -sum * inv0;
  }
  return TaylorSeries{std::move(out)};
}

TaylorSeries linear_combination(std::span<const std::pair<Complex, TaylorSeries>> terms) {
  if (terms.empty()) throw std::invalid_argument("linear_combination: empty term list");
  int order = 0;
  for (const auto& [weight, f] : terms) order = std::max(order, f.order());
  std::vector<Complex> out(static_cast<std::size_t>(order) + 1);
  for (const auto& [weight, f] : terms) {
    for (int k = 0; k <= f.order(); ++k) out[k] += weight * f[k];
  }
  return TaylorSeries{std::move(out)};
}

double max_coeff_distance(const TaylorSeries& a, const TaylorSeries& b) {
  double worst = 0.0;
  for (int k = 0; k <= std::max(a.order(), b.order()); ++k) worst = std::max(worst, std::abs(a[k] - b[k]));
  return worst;
}

}  // namespace gft
