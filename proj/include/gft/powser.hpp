#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace gft {

using Complex = std::complex<double>;

/// Default truncation order for generated class members.
inline constexpr int kDefaultOrder = 64;

/// Absolute tolerance for coefficient comparisons.
inline constexpr double kCoeffTol = 1e-12;
/// Absolute tolerance for comparisons of evaluated values.
inline constexpr double kValueTol = 1e-9;

/// Truncated power series c_0 + c_1 z + ... + c_N z^N with complex
/// coefficients. Immutable; every operation returns a fresh series.
///
/// Construction rejects empty coefficient lists and non-finite entries
/// with std::invalid_argument.
class TaylorSeries {
 public:
  explicit TaylorSeries(std::vector<Complex> coeffs);
  TaylorSeries(std::initializer_list<Complex> coeffs);

  /// Degree bound N; the series stores N+1 coefficients.
  [[nodiscard]] int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] std::span<const Complex> coeffs() const { return coeffs_; }
  /// Coefficient of z^k, zero beyond the stored order.
  [[nodiscard]] Complex operator[](int k) const {
    return (k >= 0 && k <= order()) ? coeffs_[static_cast<std::size_t>(k)] : Complex{};
  }

  static TaylorSeries constant(Complex c) { return TaylorSeries{std::vector<Complex>{c}}; }
  /// The normalized identity f(z) = z.
  static TaylorSeries identity() { return TaylorSeries{std::vector<Complex>{0.0, 1.0}}; }

  friend bool operator==(const TaylorSeries&, const TaylorSeries&) = default;

 private:
  std::vector<Complex> coeffs_;
};

/// Horner evaluation at a single point.
Complex eval(const TaylorSeries& f, Complex z);

/// Evaluates f at many points (structure-of-arrays layout) through the
/// active SIMD kernel. All spans must have equal length.
void eval_many(const TaylorSeries& f, std::span<const double> z_re, std::span<const double> z_im,
               std::span<double> out_re, std::span<double> out_im);

/// f'. An order-0 input yields the zero constant.
TaylorSeries derivative(const TaylorSeries& f);

/// f(xz): coefficient k is scaled by x^k.
TaylorSeries scale_argument(const TaylorSeries& f, Complex x);

/// Drops the constant term: (f(z) - f(0)) / z. Order 0 input yields zero.
TaylorSeries shift_down(const TaylorSeries& f);

/// Degree-`order` truncation (pads with zeros when order exceeds f.order()).
TaylorSeries truncate(const TaylorSeries& f, int order);

/// Truncated product f*g to the given order.
TaylorSeries multiply(const TaylorSeries& f, const TaylorSeries& g, int order);

/// Truncated composition g(w(z)). Requires w(0) = 0 (|w(0)| <= kCoeffTol).
TaylorSeries compose(const TaylorSeries& g, const TaylorSeries& w, int order);

/// Truncated 1/g. Requires g(0) != 0.
TaylorSeries reciprocal(const TaylorSeries& g, int order);

/// Coefficient-wise weighted sum, padded to the largest order.
TaylorSeries linear_combination(std::span<const std::pair<Complex, TaylorSeries>> terms);

/// Largest coefficient-wise absolute difference (shorter series zero padded).
double max_coeff_distance(const TaylorSeries& a, const TaylorSeries& b);

}  // namespace gft
