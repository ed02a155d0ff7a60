#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gft/analysis.hpp"

namespace gft {

namespace {

// sum_{n > order} term(n) r^{n-1} with 0 <= term(n) <= K. Exact terms until
// the geometric remainder K r^{n-1}/(1-r) is negligible, then that
// remainder is added as an upper bound.
template <typename Term>
double bounded_tail(double image_coeff_bound, int order, double r, Term term) {
  if (!(r >= 0.0 && r < 1.0)) throw std::invalid_argument("tail radius must lie in [0, 1)");
  if (r == 0.0) return 0.0;
  double sum = 0.0;
  double power = std::pow(r, order);  // r^{n-1} for n = order + 1
  for (long n = order + 1;; ++n) {
    const double remainder = image_coeff_bound * power / (1.0 - r);
    if (remainder <= 1e-17 * (sum + 1e-300) || remainder < 1e-300 || n - order > 10'000'000) {
      return sum + remainder;
    }
    sum += term(n) * power;
    power *= r;
  }
}

}  // namespace

double operator_image_tail(double image_coeff_bound, int image_order, double r) {
  if (!(r >= 0.0 && r < 1.0)) throw std::invalid_argument("tail radius must lie in [0, 1)");
  return image_coeff_bound * std::pow(r, image_order + 1) / (1.0 - r);
}

double derivative_tail(double alpha, double image_coeff_bound, int order, double r) {
  // |n a_n| <= 2K / |n+1+(n-1)e^{i alpha}|.
  const Complex gamma = operator_weight(alpha);
  return bounded_tail(image_coeff_bound, order, r, [&](long n) {
    return image_coeff_bound / std::abs(1.0 + static_cast<double>(n - 1) * gamma);
  });
}

double quotient_tail(double alpha, double image_coeff_bound, int order, double r) {
  const Complex gamma = operator_weight(alpha);
  return bounded_tail(image_coeff_bound, order, r, [&](long n) {
    return image_coeff_bound / (static_cast<double>(n) * std::abs(1.0 + static_cast<double>(n - 1) * gamma));
  });
}

int order_for_tail(double image_coeff_bound, double r, double eps) {
  if (!(r > 0.0 && r < 1.0) || !(eps > 0.0)) throw std::invalid_argument("order_for_tail: bad arguments");
  const double needed = std::log(eps * (1.0 - r) / image_coeff_bound) / std::log(r);
  return std::max(1, static_cast<int>(std::ceil(needed)));
}

}  // namespace gft
