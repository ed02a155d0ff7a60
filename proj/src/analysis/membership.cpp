#include "checks_internal.hpp"

namespace gft {

using detail::grid_check;
using detail::require_normalized;

VerificationReport check_membership_R(const TaylorSeries& f, const RParams& params, const GridSpec& grid,
                                      Truncation truncation) {
  require_normalized(f, "check_membership_R");
  grid.validate();
  const TaylorSeries image = apply_L(f, params.alpha());
  const double tail = truncation == Truncation::class_member
                          ? operator_image_tail(image_coeff_bound(params), image.order(), grid.r_max)
                          : 0.0;
  const double beta = params.beta();
  return grid_check("membership-r", image, grid, params, tail, [beta](Complex w) { return w.real() - beta; });
}

VerificationReport check_membership_L(const TaylorSeries& f, const LParams& params, const GridSpec& grid,
                                      Truncation truncation) {
  require_normalized(f, "check_membership_L");
  grid.validate();
  const TaylorSeries image = apply_L(f, params.alpha());
  const double tail = truncation == Truncation::class_member
                          ? operator_image_tail(image_coeff_bound(params), image.order(), grid.r_max)
                          : 0.0;
  const Region disc = Region::disc(params.b());
  return grid_check("membership-l", image, grid, params, tail, [&disc](Complex w) { return region_margin(disc, w); });
}

}  // namespace gft
