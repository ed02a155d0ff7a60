#include "gft/horner_kernels.hpp"

namespace gft::simd {

void horner_scalar(const HornerArgs& a) {
  const std::size_t top = a.num_coeffs - 1;
  for (std::size_t p = 0; p < a.num_points; ++p) {
    const double zr = a.z_re[p];
    const double zi = a.z_im[p];
    double acc_r = a.coeff_re[top];
    double acc_i = a.coeff_im[top];
    for (std::size_t k = top; k-- > 0;) {
      const double next_r = (acc_r * zr - acc_i * zi) + a.coeff_re[k];
      const double next_i = (acc_r * zi + acc_i * zr) + a.coeff_im[k];
      acc_r = next_r;
      acc_i = next_i;
    }
    a.out_re[p] = acc_r;
    a.out_im[p] = acc_i;
  }
}

}  // namespace gft::simd
