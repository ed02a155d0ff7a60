#include <arm_neon.h>

#include "gft/horner_kernels.hpp"

namespace gft::simd {

void horner_neon(const HornerArgs& a) {
  const std::size_t top = a.num_coeffs - 1;
  std::size_t p = 0;
  for (; p + 2 <= a.num_points; p += 2) {
    const float64x2_t zr = vld1q_f64(a.z_re + p);
    const float64x2_t zi = vld1q_f64(a.z_im + p);
    float64x2_t acc_r = vdupq_n_f64(a.coeff_re[top]);
    float64x2_t acc_i = vdupq_n_f64(a.coeff_im[top]);
    for (std::size_t k = top; k-- > 0;) {
      // vmul/vsub/vadd only: vfma would break equality with the scalar path.
      const float64x2_t re =
          vaddq_f64(vsubq_f64(vmulq_f64(acc_r, zr), vmulq_f64(acc_i, zi)), vdupq_n_f64(a.coeff_re[k]));
      const float64x2_t im =
          vaddq_f64(vaddq_f64(vmulq_f64(acc_r, zi), vmulq_f64(acc_i, zr)), vdupq_n_f64(a.coeff_im[k]));
      acc_r = re;
      acc_i = im;
    }
    vst1q_f64(a.out_re + p, acc_r);
    vst1q_f64(a.out_im + p, acc_i);
  }
  if (p < a.num_points) {
    HornerArgs rest = a;
    rest.z_re += p;
    rest.z_im += p;
    rest.out_re += p;
    rest.out_im += p;
    rest.num_points -= p;
    horner_scalar(rest);
  }
}

}  // namespace gft::simd
