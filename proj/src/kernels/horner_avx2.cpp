// Compiled with -mavx2 only; callers must check isa_supported(Isa::avx2).
#include <immintrin.h>

#include "gft/horner_kernels.hpp"

namespace gft::simd {

namespace {

struct Lane4 {
  __m256d re;
  __m256d im;
};

inline Lane4 step(Lane4 acc, __m256d zr, __m256d zi, __m256d cr, __m256d ci) {
  const __m256d re = _mm256_add_pd(_mm256_sub_pd(_mm256_mul_pd(acc.re, zr), _mm256_mul_pd(acc.im, zi)), cr);
  const __m256d im = _mm256_add_pd(_mm256_add_pd(_mm256_mul_pd(acc.re, zi), _mm256_mul_pd(acc.im, zr)), ci);
  return {re, im};
}

}  // namespace

void horner_avx2(const HornerArgs& a) {
  const std::size_t top = a.num_coeffs - 1;
  const __m256d top_r = _mm256_set1_pd(a.coeff_re[top]);
  const __m256d top_i = _mm256_set1_pd(a.coeff_im[top]);

  std::size_t p = 0;
  // Four independent accumulators per pass hide the multiply/add latency of
  // the Horner recurrence.
  for (; p + 16 <= a.num_points; p += 16) {
    __m256d zr[4], zi[4];
    Lane4 acc[4];
    for (int v = 0; v < 4; ++v) {
      zr[v] = _mm256_loadu_pd(a.z_re + p + 4 * v);
      zi[v] = _mm256_loadu_pd(a.z_im + p + 4 * v);
      acc[v] = {top_r, top_i};
    }
    for (std::size_t k = top; k-- > 0;) {
      const __m256d cr = _mm256_set1_pd(a.coeff_re[k]);
      const __m256d ci = _mm256_set1_pd(a.coeff_im[k]);
      for (int v = 0; v < 4; ++v) acc[v] = step(acc[v], zr[v], zi[v], cr, ci);
    }
    for (int v = 0; v < 4; ++v) {
      _mm256_storeu_pd(a.out_re + p + 4 * v, acc[v].re);
      _mm256_storeu_pd(a.out_im + p + 4 * v, acc[v].im);
    }
  }
  for (; p + 4 <= a.num_points; p += 4) {
    const __m256d zr = _mm256_loadu_pd(a.z_re + p);
    const __m256d zi = _mm256_loadu_pd(a.z_im + p);
    Lane4 acc{top_r, top_i};
    for (std::size_t k = top; k-- > 0;) {
      acc = step(acc, zr, zi, _mm256_set1_pd(a.coeff_re[k]), _mm256_set1_pd(a.coeff_im[k]));
    }
    _mm256_storeu_pd(a.out_re + p, acc.re);
    _mm256_storeu_pd(a.out_im + p, acc.im);
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
