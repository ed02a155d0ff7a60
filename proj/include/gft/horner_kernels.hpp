#pragma once

// Batched complex Horner evaluation. One polynomial, many points.
//
// Every variant performs the same per-point operation sequence
//
//   acc = c[n-1]
//   acc.re = (acc.re*z.re - acc.im*z.im) + c[k].re
//   acc.im = (acc.re*z.im + acc.im*z.re) + c[k].im      for k = n-2 .. 0
//
// without fused multiply-add, so SIMD lanes are bit-identical to the scalar
// reference. Tests rely on exact equality.

#include <cstddef>
#include <string_view>

namespace gft::simd {

enum class Isa { scalar, avx2, neon };

struct HornerArgs {
  const double* coeff_re;
  const double* coeff_im;
  std::size_t num_coeffs;  // >= 1
  const double* z_re;
  const double* z_im;
  double* out_re;
  double* out_im;
  std::size_t num_points;
};

void horner_scalar(const HornerArgs& args);
#if defined(__x86_64__) || defined(_M_X64)
void horner_avx2(const HornerArgs& args);
#endif
#if defined(__aarch64__)
void horner_neon(const HornerArgs& args);
#endif

/// Best variant the running CPU supports.
Isa detect_isa();
/// Variant used by horner(); defaults to detect_isa().
Isa active_isa();
/// Forces a variant. Throws std::invalid_argument if the CPU lacks it.
void set_active_isa(Isa isa);
bool isa_supported(Isa isa);

std::string_view isa_name(Isa isa);
/// Parses "scalar", "avx2", "neon" or "auto".
Isa parse_isa(std::string_view name);

/// Dispatches to the active variant.
void horner(const HornerArgs& args);
/// Calls a specific variant directly (must be supported).
void horner_with(Isa isa, const HornerArgs& args);

}  // namespace gft::simd
