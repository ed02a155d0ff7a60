#include <atomic>
#include <stdexcept>
#include <string>

#include "gft/horner_kernels.hpp"

namespace gft::simd {

namespace {

std::atomic<Isa>& active_slot() {
  static std::atomic<Isa> slot{detect_isa()};
  return slot;
}

}  // namespace

bool isa_supported(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
#if defined(__x86_64__) || defined(_M_X64)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::neon:
#if defined(__aarch64__)
      return true;
#else
      return false;
#endif
  }
  return false;
}

Isa detect_isa() {
  if (isa_supported(Isa::avx2)) return Isa::avx2;
  if (isa_supported(Isa::neon)) return Isa::neon;
  return Isa::scalar;
}

Isa active_isa() { return active_slot().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) {
  if (!isa_supported(isa)) {
    throw std::invalid_argument("SIMD variant '" + std::string(isa_name(isa)) + "' is not supported on this CPU");
  }
  active_slot().store(isa, std::memory_order_relaxed);
}

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
    case Isa::neon:
      return "neon";
  }
  return "unknown";
}

Isa parse_isa(std::string_view name) {
  if (name == "auto") return detect_isa();
  if (name == "scalar") return Isa::scalar;
  if (name == "avx2") return Isa::avx2;
  if (name == "neon") return Isa::neon;
  throw std::invalid_argument("unknown SIMD variant '" + std::string(name) + "'");
}

void horner_with(Isa isa, const HornerArgs& args) {
  switch (isa) {
#if defined(__x86_64__) || defined(_M_X64)
    case Isa::avx2:
      horner_avx2(args);
      return;
#endif
#if defined(__aarch64__)
    case Isa::neon:
      horner_neon(args);
      return;
#endif
    default:
      horner_scalar(args);
      return;
  }
}

void horner(const HornerArgs& args) { horner_with(active_isa(), args); }

}  // namespace gft::simd
