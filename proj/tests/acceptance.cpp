// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gft/analysis.hpp"
#include "gft/gft_ops.hpp"
#include "gft/powser.hpp"
#include "gft/regions.hpp"

using namespace gft;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool passed;
  std::string detail;
};

std::string fmt(const char* pattern, auto... args) {
  char buffer[512];
  std::snprintf(buffer, sizeof buffer, pattern, args...);
  return buffer;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

/// alpha_i = -pi + 2 pi (i+1)/8, beta_j = j/8.
std::vector<RParams> grid_8x8() {
  std::vector<RParams> cells;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) cells.emplace_back(-kPi + 2.0 * kPi * (i + 1) / 8.0, j / 8.0);
  return cells;
}

std::vector<double> eight_alphas() {
  std::vector<double> out;
  for (int i = 0; i < 8; ++i) out.push_back(-kPi + 2.0 * kPi * (i + 1) / 8.0);
  return out;
}

Complex unit_point(int j, int count) { return std::polar(1.0, 2.0 * kPi * j / count); }

// 1. apply_L o solve_L is the identity on coefficients.
Outcome operator_inversion() {
  const auto start = std::chrono::steady_clock::now();
  std::mt19937_64 engine(20240601);
  std::uniform_real_distribution<double> coord(-1.0, 1.0);
  double worst = 0.0;
  int cases = 0;
  for (int i = 1; i <= 16; ++i) {
    const double alpha = -kPi + 2.0 * kPi * i / 16.0;
    for (int s = 0; s < 200; ++s) {
      std::vector<Complex> c(64);
      c[0] = 1.0;
      for (std::size_t k = 1; k < c.size(); ++k) c[k] = {coord(engine), coord(engine)};
      const TaylorSeries g{std::move(c)};
      const TaylorSeries f = solve_L(g, alpha);
      worst = std::max(worst, max_coeff_distance(apply_L(f, alpha), g));
      ++cases;
    }
  }
  const double elapsed = seconds_since(start);
  return {worst <= 1e-12 && elapsed < 5.0,
          fmt("max coefficient error %.3g over %d series (limit 1e-12), %.2f s (limit 5 s)", worst, cases, elapsed)};
}

// 2. |a_n(f_x)| equals the closed-form bound.
Outcome coefficient_sharpness() {
  double worst = 0.0;
  for (const RParams& p : grid_8x8()) {
    for (int j = 0; j < 16; ++j) {
      const TaylorSeries f = extreme_function(unit_point(j, 16), p, 64);
      for (int n = 2; n <= 64; ++n) {
        const double cos_a = std::cos(p.alpha());
        const double bound =
            4.0 * (1.0 - p.beta()) / (n * std::sqrt(2.0 * (n * n + 1.0 + (n * n - 1.0) * cos_a)));
        worst = std::max(worst, std::abs(std::abs(f[n]) - bound));
      }
    }
  }
  return {worst <= 1e-12, fmt("max | |a_n| - bound | = %.3g over 64 cells x 16 x x 63 n (limit 1e-12)", worst)};
}

// 3. phi_b maps the disc strictly into the strip; h has the right endpoints
// and is nondecreasing.
Outcome strip_lemma() {
  bool ok = true;
  std::ostringstream detail;
  for (const double b : {0.51, 0.75, 1.0, 1.5, 10.0}) {
    const VerificationReport r = verify_strip_lemma(LParams(0.0, b), GridSpec{128, 256, 0.999});
    const ProfileCheck h = verify_profile_monotone(b, 1024);
    const bool strict = r.worst_margin > 0.0;
    const bool ends = std::abs(h.at_minus_one) <= 1e-12 && std::abs(h.at_one - 2.0 * b) <= 1e-12;
    const bool monotone = h.worst_step >= 0.0;
    ok = ok && strict && ends && monotone;
    detail << fmt("b=%g margin %.3g h(-1)=%.3g h(1)-2b=%.3g step>=%.3g; ", b, r.worst_margin, h.at_minus_one,
                  h.at_one - 2.0 * b, h.worst_step);
  }
  return {ok, detail.str()};
}

// 4. Re f' > beta and Re f(z)/z > beta for seeded R-members, plus the
// sharpness probe at r_max = 0.999.
Outcome r_theorems() {
  const auto start = std::chrono::steady_clock::now();
  const GridSpec grid{};
  bool ok = true;
  double worst_fp = INFINITY, worst_q = INFINITY;
  int failures = 0;
  for (const RParams& p : grid_8x8()) {
    const std::uint64_t seed = 4;
    const VerificationReport fp = sweep_members(100, seed, [&](int i) {
      return verify_theorem_Re_fprime(p, sweep_member_R(p, seed, i), grid, Truncation::class_member);
    });
    const VerificationReport q = sweep_members(100, seed, [&](int i) {
      return verify_theorem_f_over_z(p, sweep_member_R(p, seed, i), grid, Truncation::class_member);
    });
    if (!fp.passed) ++failures;
    if (!q.passed) ++failures;
    worst_fp = std::min(worst_fp, fp.worst_margin);
    worst_q = std::min(worst_q, q.worst_margin);
  }
  ok = failures == 0;

  const RParams probe(kPi, 0.0);
  const int order = order_for_tail(image_coeff_bound(probe), 0.999, 1e-6);
  const VerificationReport sharp = verify_theorem_Re_fprime(probe, extreme_function(1.0, probe, order),
                                                            GridSpec{1, 256, 0.999}, Truncation::class_member);
  const bool probe_ok = sharp.passed && sharp.worst_margin > 0.0 && sharp.worst_margin <= 2e-3;
  const double elapsed = seconds_since(start);
  return {ok && probe_ok && elapsed < 60.0,
          fmt("%d failing cells of 128; worst Re f'-beta %.3g, worst Re f/z-beta %.3g; "
              "probe order %d margin %.6g in (0, 2e-3]; %.1f s (limit 60 s)",
              failures, worst_fp, worst_q, order, sharp.worst_margin, elapsed)};
}

// 5. 0 < Re f' < 2b for seeded L-members.
Outcome l_strip_theorem() {
  int failures = 0;
  double worst = INFINITY;
  for (const double b : {0.6, 1.0, 1.5, 5.0}) {
    for (const double alpha : eight_alphas()) {
      const LParams p(alpha, b);
      const std::uint64_t seed = 5;
      const VerificationReport r = sweep_members(100, seed, [&](int i) {
        return verify_theorem_strip_fprime(p, sweep_member_L(p, seed, i), GridSpec{}, Truncation::class_member);
      });
      if (!r.passed) ++failures;
      worst = std::min(worst, r.worst_margin);
    }
  }
  return {failures == 0, fmt("%d failing cells of 32; worst strip margin %.3g", failures, worst)};
}

// 6. G(r) <= Re L <= U(r) and |arg L| <= arcsin delta(r) on circles.
Outcome radial_bounds() {
  const std::vector<double> radii{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
  bool ok = true;
  std::ostringstream detail;
  for (const double b : {0.6, 1.0, 1.5, 5.0}) {
    int radial_fail = 0, arg_fail = 0;
    double radial_worst = INFINITY, arg_worst = INFINITY;
    for (const double alpha : eight_alphas()) {
      const LParams p(alpha, b);
      const std::uint64_t seed = 6;
      const VerificationReport radial = sweep_members(100, seed, [&](int i) {
        return verify_theorem_radial_bounds(p, sweep_member_L(p, seed, i), radii, 256, Truncation::class_member);
      });
      const VerificationReport arg = sweep_members(100, seed, [&](int i) {
        return verify_arg_bound(p, sweep_member_L(p, seed, i), radii, 256, Truncation::class_member);
      });
      radial_fail += radial.passed ? 0 : 1;
      arg_fail += arg.passed ? 0 : 1;
      radial_worst = std::min(radial_worst, radial.worst_margin);
      arg_worst = std::min(arg_worst, arg.worst_margin);
    }
    ok = ok && radial_fail == 0 && arg_fail == 0;
    detail << fmt("b=%g radial %d/8 cells fail (worst %.3g), arg %d/8 fail (worst %.3g); ", b, radial_fail,
                  radial_worst, arg_fail, arg_worst);
  }
  double closed = 0.0;
  for (const double r : radii) {
    closed = std::max({closed, std::abs(bound_G(r, 1.0) - (1.0 - r)), std::abs(bound_U(r, 1.0) - (1.0 + r))});
  }
  ok = ok && closed <= 1e-15;
  detail << fmt("b=1 closed forms off by %.3g", closed);
  return {ok, detail.str()};
}

// 7. Univalence radius of s2(f_x) against the closed form, and the witness.
Outcome s2_radius() {
  double worst = 0.0, witness = 0.0;
  int compared = 0;
  for (const RParams& p : grid_8x8()) {
    const double closed = std::sqrt(10.0 + 6.0 * std::cos(p.alpha())) / (4.0 * (1.0 - p.beta()));
    if (closed >= 1.0) continue;
    for (int j = 0; j < 16; j += 5) {
      const TaylorSeries s2 = partial_sum(extreme_function(unit_point(j, 16), p, 2), 2);
      worst = std::max(worst, std::abs(estimate_univalence_radius(s2).radius - closed));
      ++compared;
    }
    const TaylorSeries s2 = partial_sum(extreme_function(1.0, p, 2), 2);
    const Complex z = -(3.0 + std::polar(1.0, p.alpha())) / (4.0 * (1.0 - p.beta()));
    witness = std::max(witness, std::abs(eval(derivative(s2), z).real()));
  }
  const bool spots = std::abs(radius_s2_closed_form(RParams(kPi, 0.0)) - 0.5) <= 1e-15 &&
                     std::abs(radius_s2_closed_form(RParams(0.0, 0.0)) - 1.0) <= 1e-15;
  return {worst <= 1e-6 && witness < 1e-9 && spots && compared > 0,
          fmt("max |estimate - closed form| %.3g over %d sections (limit 1e-6); witness |Re s2'| %.3g (limit 1e-9); "
              "spot values %s",
              worst, compared, witness, spots ? "ok" : "wrong")};
}

// 8. Conjecture scan on a 4x4 grid.
Outcome conjecture() {
  const auto start = std::chrono::steady_clock::now();
  int k2_rows = 0, k2_fail = 0, rows_total = 0, higher_hold = 0, higher = 0;
  for (const double alpha : {-kPi / 2, 0.0, kPi / 2, kPi}) {
    for (const double beta : {0.0, 0.25, 0.5, 0.75}) {
      const auto rows = conjecture_scan(RParams(alpha, beta), 10, 20, 8);
      rows_total += static_cast<int>(rows.size());
      for (const auto& row : rows) {
        if (row.k == 2) {
          ++k2_rows;
          k2_fail += row.holds ? 0 : 1;
        } else {
          ++higher;
          higher_hold += row.holds ? 1 : 0;
        }
      }
    }
  }
  const double elapsed = seconds_since(start);
  const bool count_ok = rows_total == 16 * 9 * (20 + kConjectureExtremes);
  return {k2_fail == 0 && count_ok && elapsed < 300.0,
          fmt("%d rows; k=2 rows holding %d/%d; k>2 rows holding %d/%d (reported only); %.1f s (limit 300 s)",
              rows_total, k2_rows - k2_fail, k2_rows, higher_hold, higher, elapsed)};
}

struct Captured {
  int code;
  std::string out;
};

Captured run_tool(const std::string& args) {
  const std::string command = std::string(GFTOOL_PATH) + " " + args + " 2>&1";
  Captured result{-1, {}};
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return result;
  char buffer[4096];
  std::size_t n = 0;
  while ((n = std::fread(buffer, 1, sizeof buffer, pipe)) > 0) result.out.append(buffer, n);
  result.code = WEXITSTATUS(pclose(pipe));
  return result;
}

// 9. Byte-identical CLI output across runs and parallelism settings.
Outcome determinism() {
  const std::vector<std::string> commands{
      "gen-extreme --alpha 1 --beta 0.25 --x 0.5",
      "gen-random-r --alpha -2 --beta 0.1 --atoms 6 --seed 11",
      "gen-random-l --alpha 0.5 --b 1.5 --seed 11",
      "verify re-fprime --alpha 0.7 --beta 0.3 --members 100 --seed 7",
      "verify f-over-z --alpha -1 --beta 0.5 --members 100 --seed 7",
      "verify strip-fprime --alpha 0 --b 1 --members 100 --seed 7",
      "verify radial-bounds --alpha 2 --b 0.8 --members 50 --seed 7 --format csv",
      "verify coeff-bounds --alpha 0.3 --beta 0.2 --members 50 --seed 7",
      "radius-s2 --alpha 0.4 --beta 0.1",
      "boundary-curve --b 1.5 --points 512",
      "conjecture-scan --alpha 3.14159265 --beta 0 --kmax 6 --members 20 --seed 1",
  };
  const std::vector<std::string> settings{"", "", " --threads 1 --simd scalar", " --threads 4 --simd auto",
                                          " --threads 2 --simd scalar", " --threads 3"};
  int mismatches = 0, runs = 0;
  for (const auto& command : commands) {
    const Captured reference = run_tool(command);
    if (reference.code < 0 || reference.out.empty()) ++mismatches;
    for (const auto& setting : settings) {
      const Captured again = run_tool(command + setting);
      ++runs;
      if (again.code != reference.code || again.out != reference.out) ++mismatches;
    }
  }
  return {mismatches == 0, fmt("%d mismatches over %d repeated runs of %zu commands", mismatches, runs,
                               commands.size())};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"operator inversion", operator_inversion},
      {"coefficient sharpness", coefficient_sharpness},
      {"strip lemma", strip_lemma},
      {"Re f' > beta and Re f/z > beta", r_theorems},
      {"0 < Re f' < 2b", l_strip_theorem},
      {"radial and argument bounds", radial_bounds},
      {"s2 univalence radius", s2_radius},
      {"conjecture scan", conjecture},
      {"CLI determinism", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome outcome{false, ""};
    try {
      outcome = criteria[i].second();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    failed += outcome.passed ? 0 : 1;
    std::printf("criterion %zu %s: %s | %s\n", i + 1, outcome.passed ? "PASS" : "FAIL", criteria[i].first,
                outcome.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu of %zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
