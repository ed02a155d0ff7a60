#include "cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <cmath>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gft/analysis.hpp"
#include "gft/gft_ops.hpp"
#include "gft/horner_kernels.hpp"
#include "gft/io.hpp"
#include "gft/parallel.hpp"
#include "gft/regions.hpp"

namespace gft::cli {

namespace {

enum class Format { json, csv };

struct Options {
  std::string alpha = "0";
  std::optional<double> beta;
  std::optional<double> b;
  int order = kDefaultOrder;
  std::string grid = "64x256";
  double rmax = 0.95;
  std::uint64_t seed = 0;
  int members = 100;
  std::string in;
  std::string out;
  std::string format;
  int points = 512;
  int kmax = 10;
  int atoms = 4;
  double x_angle = 0.0;
  int schur_m = 0;
  int k = 0;
  int angles = 1024;
  std::vector<double> radii{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
  bool truncated = false;
  std::size_t threads = 0;
  std::string simd = "auto";
  std::string theorem;
};

// Validation failure that maps to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double parse_alpha(const std::string& text) {
  if (text == "pi") return std::numbers::pi;
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) throw UsageError("--alpha: expected radians or 'pi', got '" + text + "'");
  return value;
}

GridSpec parse_grid(const Options& o) {
  const auto x = o.grid.find('x');
  if (x == std::string::npos) throw UsageError("--grid: expected <radii>x<angles>, got '" + o.grid + "'");
  GridSpec grid;
  try {
    std::size_t used = 0;
    grid.num_radii = std::stoi(o.grid.substr(0, x), &used);
    if (used != x) throw std::invalid_argument("radii");
    const std::string angles = o.grid.substr(x + 1);
    grid.num_angles = std::stoi(angles, &used);
    if (used != angles.size()) throw std::invalid_argument("angles");
  } catch (const std::logic_error&) {
    throw UsageError("--grid: expected <radii>x<angles>, got '" + o.grid + "'");
  }
  grid.r_max = o.rmax;
  grid.validate();
  return grid;
}

RParams r_params(const Options& o) {
  if (!o.beta) throw UsageError("missing --beta");
  return {parse_alpha(o.alpha), *o.beta};
}

LParams l_params(const Options& o) {
  if (!o.b) throw UsageError("missing --b");
  return {parse_alpha(o.alpha), *o.b};
}

Format format_or(const Options& o, Format fallback) {
  if (o.format.empty()) return fallback;
  return o.format == "csv" ? Format::csv : Format::json;
}

void require_order(int order) {
  if (order < 2) throw UsageError("--order must be at least 2");
}

void emit_series(const Options& o, const TaylorSeries& f, std::ostream& out) {
  if (!o.out.empty()) {
    io::write_series(o.out, f);
    return;
  }
  if (format_or(o, Format::json) == Format::csv) {
    out << "k,re,im\n";
    for (int k = 0; k <= f.order(); ++k) {
      out << k << ',' << io::format_double(f[k].real()) << ',' << io::format_double(f[k].imag()) << '\n';
    }
    return;
  }
  out << io::series_to_json(f).dump() << '\n';
}

int emit_report(const Options& o, const VerificationReport& report, std::ostream& out) {
  if (format_or(o, Format::json) == Format::csv) {
    out << io::report_csv_header() << '\n' << io::report_csv_row(report) << '\n';
  } else {
    out << io::report_to_json(report).dump(2) << '\n';
  }
  return report.passed ? kOk : kFailed;
}

TaylorSeries input_series(const Options& o) {
  if (o.in.empty()) throw UsageError("missing --in <series.json>");
  return io::read_series(o.in);
}

Truncation truncation_of(const Options& o) { return o.truncated ? Truncation::class_member : Truncation::exact; }

int run_verify(const Options& o, std::ostream& out) {
  const std::string& id = o.theorem;
  if (o.members < 1) throw UsageError("--members must be at least 1");

  if (id == "re-fprime" || id == "f-over-z") {
    const RParams params = r_params(o);
    const GridSpec grid = parse_grid(o);
    require_order(o.order);
    const auto check = [&](const TaylorSeries& f, Truncation t) {
      return id == "re-fprime" ? verify_theorem_Re_fprime(params, f, grid, t) : verify_theorem_f_over_z(params, f, grid, t);
    };
    if (!o.in.empty()) return emit_report(o, check(input_series(o), truncation_of(o)), out);
    return emit_report(o, sweep_members(o.members, o.seed, [&](int i) {
                         return check(sweep_member_R(params, o.seed, i, o.order), Truncation::class_member);
                       }),
                       out);
  }
  if (id == "strip-fprime") {
    const LParams params = l_params(o);
    const GridSpec grid = parse_grid(o);
    require_order(o.order);
    if (!o.in.empty()) return emit_report(o, verify_theorem_strip_fprime(params, input_series(o), grid, truncation_of(o)), out);
    return emit_report(o, sweep_members(o.members, o.seed, [&](int i) {
                         return verify_theorem_strip_fprime(params, sweep_member_L(params, o.seed, i, o.order), grid,
                                                            Truncation::class_member);
                       }),
                       out);
  }
  if (id == "radial-bounds" || id == "arg-bound") {
    const LParams params = l_params(o);
    const int angles = parse_grid(o).num_angles;
    require_order(o.order);
    const auto check = [&](const TaylorSeries& f, Truncation t) {
      return id == "radial-bounds" ? verify_theorem_radial_bounds(params, f, o.radii, angles, t)
                                   : verify_arg_bound(params, f, o.radii, angles, t);
    };
    if (!o.in.empty()) return emit_report(o, check(input_series(o), truncation_of(o)), out);
    return emit_report(o, sweep_members(o.members, o.seed, [&](int i) {
                         return check(sweep_member_L(params, o.seed, i, o.order), Truncation::class_member);
                       }),
                       out);
  }
  if (id == "strip-lemma") {
    const LParams params = l_params(o);
    return emit_report(o, verify_strip_lemma(params, parse_grid(o)), out);
  }
  if (id == "coeff-bounds") {
    require_order(o.order);
    return emit_report(o, verify_coeff_bounds(r_params(o), o.members, o.seed, o.order), out);
  }
  if (id == "h-monotone") {
    const LParams params = l_params(o);
    if (o.points < 2) throw UsageError("--points must be at least 2");
    const ProfileCheck check = verify_profile_monotone(params.b(), o.points);
    if (format_or(o, Format::json) == Format::csv) {
      out << "b,passed,h_minus_one,h_one,worst_step\n"
          << io::format_double(params.b()) << ',' << (check.passed ? "true" : "false") << ','
          << io::format_double(check.at_minus_one) << ',' << io::format_double(check.at_one) << ','
          << io::format_double(check.worst_step) << '\n';
    } else {
      const nlohmann::json j = {{"theorem_id", "h-monotone"},  {"b", params.b()},
                                {"passed", check.passed},       {"h_minus_one", check.at_minus_one},
                                {"h_one", check.at_one},        {"worst_step", check.worst_step},
                                {"samples", o.points}};
      out << j.dump(2) << '\n';
    }
    return check.passed ? kOk : kFailed;
  }
  throw UsageError("unknown theorem id '" + id + "'");
}

int dispatch(const std::string& command, const Options& o, std::ostream& out) {
  if (command == "gen-extreme") {
    require_order(o.order);
    emit_series(o, extreme_function(std::polar(1.0, o.x_angle), r_params(o), o.order), out);
    return kOk;
  }
  if (command == "gen-random-r") {
    require_order(o.order);
    if (o.atoms < 1) throw UsageError("--atoms must be at least 1");
    emit_series(o, random_member_R(r_params(o), o.atoms, o.seed, o.order), out);
    return kOk;
  }
  if (command == "gen-random-l") {
    require_order(o.order);
    const LParams params = l_params(o);
    const SchurSpec schur = o.schur_m > 0 ? SchurSpec{std::polar(1.0, o.x_angle), o.schur_m} : random_schur(o.seed);
    emit_series(o, random_member_L(params, schur, o.order), out);
    return kOk;
  }
  if (command == "apply-op") {
    const double alpha = parse_alpha(o.alpha);
    validate_alpha(alpha);
    emit_series(o, apply_L(input_series(o), alpha), out);
    return kOk;
  }
  if (command == "check-r") {
    return emit_report(o, check_membership_R(input_series(o), r_params(o), parse_grid(o), truncation_of(o)), out);
  }
  if (command == "check-l") {
    return emit_report(o, check_membership_L(input_series(o), l_params(o), parse_grid(o), truncation_of(o)), out);
  }
  if (command == "verify") return run_verify(o, out);
  if (command == "radius-s2") {
    const RParams params = r_params(o);
    const double radius = radius_s2_closed_form(params);
    if (format_or(o, Format::json) == Format::csv) {
      out << "alpha,beta,radius\n"
          << io::format_double(params.alpha()) << ',' << io::format_double(params.beta()) << ','
          << io::format_double(radius) << '\n';
    } else {
      out << nlohmann::json{{"alpha", params.alpha()}, {"beta", params.beta()}, {"radius", radius}}.dump() << '\n';
    }
    return kOk;
  }
  if (command == "estimate-radius") {
    TaylorSeries s = input_series(o);
    if (o.k > 0) s = partial_sum(s, o.k);
    if (o.angles < 8) throw UsageError("--angles must be at least 8");
    const RadiusEstimate est = estimate_univalence_radius(s, o.angles);
    if (format_or(o, Format::json) == Format::csv) {
      out << "radius,bracket_width,criterion,monotone\n"
          << io::format_double(est.radius) << ',' << io::format_double(est.bracket_width) << ',' << est.criterion
          << ',' << (est.monotone ? "true" : "false") << '\n';
    } else {
      out << io::radius_to_json(est).dump(2) << '\n';
    }
    return kOk;
  }
  if (command == "boundary-curve") {
    const LParams params = l_params(o);
    if (o.points < 3) throw UsageError("--points must be at least 3");
    const auto curve = phi_boundary_curve(params, o.points);
    if (format_or(o, Format::csv) == Format::json) {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& p : curve) arr.push_back({{"phi", p.phi}, {"re", p.w.real()}, {"im", p.w.imag()}});
      out << arr.dump() << '\n';
    } else {
      io::write_curve_csv(out, curve);
    }
    return kOk;
  }
  if (command == "conjecture-scan") {
    const RParams params = r_params(o);
    if (o.kmax < 2) throw UsageError("--kmax must be at least 2");
    if (o.members < 0) throw UsageError("--members must be nonnegative");
    if (o.angles < 8) throw UsageError("--angles must be at least 8");
    const auto rows = conjecture_scan(params, o.kmax, o.members, o.seed, o.angles);
    if (format_or(o, Format::csv) == Format::json) {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& r : rows) {
        arr.push_back({{"k", r.k},
                       {"member_id", r.member_id},
                       {"alpha", r.alpha},
                       {"beta", r.beta},
                       {"estimated_radius", r.estimated_radius},
                       {"closed_form_radius", r.closed_form_radius},
                       {"holds", r.holds}});
      }
      out << arr.dump() << '\n';
    } else {
      io::write_conjecture_csv(out, rows);
    }
    return kOk;
  }
  throw UsageError("unknown command '" + command + "'");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Function classes R(alpha, beta) and L_alpha(b): members, checks and theorem verification", "gftool"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  app.add_option("--alpha", o.alpha, "Angle alpha in radians, -pi < alpha <= pi, or 'pi'");
  app.add_option("--beta", o.beta, "beta in [0, 1) for R(alpha, beta)");
  app.add_option("--b", o.b, "b > 1/2 for L_alpha(b)");
  app.add_option("--order", o.order, "Truncation order of generated series")->capture_default_str();
  app.add_option("--grid", o.grid, "Sampling grid <radii>x<angles>")->capture_default_str();
  app.add_option("--rmax", o.rmax, "Outer grid radius in (0, 1)")->capture_default_str();
  app.add_option("--seed", o.seed, "Seed for member generators")->capture_default_str();
  app.add_option("--members", o.members, "Number of seeded members")->capture_default_str();
  app.add_option("--in", o.in, "Input series (JSON)");
  app.add_option("--out", o.out, "Output series file (JSON)");
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--points", o.points, "Curve / profile sample count")->capture_default_str();
  app.add_option("--kmax", o.kmax, "Largest section order in the conjecture scan")->capture_default_str();
  app.add_option("--atoms", o.atoms, "Extreme functions mixed by gen-random-r")->capture_default_str();
  app.add_option("--x", o.x_angle, "Angle of the unimodular rotation x (radians)")->capture_default_str();
  app.add_option("--m", o.schur_m, "Power m of the Schwarz function x z^m (gen-random-l; 0 = seeded)");
  app.add_option("--k", o.k, "Take the k-th section of the input first (estimate-radius)");
  app.add_option("--angles", o.angles, "Angles per circle for radius estimation")->capture_default_str();
  app.add_option("--radii", o.radii, "Circle radii for radial-bounds / arg-bound")->delimiter(',');
  app.add_flag("--truncated", o.truncated, "Treat --in series as a class-member truncation (adds tail budget)");
  app.add_option("--threads", o.threads, "Worker threads (0 = hardware)")->capture_default_str();
  app.add_option("--simd", o.simd, "Kernel variant")->check(CLI::IsMember({"auto", "scalar", "avx2", "neon"}));

  const std::vector<std::pair<const char*, const char*>> commands = {
      {"gen-extreme", "Extreme function f_x of R(alpha, beta)"},
      {"gen-random-r", "Seeded member of R(alpha, beta)"},
      {"gen-random-l", "Member of L_alpha(b) for a Schwarz function x z^m"},
      {"apply-op", "Apply the operator L_alpha to --in"},
      {"check-r", "Membership check for R(alpha, beta)"},
      {"check-l", "Membership check for L_alpha(b)"},
      {"verify", "Run a theorem harness"},
      {"radius-s2", "Closed-form univalence radius of second sections"},
      {"estimate-radius", "Bisection estimate of the univalence radius of --in"},
      {"boundary-curve", "Boundary curve of phi_b as CSV"},
      {"conjecture-scan", "Univalence radii of sections for seeded members and extremes"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    if (std::string(name) == "verify") {
      sub->add_option("theorem_id", o.theorem, "Theorem id")
          ->required()
          ->check(CLI::IsMember({"re-fprime", "f-over-z", "strip-fprime", "radial-bounds", "arg-bound", "strip-lemma",
                                 "coeff-bounds", "h-monotone"}));
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "gftool: " << e.what() << '\n';
    return kUsage;
  }

  try {
    set_worker_count(o.threads);
    simd::set_active_isa(simd::parse_isa(o.simd));
    return dispatch(app.get_subcommands().front()->get_name(), o, out);
  } catch (const UsageError& e) {
    err << "gftool: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    err << "gftool: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "gftool: error: " << e.what() << '\n';
  }
  return kUsage;
}

}  // namespace gft::cli
