#include <sstream>

#include "gft/io.hpp"

namespace gft::io {

namespace {

nlohmann::json params_to_json(const ClassParams& params) {
  if (const auto* r = std::get_if<RParams>(&params)) {
    return {{"class", "R"}, {"alpha", r->alpha()}, {"beta", r->beta()}};
  }
  const auto& l = std::get<LParams>(params);
  return {{"class", "L"}, {"alpha", l.alpha()}, {"b", l.b()}};
}

}  // namespace

nlohmann::json report_to_json(const VerificationReport& report) {
  return {
      {"theorem_id", report.theorem_id},
      {"passed", report.passed},
      {"sharp", report.sharp},
      {"worst_margin", report.worst_margin},
      {"worst_point", {report.worst_point.real(), report.worst_point.imag()}},
      {"truncation_tail", report.truncation_tail},
      {"tolerance", report.tolerance},
      {"grid", {{"num_radii", report.grid.num_radii}, {"num_angles", report.grid.num_angles}, {"r_max", report.grid.r_max}}},
      {"params", params_to_json(report.params)},
      {"members", report.members},
      {"worst_member", report.worst_member},
      {"seed", report.seed},
  };
}

nlohmann::json radius_to_json(const RadiusEstimate& estimate) {
  return {{"radius", estimate.radius},
          {"bracket_width", estimate.bracket_width},
          {"criterion", estimate.criterion},
          {"monotone", estimate.monotone}};
}

std::string report_csv_header() {
  return "theorem_id,passed,sharp,worst_margin,worst_re,worst_im,truncation_tail,tolerance,num_radii,num_angles,"
         "r_max,class,alpha,param,members,worst_member,seed";
}

std::string report_csv_row(const VerificationReport& r) {
  std::ostringstream row;
  const bool is_r = std::holds_alternative<RParams>(r.params);
  const double alpha = is_r ? std::get<RParams>(r.params).alpha() : std::get<LParams>(r.params).alpha();
  const double param = is_r ? std::get<RParams>(r.params).beta() : std::get<LParams>(r.params).b();
  row << r.theorem_id << ',' << (r.passed ? "true" : "false") << ',' << (r.sharp ? "true" : "false") << ','
      << format_double(r.worst_margin) << ',' << format_double(r.worst_point.real()) << ','
      << format_double(r.worst_point.imag()) << ',' << format_double(r.truncation_tail) << ','
      << format_double(r.tolerance) << ',' << r.grid.num_radii << ',' << r.grid.num_angles << ','
      << format_double(r.grid.r_max) << ',' << (is_r ? "R" : "L") << ',' << format_double(alpha) << ','
      << format_double(param) << ',' << r.members << ',' << r.worst_member << ',' << r.seed;
  return row.str();
}

}  // namespace gft::io
