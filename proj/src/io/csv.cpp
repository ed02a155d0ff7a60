#include <cstdio>
#include <ostream>

#include "gft/io.hpp"

namespace gft::io {

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

void write_curve_csv(std::ostream& out, const std::vector<CurvePoint>& curve) {
  out << "phi,re,im\n";
  for (const auto& p : curve) {
    out << format_double(p.phi) << ',' << format_double(p.w.real()) << ',' << format_double(p.w.imag()) << '\n';
  }
}

void write_conjecture_csv(std::ostream& out, const std::vector<ConjectureRow>& rows) {
  out << "k,member_id,alpha,beta,estimated_radius,closed_form_radius,holds\n";
  for (const auto& r : rows) {
    out << r.k << ',' << r.member_id << ',' << format_double(r.alpha) << ',' << format_double(r.beta) << ','
        << format_double(r.estimated_radius) << ',' << format_double(r.closed_form_radius) << ','
        << (r.holds ? "true" : "false") << '\n';
  }
}

}  // namespace gft::io
