#pragma once

// Serialization: the JSON series format {"coeffs": [[re, im], ...]},
// JSON/CSV verification reports, boundary-curve and conjecture-scan CSV.

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "gft/analysis.hpp"
#include "gft/powser.hpp"
#include "gft/regions.hpp"

namespace gft::io {

/// Throws std::invalid_argument on malformed input or non-finite values.
TaylorSeries series_from_json(const nlohmann::json& j);
nlohmann::json series_to_json(const TaylorSeries& f);

TaylorSeries read_series(const std::string& path);
void write_series(const std::string& path, const TaylorSeries& f);

nlohmann::json report_to_json(const VerificationReport& report);
nlohmann::json radius_to_json(const RadiusEstimate& estimate);

std::string report_csv_header();
std::string report_csv_row(const VerificationReport& report);

/// %.17g; round-trips every double.
std::string format_double(double value);

/// Header `phi,re,im`.
void write_curve_csv(std::ostream& out, const std::vector<CurvePoint>& curve);
/// Header `k,member_id,alpha,beta,estimated_radius,closed_form_radius,holds`.
void write_conjecture_csv(std::ostream& out, const std::vector<ConjectureRow>& rows);

}  // namespace gft::io
