#include <cmath>
#include <fstream>
#include <stdexcept>

#include "gft/io.hpp"

namespace gft::io {

TaylorSeries series_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j.at("coeffs").is_array()) {
    throw std::invalid_argument("series JSON must be an object with a \"coeffs\" array");
  }
  std::vector<Complex> coeffs;
  for (const auto& entry : j.at("coeffs")) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() || !entry[1].is_number()) {
      throw std::invalid_argument("series coefficient must be a [re, im] pair of numbers");
    }
    const double re = entry[0].get<double>();
    const double im = entry[1].get<double>();
    if (!std::isfinite(re) || !std::isfinite(im)) throw std::invalid_argument("series coefficient is not finite");
    coeffs.emplace_back(re, im);
  }
  return TaylorSeries{std::move(coeffs)};
}

nlohmann::json series_to_json(const TaylorSeries& f) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Complex& c : f.coeffs()) arr.push_back({c.real(), c.imag()});
  return {{"coeffs", std::move(arr)}};
}

TaylorSeries read_series(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open series file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("series file '" + path + "' is not valid JSON: " + e.what());
  }
  return series_from_json(j);
}

void write_series(const std::string& path, const TaylorSeries& f) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write series file '" + path + "'");
  out << series_to_json(f).dump() << '\n';
}

}  // namespace gft::io
