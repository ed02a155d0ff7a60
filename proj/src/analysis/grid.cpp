#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gft/analysis.hpp"

namespace gft {

void GridSpec::validate() const {
  if (num_radii < 1) throw std::invalid_argument("grid needs at least one radius");
  if (num_angles < 8) throw std::invalid_argument("grid needs at least 8 angles");
  if (!(r_max > 0.0 && r_max < 1.0)) throw std::invalid_argument("grid r_max must lie in (0, 1)");
}

namespace {

void append_circle(SamplePoints& pts, double r, int num_angles) {
  for (int j = 0; j < num_angles; ++j) {
    const double theta = 2.0 * std::numbers::pi * j / num_angles;
    pts.re.push_back(r * std::cos(theta));
    pts.im.push_back(r * std::sin(theta));
  }
}

template <typename Better>
GridExtremum scan_re(const TaylorSeries& f, const GridSpec& grid, Better better) {
  grid.validate();
  const SamplePoints pts = grid_points(grid);
  const SampledValues values = sample(f, pts);
  std::size_t best = 0;
  for (std::size_t k = 1; k < pts.size(); ++k) {
    if (better(values.re[k], values.re[best])) best = k;
  }
  return {values.re[best], pts.at(best), best};
}

}  // namespace

SamplePoints grid_points(const GridSpec& grid) {
  grid.validate();
  SamplePoints pts;
  pts.re.reserve(grid.size());
  pts.im.reserve(grid.size());
  for (int i = 0; i < grid.num_radii; ++i) append_circle(pts, grid.radius(i), grid.num_angles);
  return pts;
}

SamplePoints circle_points(double r, int num_angles) {
  SamplePoints pts;
  pts.re.reserve(static_cast<std::size_t>(num_angles));
  pts.im.reserve(static_cast<std::size_t>(num_angles));
  append_circle(pts, r, num_angles);
  return pts;
}

SampledValues sample(const TaylorSeries& f, const SamplePoints& points) {
  SampledValues out;
  out.re.resize(points.size());
  out.im.resize(points.size());
  eval_many(f, points.re, points.im, out.re, out.im);
  return out;
}

GridExtremum min_re_on_grid(const TaylorSeries& f, const GridSpec& grid) {
  return scan_re(f, grid, [](double a, double b) { return a < b; });
}

GridExtremum max_re_on_grid(const TaylorSeries& f, const GridSpec& grid) {
  return scan_re(f, grid, [](double a, double b) { return a > b; });
}

}  // namespace gft
