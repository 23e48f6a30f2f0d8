#include "atlas/grid.hpp"

#include <numbers>

#include "atlas/error.hpp"

namespace atlas {

Grid Grid::uniform(int nr, int na, double r_max) {
  if (nr < 1 || na < 1 || !(r_max > 0.0 && r_max < 1.0)) {
    throw Error(Errc::Config, "grid needs at least one radius and angle and 0 < r_max < 1");
  }
  Grid g;
  g.angles_count = na;
  g.r_max = r_max;
  for (int k = 1; k <= nr; ++k) g.radii.push_back(r_max * k / nr);
  return g;
}

std::vector<std::complex<double>> Grid::points() const {
  std::vector<std::complex<double>> pts;
  pts.reserve(radii.size() * angles_count);
  for (double r : radii) {
    for (int j = 0; j < angles_count; ++j) pts.push_back(std::polar(r, 2.0 * std::numbers::pi * j / angles_count));
  }
  return pts;
}

}  // namespace atlas
