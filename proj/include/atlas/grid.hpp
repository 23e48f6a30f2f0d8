#pragma once

#include <complex>
#include <vector>

namespace atlas {

/// Polar sampling grid on the disk: every radius combined with
/// `angles_count` equally spaced angles starting at 0. The origin is never
/// sampled.
struct Grid {
  std::vector<double> radii;
  int angles_count = 256;
  double r_max = 0.999;

  /// `nr` radii r_max*k/nr for k = 1..nr.
  static Grid uniform(int nr = 64, int na = 256, double r_max = 0.999);

  std::vector<std::complex<double>> points() const;
};

}  // namespace atlas
