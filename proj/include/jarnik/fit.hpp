#pragma once

#include <span>
#include <vector>

namespace jarnik {

/// Least-squares line through (log-abscissa, log-ordinate) samples.
struct DimensionFit {
  double slope = 0.0;
  double intercept = 0.0;
  double residual = 0.0;       // RMS of the regression residuals
  std::vector<double> range;   // abscissa values used by the fit
};

/// Ordinary least squares of ys on xs. Needs at least two distinct abscissae.
DimensionFit least_squares(std::span<const double> xs, std::span<const double> ys);

}  // namespace jarnik
