#include "jarnik/fit.hpp"

#include <cmath>

#include "jarnik/errors.hpp"

namespace jarnik {

DimensionFit least_squares(std::span<const double> xs, std::span<const double> ys) {
  require(xs.size() == ys.size(), "least_squares: length mismatch");
  require(xs.size() >= 2, "least_squares: need at least two samples");
  const double n = static_cast<double>(xs.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  require(sxx > 0.0, "least_squares: abscissae are all equal");
  DimensionFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ss = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double r = ys[i] - (fit.intercept + fit.slope * xs[i]);
    ss += r * r;
  }
  fit.residual = std::sqrt(ss / n);
  fit.range.assign(xs.begin(), xs.end());
  return fit;
}

}  // namespace jarnik
