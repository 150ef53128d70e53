#pragma once

// Grid box counting and log-log dimension fits for finite point clouds.

#include <cstdint>
#include <vector>

#include "jarnik/fit.hpp"

namespace jarnik::boxdim {

enum class Metric { euclidean, heisenberg_right_invariant };

/// Row-major points of a fixed arity.
class PointCloud {
 public:
  PointCloud(std::size_t arity, std::vector<double> coords, Metric metric = Metric::euclidean);

  static PointCloud line(std::vector<double> xs);

  std::size_t arity() const { return arity_; }
  std::size_t size() const { return coords_.size() / arity_; }
  Metric metric() const { return metric_; }
  const std::vector<double>& coords() const { return coords_; }
  const double* point(std::size_t i) const { return coords_.data() + i * arity_; }

 private:
  std::size_t arity_;
  std::vector<double> coords_;
  Metric metric_;
};

/// Occupied cells of the origin-anchored grid of mesh eps.
std::uint64_t box_count(const PointCloud& cloud, double eps, unsigned threads = 1);

struct ScaleCount {
  double eps = 0.0;
  std::uint64_t count = 0;
  bool saturated = false;  // count >= 0.9 |cloud|
};

struct BoxDimensionFit {
  DimensionFit fit;
  std::vector<ScaleCount> scales;
  bool all_saturated = false;  // flagged result; fit holds NaN
  bool fitted = false;         // at least two unsaturated scales
};

/// Slope of log N(eps) against log(1/eps) over the unsaturated scales.
BoxDimensionFit fit_dimension(const PointCloud& cloud, std::vector<double> eps_values, unsigned threads = 1);

}  // namespace jarnik::boxdim
