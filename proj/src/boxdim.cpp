#include "jarnik/boxdim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>

#include "jarnik/errors.hpp"

namespace jarnik::boxdim {

PointCloud::PointCloud(std::size_t arity, std::vector<double> coords, Metric metric)
    : arity_(arity), coords_(std::move(coords)), metric_(metric) {
  require(arity_ >= 1, "point arity must be positive");
  require(!coords_.empty() && coords_.size() % arity_ == 0, "point cloud must be nonempty with consistent arity");
  require(metric_ == Metric::euclidean || (arity_ >= 3 && arity_ % 2 == 1),
          "Heisenberg clouds need 2n-1 coordinates");
  for (double x : coords_) require(std::isfinite(x), "point coordinates must be finite");
}

PointCloud PointCloud::line(std::vector<double> xs) { return PointCloud(1, std::move(xs)); }

std::uint64_t box_count(const PointCloud& cloud, double eps, unsigned threads) {
  require(std::isfinite(eps) && eps > 0.0, "eps must be positive");
  const std::size_t n = cloud.size(), d = cloud.arity();
  std::vector<std::int64_t> cells(n * d);
  auto work = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i)
      for (std::size_t k = 0; k < d; ++k) {
        const double c = std::floor(cloud.point(i)[k] / eps);
        if (!(std::fabs(c) < 9e18)) throw InvalidInput("eps too small for the coordinate range");
        cells[i * d + k] = static_cast<std::int64_t>(c);
      }
  };
  const std::size_t nthreads = std::clamp<std::size_t>(threads, 1, n);
  if (nthreads == 1) {
    work(0, n);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(nthreads);
    const std::size_t chunk = (n + nthreads - 1) / nthreads;
    for (std::size_t t = 0; t * chunk < n; ++t)
      pool.emplace_back([&, t] {
        try {
          work(t * chunk, std::min(n, (t + 1) * chunk));
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    for (auto& th : pool) th.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  auto less = [&](std::size_t a, std::size_t b) {
    return std::lexicographical_compare(cells.begin() + a * d, cells.begin() + (a + 1) * d, cells.begin() + b * d,
                                        cells.begin() + (b + 1) * d);
  };
  std::sort(order.begin(), order.end(), less);
  std::uint64_t count = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (i == 0 || less(order[i - 1], order[i])) ++count;
  return count;
}

BoxDimensionFit fit_dimension(const PointCloud& cloud, std::vector<double> eps_values, unsigned threads) {
  require(eps_values.size() >= 3, "need at least three scales");
  for (double e : eps_values) require(std::isfinite(e) && e > 0.0, "scales must be positive");
  std::sort(eps_values.begin(), eps_values.end(), std::greater<>());
  eps_values.erase(std::unique(eps_values.begin(), eps_values.end()), eps_values.end());
  require(eps_values.size() >= 3, "need at least three distinct scales");
  require(eps_values.front() / eps_values.back() >= 4.0 * (1.0 - 1e-12), "scales must span at least two octaves");

  BoxDimensionFit out;
  std::vector<double> xs, ys;
  const double cap = 0.9 * static_cast<double>(cloud.size());
  for (double e : eps_values) {
    ScaleCount s{e, box_count(cloud, e, threads), false};
    s.saturated = static_cast<double>(s.count) >= cap;
    if (!s.saturated) {
      xs.push_back(std::log(1.0 / e));
      ys.push_back(std::log(static_cast<double>(s.count)));
    }
    out.scales.push_back(s);
  }
  if (xs.size() >= 2) {
    out.fit = least_squares(xs, ys);
    out.fitted = true;
  } else {
    out.all_saturated = xs.empty();
    const double nan = std::numeric_limits<double>::quiet_NaN();
    out.fit = DimensionFit{nan, nan, nan, xs};
  }
  return out;
}

}  // namespace jarnik::boxdim
