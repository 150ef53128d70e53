#include <doctest.h>

#include <cmath>
#include <random>

#include "jarnik/boxdim.hpp"
#include "jarnik/errors.hpp"

using namespace jarnik;
using namespace jarnik::boxdim;

namespace {

// Midpoints of the 2^depth surviving intervals of the middle-thirds construction.
std::vector<double> cantor_midpoints(int depth) {
  std::vector<long> left{0};
  long scale = 1;
  for (int d = 0; d < depth; ++d) {
    std::vector<long> next;
    for (long a : left) {
      next.push_back(3 * a);
      next.push_back(3 * a + 2);
    }
    left = next;
    scale *= 3;
  }
  std::vector<double> xs;
  for (long a : left) xs.push_back((a + 0.5) / static_cast<double>(scale));
  return xs;
}

std::vector<double> segment(int n) {
  std::vector<double> xs;
  for (int i = 0; i < n; ++i) xs.push_back(static_cast<double>(i) / (n - 1));
  return xs;
}

std::vector<double> half_open_segment(int n) {
  std::vector<double> xs;
  for (int i = 0; i < n; ++i) xs.push_back(static_cast<double>(i) / n);
  return xs;
}

std::vector<double> geometric(double first, double ratio, int count) {
  std::vector<double> out;
  for (int i = 0; i < count; ++i) out.push_back(first * std::pow(ratio, i));
  return out;
}

}  // namespace

TEST_CASE("elementary counts") {
  const auto one = PointCloud::line({0.37});
  for (double e : {1e-6, 0.1, 5.0}) CHECK(box_count(one, e) == 1);
  const auto n = box_count(PointCloud::line(segment(1001)), 0.1);
  CHECK(n >= 10);
  CHECK(n <= 11);
  const auto heis = PointCloud(3, {0.1, 0.2, 0.3, 0.15, 0.25, 0.35, 0.9, 0.9, 0.9}, Metric::heisenberg_right_invariant);
  CHECK(box_count(heis, 0.5) == 2);
  CHECK(box_count(heis, 0.01) == 3);
}

TEST_CASE("self-similar Cantor counts") {
  const auto cloud = PointCloud::line(cantor_midpoints(8));
  for (int k = 0; k <= 8; ++k) CHECK(box_count(cloud, std::pow(3.0, -k)) == (1u << k));
}

TEST_CASE("known slopes") {
  const auto seg = fit_dimension(PointCloud::line(half_open_segment(10000)), geometric(0.25, 0.5, 7));
  REQUIRE(seg.fitted);
  CHECK(std::fabs(seg.fit.slope - 1.0) < 0.05);

  const auto cantor = fit_dimension(PointCloud::line(cantor_midpoints(8)), geometric(1.0 / 9, 1.0 / 3, 5));
  REQUIRE(cantor.fitted);
  CHECK(std::fabs(cantor.fit.slope - std::log(2.0) / std::log(3.0)) < 0.05);

  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> sq;
  for (int i = 0; i < 100000; ++i) {
    sq.push_back(u(rng));
    sq.push_back(u(rng));
  }
  const auto square = fit_dimension(PointCloud(2, sq), geometric(0.25, 0.5, 6));
  REQUIRE(square.fitted);
  CHECK(std::fabs(square.fit.slope - 2.0) < 0.08);
  MESSAGE("slopes " << seg.fit.slope << ", " << cantor.fit.slope << ", " << square.fit.slope);
}

TEST_CASE("count properties") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  std::vector<double> pts;
  for (int i = 0; i < 3000; ++i) pts.push_back(u(rng));
  const PointCloud cloud(3, pts, Metric::heisenberg_right_invariant);
  std::vector<double> scaled = pts, half(pts.begin(), pts.begin() + 1500);
  for (double& x : scaled) x *= 8.0;
  const PointCloud big(3, scaled), sub(3, half);
  std::uint64_t prev = 0;
  for (double e : geometric(2.0, 0.7, 15)) {
    const auto n = box_count(cloud, e);
    CHECK(n >= prev);
    prev = n;
    CHECK(box_count(big, 8.0 * e) == n);
    CHECK(box_count(sub, e) <= n);
    CHECK(box_count(cloud, e, 4) == n);
  }
}

TEST_CASE("saturation and preconditions") {
  const auto cloud = PointCloud::line(segment(50));
  const auto all = fit_dimension(cloud, {1e-3, 1e-4, 1e-5});
  CHECK(all.all_saturated);
  CHECK(!all.fitted);
  CHECK(std::isnan(all.fit.slope));
  for (const auto& s : all.scales) CHECK(s.saturated);
  const auto part = fit_dimension(cloud, {0.5, 0.25, 0.1, 1e-3});
  CHECK(part.fitted);
  CHECK(part.scales.back().saturated);
  CHECK(part.fit.range.size() == 3);
  CHECK_THROWS_AS(fit_dimension(cloud, {0.5, 0.25}), InvalidInput);
  CHECK_THROWS_AS(fit_dimension(cloud, {0.5, 0.4, 0.3}), InvalidInput);
  CHECK_THROWS_AS(box_count(cloud, 0.0), InvalidInput);
  CHECK_THROWS_AS(PointCloud(2, {1.0, 2.0}, Metric::heisenberg_right_invariant), InvalidInput);
  CHECK_THROWS_AS(PointCloud(2, {1.0, 2.0, 3.0}), InvalidInput);
  CHECK_THROWS_AS(PointCloud::line({NAN}), InvalidInput);
}
