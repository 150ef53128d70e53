#include "jarnik/heisenberg.hpp"

namespace jarnik::heisenberg {

Gauge cygan_gauge(const HeisenbergPoint& p) {
  double z2 = 0.0;
  for (double x : p.horizontal()) z2 += x * x;
  // (z2^2 + v^2)^{1/4} = sqrt(hypot(z2, v)), which avoids overflow in the fourth power.
  return Gauge{std::sqrt(std::hypot(z2, p.vertical()))};
}

Gauge cygan_gauge(const ExactHeisenbergPoint& p) {
  return Gauge{std::sqrt(std::sqrt(gauge_fourth_power(p).get_d()))};
}

double cygan_dist(const HeisenbergPoint& p, const HeisenbergPoint& q) {
  return cygan_gauge(right_difference(p, q)).value;
}

HeisenbergPoint dilate(const HeisenbergPoint& p, double s) {
  const double a = std::exp(s);
  std::vector<double> h(p.horizontal());
  for (double& x : h) x *= a;
  return HeisenbergPoint(std::move(h), p.vertical() * a * a);
}

HeisenbergPoint to_double(const ExactHeisenbergPoint& p) {
  std::vector<double> h;
  h.reserve(p.horizontal_size());
  for (const Rational& x : p.horizontal()) h.push_back(x.get_d());
  return HeisenbergPoint(std::move(h), p.vertical().get_d());
}

}  // namespace jarnik::heisenberg
