#pragma once

// Heisenberg group H_{2n-1}(R) = C^{n-1} x R with the twisted group law
//   (z, v)(z', v') = (z + z', v + v' + 2 Im<z, z'>),   Im<z, z'> = sum_k Im(z_k conj(z'_k)),
// the Cygan gauge |(z, v)| = (|z|^4 + v^2)^{1/4} and the reference right-invariant
// distance (sup-norm of the exponential coordinates of p q^{-1}).
//
// Points are templated on the scalar: double for gauges and fits, Rational for exact
// group-law identities.

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "jarnik/errors.hpp"
#include "jarnik/exact.hpp"

namespace jarnik::heisenberg {

namespace detail {
inline bool finite(double x) { return std::isfinite(x); }
inline bool finite(const Rational&) { return true; }
inline double abs_value(double x) { return std::fabs(x); }
inline Rational abs_value(const Rational& x) { return abs(x); }
}  // namespace detail

template <class T>
class BasicPoint {
 public:
  /// `horizontal` interleaves real and imaginary parts: re_0, im_0, re_1, im_1, ...
  BasicPoint(std::vector<T> horizontal, T vertical)
      : h_(std::move(horizontal)), v_(std::move(vertical)) {
    require(!h_.empty() && h_.size() % 2 == 0,
            "Heisenberg point needs n >= 2 (a nonempty complex horizontal part)");
    for (const T& x : h_) require(detail::finite(x), "Heisenberg point has a non-finite coordinate");
    require(detail::finite(v_), "Heisenberg point has a non-finite coordinate");
  }

  static BasicPoint identity(int n) {
    require(n >= 2, "Heisenberg group needs n >= 2");
    return BasicPoint(std::vector<T>(2 * static_cast<std::size_t>(n - 1), T(0)), T(0));
  }

  /// Builds a point from its 2n-1 real coordinates (horizontal parts first, vertical last).
  static BasicPoint from_coords(const std::vector<T>& coords) {
    require(coords.size() >= 3 && coords.size() % 2 == 1,
            "Heisenberg coordinates must have odd length 2n-1 with n >= 2");
    return BasicPoint(std::vector<T>(coords.begin(), coords.end() - 1), coords.back());
  }

  int n() const { return static_cast<int>(h_.size() / 2) + 1; }
  std::size_t horizontal_size() const { return h_.size(); }
  const std::vector<T>& horizontal() const { return h_; }
  const T& vertical() const { return v_; }
  const T& re(std::size_t k) const { return h_[2 * k]; }
  const T& im(std::size_t k) const { return h_[2 * k + 1]; }

  std::vector<T> coords() const {
    std::vector<T> out(h_);
    out.push_back(v_);
    return out;
  }

  friend bool operator==(const BasicPoint& a, const BasicPoint& b) {
    return a.h_ == b.h_ && a.v_ == b.v_;
  }

 private:
  std::vector<T> h_;
  T v_;
};

using HeisenbergPoint = BasicPoint<double>;
using ExactHeisenbergPoint = BasicPoint<Rational>;

/// n = 2 convenience: one complex horizontal coordinate.
inline HeisenbergPoint make_point(std::complex<double> zeta, double v) {
  return HeisenbergPoint({zeta.real(), zeta.imag()}, v);
}

struct Gauge {
  double value = 0.0;
};

template <class T>
void require_composable(const BasicPoint<T>& p, const BasicPoint<T>& q) {
  require(p.n() == q.n(), "Heisenberg points of different dimension (n = " + std::to_string(p.n()) +
                              " vs " + std::to_string(q.n()) + ")");
}

/// Im<a, b> = sum_k Im(a_k conj(b_k)) on interleaved (re, im) storage.
template <class T>
T im_inner(const std::vector<T>& a, const std::vector<T>& b) {
  T acc(0);
  for (std::size_t k = 0; k + 1 < a.size(); k += 2) acc += a[k + 1] * b[k] - a[k] * b[k + 1];
  return acc;
}

template <class T>
BasicPoint<T> hmul(const BasicPoint<T>& p, const BasicPoint<T>& q) {
  require_composable(p, q);
  std::vector<T> h(p.horizontal());
  for (std::size_t k = 0; k < h.size(); ++k) h[k] += q.horizontal()[k];
  T v = p.vertical() + q.vertical() + T(2) * im_inner(p.horizontal(), q.horizontal());
  return BasicPoint<T>(std::move(h), std::move(v));
}

template <class T>
BasicPoint<T> hinv(const BasicPoint<T>& p) {
  std::vector<T> h(p.horizontal());
  for (T& x : h) x = -x;
  return BasicPoint<T>(std::move(h), T(-p.vertical()));
}

/// Coordinates of p q^{-1}. The vertical part is evaluated as
/// v_p - v_q - 2 Im<z_p - z_q, z_q>, which equals the group law but keeps precision
/// when p and q are close.
template <class T>
BasicPoint<T> right_difference(const BasicPoint<T>& p, const BasicPoint<T>& q) {
  require_composable(p, q);
  std::vector<T> u(p.horizontal());
  for (std::size_t k = 0; k < u.size(); ++k) u[k] -= q.horizontal()[k];
  T w = p.vertical() - q.vertical() - T(2) * im_inner(u, q.horizontal());
  return BasicPoint<T>(std::move(u), std::move(w));
}

/// |z|^4 + v^2, exact for rational points.
template <class T>
T gauge_fourth_power(const BasicPoint<T>& p) {
  T z2(0);
  for (const T& x : p.horizontal()) z2 += x * x;
  return z2 * z2 + p.vertical() * p.vertical();
}

Gauge cygan_gauge(const HeisenbergPoint& p);
Gauge cygan_gauge(const ExactHeisenbergPoint& p);

/// d_Cyg(p, q) = |p q^{-1}|.
double cygan_dist(const HeisenbergPoint& p, const HeisenbergPoint& q);

/// (e^s z, e^{2s} v).
HeisenbergPoint dilate(const HeisenbergPoint& p, double s);

/// Sup-norm of the coordinates of p q^{-1}.
template <class T>
T riem_dist(const BasicPoint<T>& p, const BasicPoint<T>& q) {
  BasicPoint<T> d = right_difference(p, q);
  T best = detail::abs_value(d.vertical());
  for (const T& x : d.horizontal()) {
    T a = detail::abs_value(x);
    if (a > best) best = a;
  }
  return best;
}

HeisenbergPoint to_double(const ExactHeisenbergPoint& p);

}  // namespace jarnik::heisenberg
