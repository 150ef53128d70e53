#include "jarnik/modular_flow.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>

#include "jarnik/errors.hpp"

namespace jarnik::modular {

namespace {

using Vec = std::array<long double, 2>;
using Coef = std::array<std::int64_t, 2>;

long double dot(const Vec& a, const Vec& b) { return a[0] * b[0] + a[1] * b[1]; }

// Gauss-Lagrange reduction; vec maps integer coefficients to a lattice vector.
template <class F>
ShortestVector gauss_reduce(F vec) {
  Coef c1{1, 0}, c2{0, 1};
  Vec v1 = vec(c1), v2 = vec(c2);
  if (dot(v1, v1) > dot(v2, v2)) {
    std::swap(c1, c2);
    std::swap(v1, v2);
  }
  for (int iter = 0; iter < 4096; ++iter) {
    const long double n1 = dot(v1, v1);
    const long double mu = std::nearbyint(dot(v1, v2) / n1);
    if (!std::isfinite(mu) || std::fabs(mu) > 9e18L) throw ResourceLimit("lattice reduction overflow");
    if (mu != 0.0L) {
      const auto m = static_cast<std::int64_t>(mu);
      c2 = {c2[0] - m * c1[0], c2[1] - m * c1[1]};
      v2 = vec(c2);
    }
    if (dot(v2, v2) < n1) {
      std::swap(c1, c2);
      std::swap(v1, v2);
      continue;
    }
    break;
  }
  ShortestVector out;
  out.vector = v1;
  out.norm = static_cast<double>(std::sqrt(dot(v1, v1)));
  out.coefficients = c1;
  return out;
}

}  // namespace

PlanarLattice::PlanarLattice(long double a, long double b, long double c, long double d)
    : b1_{a, c}, b2_{b, d} {
  require(std::isfinite(a) && std::isfinite(b) && std::isfinite(c) && std::isfinite(d),
          "lattice entries must be finite");
  require(std::fabs(det() - 1.0L) <= kDetTolerance, "lattice must be unimodular (|det - 1| <= 1e-9)");
}

PlanarLattice PlanarLattice::flowed(long double t) const {
  const long double e = std::exp(t), ei = std::exp(-t);
  return PlanarLattice(e * b1_[0], e * b2_[0], ei * b1_[1], ei * b2_[1]);
}

PlanarLattice horocycle_lattice(long double x) { return PlanarLattice(1.0L, x, 0.0L, 1.0L); }

ShortestVector shortest_vector(const PlanarLattice& lattice) {
  const Vec b1 = lattice.b1(), b2 = lattice.b2();
  return gauss_reduce([&](const Coef& c) {
    const auto m = static_cast<long double>(c[0]), n = static_cast<long double>(c[1]);
    return Vec{m * b1[0] + n * b2[0], m * b1[1] + n * b2[1]};
  });
}

double flow_shortest(long double x, double t) {
  require(std::isfinite(x) && std::isfinite(t), "flow parameters must be finite");
  const long double e = std::exp(static_cast<long double>(t));
  const long double ei = std::exp(-static_cast<long double>(t));
  return gauss_reduce([&](const Coef& c) {
           const auto m = static_cast<long double>(c[0]), n = static_cast<long double>(c[1]);
           return Vec{e * std::fma(n, x, m), ei * n};
         })
      .norm;
}

ExcursionProfile excursion_profile(long double x, double T, double dt, unsigned threads) {
  require(std::isfinite(T) && T >= 0.0, "horizon T must be finite and non-negative");
  require(std::isfinite(dt) && dt > 0.0, "step dt must be positive");
  const double steps = std::floor(T / dt + 1e-9);
  require(steps < 1e8, "too many profile samples");
  const auto count = static_cast<std::size_t>(steps) + 1;
  ExcursionProfile out;
  out.x = x;
  out.times.resize(count);
  out.shortvec.resize(count);
  auto work = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t k = lo; k < hi; ++k) {
      out.times[k] = static_cast<double>(k) * dt;
      out.shortvec[k] = flow_shortest(x, out.times[k]);
    }
  };
  const std::size_t nthreads = std::clamp<std::size_t>(threads, 1, count);
  if (nthreads == 1) {
    work(0, count);
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (count + nthreads - 1) / nthreads;
    for (std::size_t lo = 0; lo < count; lo += chunk) pool.emplace_back(work, lo, std::min(count, lo + chunk));
    for (auto& th : pool) th.join();
  }
  return out;
}

namespace {

ProfileMinimum golden_section(long double x, double a, double b) {
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - g * (b - a), d = a + g * (b - a);
  double fc = flow_shortest(x, c), fd = flow_shortest(x, d);
  for (int iter = 0; iter < 200 && b - a > 1e-10; ++iter) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - g * (b - a);
      fc = flow_shortest(x, c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + g * (b - a);
      fd = flow_shortest(x, d);
    }
  }
  const double t = (a + b) / 2.0;
  return {t, flow_shortest(x, t), true};
}

}  // namespace

std::vector<ProfileMinimum> local_minima(const ExcursionProfile& profile, bool refine) {
  const auto& d = profile.shortvec;
  const auto& t = profile.times;
  std::vector<ProfileMinimum> out;
  const std::size_t n = d.size();
  for (std::size_t k = 1; k + 1 < n; ++k) {
    if (d[k] <= d[k - 1] && d[k] < d[k + 1]) {
      ProfileMinimum m{t[k], d[k], true};
      if (refine) {
        const ProfileMinimum r = golden_section(profile.x, t[k - 1], t[k + 1]);
        if (r.d <= m.d) m = r;
      }
      out.push_back(m);
    }
  }
  if (n >= 2 && d[n - 1] < d[n - 2]) out.push_back({t[n - 1], d[n - 1], false});
  return out;
}

CfExpansion cf_expansion(const Rational& x, std::size_t k) {
  CfExpansion out;
  Rational r = x;
  while (out.quotients.size() < k) {
    const BigInt a = floor(r);
    out.quotients.push_back(a);
    Rational frac = r - Rational(a);
    if (frac == 0) {
      out.terminated = out.quotients.size() < k;
      break;
    }
    r = 1 / frac;
  }
  return out;
}

CfExpansion cf_expansion(long double x, std::size_t k) { return cf_expansion(exact_from_long_double(x), k); }

std::vector<std::pair<BigInt, BigInt>> convergents(const std::vector<BigInt>& quotients) {
  std::vector<std::pair<BigInt, BigInt>> out;
  BigInt p_prev = 1, q_prev = 0, p = 0, q = 1;
  bool first = true;
  for (const BigInt& a : quotients) {
    if (first) {
      p = a;
      q = 1;
      p_prev = 1;
      q_prev = 0;
      first = false;
    } else {
      BigInt pn = a * p + p_prev, qn = a * q + q_prev;
      p_prev = p;
      q_prev = q;
      p = pn;
      q = qn;
    }
    out.emplace_back(p, q);
  }
  return out;
}

double convergent_minimum_time(long double x, const BigInt& p, const BigInt& q) {
  require(q > 0, "denominator must be positive");
  const Rational gap = abs(Rational(q) * exact_from_long_double(x) - Rational(p));
  require(gap > 0, "x equals the convergent");
  return 0.5 * (std::log(to_double(Rational(q))) - std::log(to_double(gap)));
}

ExponentEstimate excursion_exponent(long double x, double T, double dt) {
  require(std::isfinite(T) && T > 0.0, "horizon T must be positive");
  const ExcursionProfile profile = excursion_profile(x, T, dt);
  const auto minima = local_minima(profile, true);
  std::vector<ProfileMinimum> tail;
  for (const auto& m : minima)
    if (m.t >= T / 2.0 && m.t > 0.0) tail.push_back(m);
  ExponentEstimate out;
  out.T = T;
  out.minima_used = tail.size();
  out.low_confidence = tail.size() < 3;
  std::vector<ProfileMinimum> candidates = tail;
  if (candidates.empty())
    for (const auto& m : minima)
      if (m.t > 0.0) candidates.push_back(m);
  if (candidates.empty()) candidates.push_back({profile.times.back(), profile.shortvec.back(), false});
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& m : candidates)
    if (m.t > 0.0) best = std::max(best, -std::log(m.d) / m.t);
  out.estimate = std::isfinite(best) ? best : 0.0;
  return out;
}

ClassicalDimensions jb_classical_dimension(const Rational& gamma) {
  require(gamma >= 1, "gamma must be at least 1");
  Rational real = Rational(2) / (1 + gamma);
  real.canonicalize();
  return {real, Rational(2 + real)};
}

std::pair<double, double> jb_classical_dimension(double gamma) {
  require(std::isfinite(gamma) && gamma >= 1.0, "gamma must be finite and at least 1");
  const double real = 2.0 / (1.0 + gamma);
  return {real, 2.0 + real};
}

}  // namespace jarnik::modular
