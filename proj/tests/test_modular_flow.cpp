#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "jarnik/errors.hpp"
#include "jarnik/modular_flow.hpp"
#include "oracles.hpp"

using namespace jarnik;
using namespace jarnik::modular;

namespace {

// rotation * diag(s, 1/s) * shear
std::array<double, 4> random_unimodular(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> ang(0.0, 2.0 * std::numbers::pi), logs(-1.2, 1.2), sh(-3.0, 3.0);
  const double a = ang(rng), s = std::exp(logs(rng)), x = sh(rng);
  const double c = std::cos(a), d = std::sin(a);
  // [[c, -d], [d, c]] [[s, 0], [0, 1/s]] [[1, x], [0, 1]]
  return {c * s, c * s * x - d / s, d * s, d * s * x + c / s};
}

const long double kGolden = (1.0L + std::sqrt(5.0L)) / 2.0L;

}  // namespace

TEST_CASE("shortest vectors of simple lattices") {
  CHECK(shortest_vector(PlanarLattice(1, 0, 0, 1)).norm == doctest::Approx(1.0));
  CHECK(shortest_vector(PlanarLattice(2, 0, 0, 0.5L)).norm == doctest::Approx(0.5));
  CHECK_THROWS_AS(PlanarLattice(2, 0, 0, 1), InvalidInput);
  CHECK_THROWS_AS(PlanarLattice(1, 0, 0, 1.0L + 1e-8L), InvalidInput);
}

TEST_CASE("reduction agrees with brute force on random lattices") {
  std::mt19937_64 rng(2024);
  int certified = 0;
  for (int i = 0; i < 200; ++i) {
    const auto m = random_unimodular(rng);
    const PlanarLattice L(m[0], m[1], m[2], m[3]);
    const auto sv = shortest_vector(L);
    // Cramer bound on the coefficients of any vector no longer than the reduced one.
    const double bound = sv.norm * std::max(std::hypot(m[0], m[2]), std::hypot(m[1], m[3])) / std::fabs(static_cast<double>(L.det()));
    if (bound > 50.0) continue;
    ++certified;
    CHECK(std::fabs(sv.norm - oracle::brute_shortest(m, 50)) <= 1e-9);
    const auto c = sv.coefficients;
    CHECK(std::hypot(c[0] * m[0] + c[1] * m[1], c[0] * m[2] + c[1] * m[3]) == doctest::Approx(sv.norm).epsilon(1e-12));
  }
  CHECK(certified == 200);
}

TEST_CASE("profile at x = 0 is e^-t") {
  const auto p = excursion_profile(0.0L, 10.0, 0.01);
  REQUIRE(p.times.size() == 1001);
  for (std::size_t k = 0; k < p.times.size(); ++k) CHECK(std::fabs(p.shortvec[k] - std::exp(-p.times[k])) <= 1e-9);
}

TEST_CASE("golden ratio profile stays bounded away from zero") {
  const auto a = excursion_profile(kGolden, 20.0, 0.01);
  const auto b = excursion_profile(kGolden, 20.0, 0.005);
  const double ma = *std::min_element(a.shortvec.begin(), a.shortvec.end());
  const double mb = *std::min_element(b.shortvec.begin(), b.shortvec.end());
  CHECK(ma > 0.5);
  CHECK(std::fabs(ma - mb) < 1e-3);
  CHECK(excursion_profile(kGolden, 20.0, 0.01, 4).shortvec == a.shortvec);
}

TEST_CASE("rational x diverges") {
  const auto p = excursion_profile(0.5L, 30.0, 0.01);
  for (std::size_t k = 1; k < p.times.size(); ++k)
    if (p.times[k - 1] > std::log(2.0)) CHECK(p.shortvec[k] < p.shortvec[k - 1]);
  CHECK(p.shortvec.back() < 1e-12);
}

TEST_CASE("flow composition and symmetry") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 1.0), tt(0.0, 5.0);
  for (int i = 0; i < 100; ++i) {
    const long double x = u(rng);
    const double t = tt(rng), s = tt(rng);
    const double direct = flow_shortest(x, t + s);
    const double composed = shortest_vector(horocycle_lattice(x).flowed(t).flowed(s)).norm;
    CHECK(std::fabs(direct - composed) <= 1e-9);
    CHECK(std::fabs(flow_shortest(x, t) - flow_shortest(-x, t)) <= 1e-12);
  }
}

TEST_CASE("continued fractions") {
  const auto g = cf_expansion(kGolden, 30);
  CHECK(!g.terminated);
  for (const auto& a : g.quotients) CHECK(a == 1);
  const auto r = cf_expansion(Rational(7, 3), 5);
  CHECK(r.terminated);
  CHECK(r.quotients == std::vector<BigInt>{2, 3});
  const auto pi = cf_expansion(std::numbers::pi_v<long double>, 4);
  CHECK(pi.quotients == std::vector<BigInt>{3, 7, 15, 1});
  const auto conv = convergents(pi.quotients);
  CHECK(conv.back() == std::make_pair(BigInt(355), BigInt(113)));
  CHECK(cf_expansion(Rational(-7, 3), 5).quotients == std::vector<BigInt>{-3, 1, 2});
}

TEST_CASE("profile minima sit at the convergent times") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double dt = 0.01;
  int checked = 0, literal = 0;
  for (int i = 0; i < 20; ++i) {
    const long double x = u(rng);
    const auto conv = convergents(cf_expansion(x, 40).quotients);
    const auto profile = excursion_profile(x, std::log(1e4) + 6.0, dt);
    const auto minima = local_minima(profile, true);
    for (const auto& [p, q] : conv) {
      if (q < 2 || q > 10000) continue;
      const double t = convergent_minimum_time(x, p, q);
      const double own = std::sqrt(2.0 * q.get_d() * std::fabs(static_cast<double>(q.get_d() * x - p.get_d())));
      if (std::fabs(flow_shortest(x, t) - own) > 1e-9 * own) continue;  // another vector is shorter there
      ++checked;
      const bool near = std::any_of(minima.begin(), minima.end(),
                                    [&](const ProfileMinimum& m) { return m.interior && std::fabs(m.t - t) <= dt; });
      CHECK(near);
      if (std::any_of(minima.begin(), minima.end(),
                      [&](const ProfileMinimum& m) { return std::fabs(m.t - std::log(q.get_d())) <= dt; }))
        ++literal;
    }
  }
  CHECK(checked > 40);
  MESSAGE("minima within dt of log q_k: " << literal << " of " << checked);
}

TEST_CASE("excursion exponent proxy") {
  const double g10 = excursion_exponent(kGolden, 10.0).estimate;
  const double g20 = excursion_exponent(kGolden, 20.0).estimate;
  CHECK(g20 < g10);
  CHECK(g20 < 0.01);
  CHECK(!excursion_exponent(kGolden, 20.0).low_confidence);
  const auto half = excursion_exponent(0.5L, 40.0);
  CHECK(half.estimate == doctest::Approx(1.0 - std::log(2.0) / 40.0).epsilon(1e-6));
  CHECK(half.low_confidence);
  const long double liouville = 0.1L + 0.01L + 0.000001L;
  MESSAGE("truncated Liouville estimate at T = 20: " << excursion_exponent(liouville, 20.0).estimate);
}

TEST_CASE("classical Jarnik-Besicovitch values") {
  const auto one = jb_classical_dimension(Rational(1));
  CHECK(one.real_line == 1);
  CHECK(one.homogeneous == 3);
  const auto three = jb_classical_dimension(Rational(3));
  CHECK(three.real_line == Rational(1, 2));
  CHECK(three.homogeneous == Rational(5, 2));
  const auto far = jb_classical_dimension(1e12);
  CHECK(far.first == doctest::Approx(0.0));
  CHECK(far.second == doctest::Approx(2.0));
  CHECK_THROWS_AS(jb_classical_dimension(Rational(1, 2)), InvalidInput);
}
