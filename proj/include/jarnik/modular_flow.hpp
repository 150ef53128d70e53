#pragma once

// Diagonal flow a_t = diag(e^t, e^-t) on unimodular planar lattices, shortest vectors by
// Gauss-Lagrange reduction, excursion profiles d(a_t u_x Z^2) and continued fractions.

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "jarnik/exact.hpp"

namespace jarnik::modular {

/// Unimodular lattice spanned by the columns of a 2x2 real matrix.
class PlanarLattice {
 public:
  static constexpr double kDetTolerance = 1e-9;

  /// Matrix [[a, b], [c, d]]; the lattice is spanned by (a, c) and (b, d).
  PlanarLattice(long double a, long double b, long double c, long double d);

  const std::array<long double, 2>& b1() const { return b1_; }
  const std::array<long double, 2>& b2() const { return b2_; }
  long double det() const { return b1_[0] * b2_[1] - b2_[0] * b1_[1]; }

  /// a_t applied to the lattice.
  PlanarLattice flowed(long double t) const;

 private:
  std::array<long double, 2> b1_, b2_;
};

/// u_x Z^2 with u_x = [[1, x], [0, 1]].
PlanarLattice horocycle_lattice(long double x);

struct ShortestVector {
  std::array<long double, 2> vector{};
  double norm = 0.0;
  std::array<std::int64_t, 2> coefficients{};  // in the input basis
};

ShortestVector shortest_vector(const PlanarLattice& lattice);

/// d(a_t u_x Z^2), reducing in coefficient space so that m + n x is evaluated with one rounding.
double flow_shortest(long double x, double t);

struct ExcursionProfile {
  std::vector<double> times;
  std::vector<double> shortvec;
  long double x = 0.0L;
};

/// Samples d(a_t u_x Z^2) on t = 0, dt, ..., T (up to the last grid point <= T).
ExcursionProfile excursion_profile(long double x, double T, double dt, unsigned threads = 1);

struct ProfileMinimum {
  double t = 0.0;
  double d = 0.0;
  bool interior = true;  // false for the one-sided minimum at the horizon end
};

/// Grid local minima, optionally refined by golden-section search on the exact profile.
std::vector<ProfileMinimum> local_minima(const ExcursionProfile& profile, bool refine = true);

struct CfExpansion {
  std::vector<BigInt> quotients;
  bool terminated = false;  // the expansion ended before k terms
};

CfExpansion cf_expansion(const Rational& x, std::size_t k);
/// Expansion of the exact binary value of x.
CfExpansion cf_expansion(long double x, std::size_t k);

/// Convergents p_k / q_k of a partial-quotient list.
std::vector<std::pair<BigInt, BigInt>> convergents(const std::vector<BigInt>& quotients);

/// Time at which the lattice vector (q x - p, q) of u_x Z^2 is shortest under the flow:
/// t = log(q / |q x - p|) / 2.
double convergent_minimum_time(long double x, const BigInt& p, const BigInt& q);

struct ExponentEstimate {
  double estimate = 0.0;
  bool low_confidence = false;
  std::size_t minima_used = 0;
  double T = 0.0;
};

/// Finite-horizon excursion rate: max of -log d / t over profile minima in the tail t >= T/2.
/// Flagged low-confidence when the tail holds fewer than three minima.
ExponentEstimate excursion_exponent(long double x, double T, double dt = 0.01);

struct ClassicalDimensions {
  Rational real_line;    // 2 / (1 + gamma)
  Rational homogeneous;  // 2 + 2 / (1 + gamma)
};

ClassicalDimensions jb_classical_dimension(const Rational& gamma);
std::pair<double, double> jb_classical_dimension(double gamma);

}  // namespace jarnik::modular
