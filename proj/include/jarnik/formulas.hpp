#pragma once

// Closed-form Hausdorff dimensions of the non-Diophantine sets.

#include <array>
#include <span>

#include "jarnik/exact.hpp"

namespace jarnik::formulas {

/// Root space dimensions (g_-2a, g_-a, g_0, g_a, g_2a).
struct RootDims {
  int g_minus_2alpha = 0;
  int g_minus_alpha = 0;
  int g_0 = 0;
  int g_alpha = 0;
  int g_2alpha = 0;

  int total() const { return g_minus_2alpha + g_minus_alpha + g_0 + g_alpha + g_2alpha; }
};

RootDims root_dims(std::span<const int> dims);  // exactly five nonnegative entries

Rational rank_one_dimension(const Rational& gamma, const Rational& alpha, const RootDims& dims);
double rank_one_dimension(double gamma, double alpha, const RootDims& dims);

Rational multi_cusp_dimension(std::span<const Rational> gammas, const Rational& alpha, const RootDims& dims);
double multi_cusp_dimension(std::span<const double> gammas, double alpha, const RootDims& dims);

/// (gamma + 1) / gamma * n - 1.
Rational heisenberg_dimension(const Rational& gamma, int n);
double heisenberg_dimension(double gamma, int n);

/// Homogeneous exponents matching a classical real exponent on SL(2,R) and a Cygan exponent on SU(2,1).
Rational sl2_homogeneous_gamma(const Rational& gamma_classical);  // 2(g - 1)/(g + 1)
Rational su21_homogeneous_gamma(const Rational& gamma_cygan);     // 2 - 2/g

inline constexpr RootDims kSl2Dims{0, 1, 1, 1, 0};
inline constexpr RootDims kSu21FiberDims{0, 0, 0, 2, 1};

}  // namespace jarnik::formulas
