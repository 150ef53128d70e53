#include "jarnik/formulas.hpp"

#include <algorithm>
#include <cmath>

#include "jarnik/errors.hpp"

namespace jarnik::formulas {

namespace {

void check_dims(const RootDims& d) {
  require(d.g_minus_2alpha >= 0 && d.g_minus_alpha >= 0 && d.g_0 >= 0 && d.g_alpha >= 0 && d.g_2alpha >= 0,
          "root space dimensions must be nonnegative");
}

template <class T>
T rank_one(const T& gamma, const T& alpha, const RootDims& d) {
  check_dims(d);
  require(alpha > 0, "alpha must be positive");
  require(gamma >= 0, "gamma must be >= 0");
  if (d.g_2alpha == 0) {
    require(gamma < alpha, "gamma must be < alpha when g_2alpha = 0");
    return T(d.g_minus_alpha + d.g_0) + (alpha - gamma) / alpha * T(d.g_alpha);
  }
  require(gamma < 2 * alpha, "gamma must be < 2 alpha");
  const T four = 4, two = 2;
  return T(d.g_minus_2alpha + d.g_minus_alpha + d.g_0) + (four * alpha - gamma) / (four * alpha) * T(d.g_alpha) +
         (two * alpha - gamma) / (two * alpha) * T(d.g_2alpha);
}

}  // namespace

RootDims root_dims(std::span<const int> dims) {
  require(dims.size() == 5, "root space dimensions need five entries");
  RootDims d{dims[0], dims[1], dims[2], dims[3], dims[4]};
  check_dims(d);
  return d;
}

Rational rank_one_dimension(const Rational& gamma, const Rational& alpha, const RootDims& dims) {
  Rational out = rank_one<Rational>(gamma, alpha, dims);
  out.canonicalize();
  return out;
}

double rank_one_dimension(double gamma, double alpha, const RootDims& dims) {
  require(std::isfinite(gamma) && std::isfinite(alpha), "parameters must be finite");
  return rank_one<double>(gamma, alpha, dims);
}

Rational multi_cusp_dimension(std::span<const Rational> gammas, const Rational& alpha, const RootDims& dims) {
  require(!gammas.empty(), "gamma list must be nonempty");
  for (const Rational& g : gammas) rank_one_dimension(g, alpha, dims);
  return rank_one_dimension(*std::min_element(gammas.begin(), gammas.end()), alpha, dims);
}

double multi_cusp_dimension(std::span<const double> gammas, double alpha, const RootDims& dims) {
  require(!gammas.empty(), "gamma list must be nonempty");
  for (double g : gammas) rank_one_dimension(g, alpha, dims);
  return rank_one_dimension(*std::min_element(gammas.begin(), gammas.end()), alpha, dims);
}

Rational heisenberg_dimension(const Rational& gamma, int n) {
  require(gamma >= 1, "gamma must be >= 1");
  require(n >= 2, "n must be >= 2");
  Rational out = (gamma + 1) / gamma * n - 1;
  out.canonicalize();
  return out;
}

double heisenberg_dimension(double gamma, int n) {
  require(std::isfinite(gamma) && gamma >= 1.0, "gamma must be >= 1");
  require(n >= 2, "n must be >= 2");
  return (gamma + 1.0) / gamma * n - 1.0;
}

Rational sl2_homogeneous_gamma(const Rational& gamma_classical) {
  require(gamma_classical >= 1, "classical exponent must be >= 1");
  Rational out = 2 * (gamma_classical - 1) / (gamma_classical + 1);
  out.canonicalize();
  return out;
}

Rational su21_homogeneous_gamma(const Rational& gamma_cygan) {
  require(gamma_cygan >= 1, "Cygan exponent must be >= 1");
  Rational out = 2 - 2 / gamma_cygan;
  out.canonicalize();
  return out;
}

}  // namespace jarnik::formulas
