#pragma once

// Rational points of H_{2n-1}(Q) = Q[i]^{n-1} x Q, their heights (lcm of the
// coordinate denominators) and exact enumeration by height inside coordinate boxes.
//
// A point of height exactly h is (a_1/h, ..., a_d/h) with gcd(a_1, ..., a_d, h) = 1, and this
// representation is unique. Enumeration walks h and then the numerator box, which makes
// completeness easy to check against a naive denominator-tuple loop.

#include <cstdint>
#include <numeric>
#include <span>
#include <utility>
#include <vector>

#include "jarnik/errors.hpp"
#include "jarnik/exact.hpp"
#include "jarnik/fit.hpp"
#include "jarnik/heisenberg.hpp"

namespace jarnik::rational {

struct RationalPoint {
  std::vector<Rational> coords;  // horizontal (re, im interleaved), then vertical
  BigInt height;

  friend bool operator==(const RationalPoint& a, const RationalPoint& b) {
    return a.coords == b.coords;
  }
};

/// |lcm| of the reduced denominators.
BigInt height(std::span<const Rational> coords);

RationalPoint make_point(std::vector<Rational> coords);

/// Strict lexicographic order on coordinates.
bool lex_less(const RationalPoint& a, const RationalPoint& b);

heisenberg::HeisenbergPoint to_heisenberg(const RationalPoint& r);
heisenberg::ExactHeisenbergPoint to_exact_heisenberg(const RationalPoint& r);

/// Half-open coordinate box prod [lower_i, upper_i).
class EnumBox {
 public:
  EnumBox(std::vector<Rational> lower, std::vector<Rational> upper);

  static EnumBox cube(std::size_t dim, const Rational& lo, const Rational& hi);

  std::size_t dim() const { return lower_.size(); }
  const std::vector<Rational>& lower() const { return lower_; }
  const std::vector<Rational>& upper() const { return upper_; }
  Rational volume() const;
  bool contains(std::span<const Rational> coords) const;

 private:
  std::vector<Rational> lower_;
  std::vector<Rational> upper_;
};

/// Budget ceiling on estimated enumeration work; JARNIK_ENUM_BUDGET overrides the default.
double default_budget();

struct EnumOptions {
  unsigned threads = 1;
  double budget = default_budget();
};

/// Estimated work for enumerating heights in (h_lo, h_hi] inside `box`:
/// max(volume * h_hi^(dim+1), h_hi - h_lo).
double enumeration_cost(const EnumBox& box, std::int64_t h_lo, std::int64_t h_hi);

/// Throws ResourceLimit when the estimated cost exceeds the budget.
void check_budget(const EnumBox& box, std::int64_t h_lo, std::int64_t h_hi, double budget);

namespace detail {

/// ceil(q * h) for a fixed rational q, with an int128 fast path.
class ScaledCeil {
 public:
  explicit ScaledCeil(const Rational& q);
  std::int64_t operator()(std::int64_t h) const;

 private:
  bool fast_ = false;
  __int128 num_ = 0;
  __int128 den_ = 1;
  Rational q_;
};

}  // namespace detail

namespace detail {

template <class F>
void visit_numerators(std::size_t level, std::int64_t g, std::int64_t h,
                      const std::vector<std::int64_t>& first, const std::vector<std::int64_t>& last,
                      std::vector<std::int64_t>& nums, F& f) {
  const bool leaf = level + 1 == nums.size();
  for (std::int64_t a = first[level]; a <= last[level]; ++a) {
    nums[level] = a;
    const std::int64_t g2 = std::gcd(g, a);
    if (leaf) {
      if (g2 == 1) f(std::span<const std::int64_t>(nums), h);
    } else {
      visit_numerators(level + 1, g2, h, first, last, nums, f);
    }
  }
}

}  // namespace detail

/// Calls f(numerators, h) for every point with height h in (h_lo, h_hi] inside the box, in
/// increasing h and then lexicographic numerator order. `numerators` has box.dim() entries.
template <class F>
void for_each_point(const EnumBox& box, std::int64_t h_lo, std::int64_t h_hi, F&& f) {
  const std::size_t d = box.dim();
  std::vector<detail::ScaledCeil> lo, hi;
  lo.reserve(d);
  hi.reserve(d);
  for (std::size_t i = 0; i < d; ++i) {
    lo.emplace_back(box.lower()[i]);
    hi.emplace_back(box.upper()[i]);
  }
  std::vector<std::int64_t> first(d), last(d), nums(d);
  for (std::int64_t h = std::max<std::int64_t>(h_lo + 1, 1); h <= h_hi; ++h) {
    bool empty = false;
    for (std::size_t i = 0; i < d && !empty; ++i) {
      first[i] = lo[i](h);
      last[i] = hi[i](h) - 1;
      empty = last[i] < first[i];
    }
    if (!empty) detail::visit_numerators(0, h, h, first, last, nums, f);
  }
}

/// Exactly the points of the box with height in (C/2, C], lexicographically ordered.
std::vector<RationalPoint> enumerate_height_band(const EnumBox& box, std::int64_t C,
                                                 const EnumOptions& options = {});

/// Points of the box with height in (h_lo, h_hi], lexicographically ordered.
std::vector<RationalPoint> enumerate_heights(const EnumBox& box, std::int64_t h_lo,
                                             std::int64_t h_hi, const EnumOptions& options = {});

/// Number of points with height in (h_lo, h_hi], by Moebius inversion over divisors of each h.
std::uint64_t count_heights(const EnumBox& box, std::int64_t h_lo, std::int64_t h_hi,
                            unsigned threads = 1);

inline std::uint64_t count_height_band(const EnumBox& box, std::int64_t C, unsigned threads = 1) {
  require(C >= 1, "height band needs C >= 1");
  return count_heights(box, C / 2, C, threads);
}

struct CountBand {
  std::int64_t C = 0;
  std::uint64_t count = 0;
};

struct CountSeries {
  std::vector<CountBand> bands;  // C strictly increasing
  EnumBox box;
};

struct CountSlope {
  DimensionFit fit;                    // log count against log C, empty bands excluded
  CountSeries series;
  std::vector<std::int64_t> empty_bands;
};

/// Needs at least three distinct C values.
CountSlope count_slope(const EnumBox& box, std::vector<std::int64_t> C_values, unsigned threads = 1);

struct Witness {
  RationalPoint point;
  double distance = 0.0;   // d_Cyg(lambda, point)
  double threshold = 0.0;  // C / h^gamma
};

/// Rational points r of the box with h(r) <= H_max and d_Cyg(lambda, r) < C / h(r)^gamma.
std::vector<Witness> diophantine_witnesses(const heisenberg::HeisenbergPoint& lambda, double gamma,
                                           double C, std::int64_t H_max, const EnumBox& box,
                                           const EnumOptions& options = {});

}  // namespace jarnik::rational
