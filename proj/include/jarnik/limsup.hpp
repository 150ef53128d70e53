#pragma once

// Cygan boxes around rational points, limsup covers, the tree-like Cantor construction and
// the tree dimension lower bound.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "jarnik/exact.hpp"
#include "jarnik/heisenberg.hpp"
#include "jarnik/rational_points.hpp"

namespace jarnik::limsup {

using rational::EnumBox;
using rational::RationalPoint;

/// Right-translate of the anisotropic box |u_k| < R (horizontal), |w| < Rv (vertical) by the center:
/// the set of b * center. In riem_dist it is the open ball of the sup-norm reference distance.
class CygBox {
 public:
  /// Radii c h^-gamma and c h^-2gamma from the center height; exact whenever h^gamma is rational.
  static CygBox around(RationalPoint center, const Rational& gamma, const Rational& c);

  /// Box with explicit radii (used for roots).
  CygBox(RationalPoint center, Rational horizontal_radius, Rational vertical_radius,
         Rational gamma = 1, Rational c = 1);

  const RationalPoint& center() const { return center_; }
  const Rational& horizontal_radius() const { return r_; }
  const Rational& vertical_radius() const { return rv_; }
  const Rational& gamma() const { return gamma_; }
  const Rational& c() const { return c_; }
  bool exact_radii() const { return exact_; }
  int n() const { return static_cast<int>(center_.coords.size() / 2) + 1; }

  Rational volume() const;
  /// sup over pairs of riem_dist: max(2R, 2Rv + 4(n-1)R^2).
  double diameter() const;

  bool contains(std::span<const Rational> coords) const;  // open box
  bool contains(const heisenberg::HeisenbergPoint& p) const;

  /// Smallest coordinate box containing the closure (half-open on the upper side).
  EnumBox bounding_box() const;

 private:
  RationalPoint center_;
  Rational r_, rv_, gamma_, c_;
  bool exact_ = true;
};

/// Whether the closures meet.
bool closures_intersect(const CygBox& a, const CygBox& b);
/// Closure of the child inside the open parent.
bool closure_inside(const CygBox& child, const CygBox& parent);

/// One box per rational point of the box with l < h <= H_max, in lexicographic order.
std::vector<CygBox> build_cover(const EnumBox& box, const Rational& gamma, std::int64_t l,
                                std::int64_t H_max, const Rational& c,
                                const rational::EnumOptions& options = {});

/// Cubes of side Rv tiling the box: ceil(R / Rv)^(2n-2).
BigInt subdivide_count(const CygBox& box, int n);

/// Level record: Delta_j is the ratio feeding level j+1, paired with the diameter d_{j+1}.
struct LevelStat {
  double log_inv_delta = 0.0;  // log(1 / Delta_j)
  double log_inv_diam = 0.0;   // log(1 / d_{j+1})
};

struct CantorParams {
  int n = 2;
  Rational gamma = 2;
  Rational epsilon = Rational(1, 10);
  Rational r0 = Rational(1, 4);
  rational::EnumOptions options{};
};

struct CantorLevel {
  std::vector<CygBox> boxes;
  std::vector<std::size_t> parents;  // index into the previous level
  std::int64_t l = 0;                // scale that produced the level (0 for the root)
  Rational delta = 1;                // min over parents of kept volume / parent volume
  double diameter = 0.0;             // max box diameter
  std::size_t candidates = 0;        // children inside their parent before the disjointness filter
};

struct CantorTree {
  CantorParams params;
  std::vector<CantorLevel> levels;  // levels[0] holds the root
  std::vector<std::int64_t> schedule;
  std::optional<std::size_t> degenerate_level;  // set when an extension found a childless leaf

  std::vector<LevelStat> stats() const;
  bool degenerate() const { return degenerate_level.has_value(); }
};

CantorTree cantor_start(const CantorParams& params, const CygBox& root);

/// Exact check of l_{j+1} > l_j and l_{j+1} >= (l_j ... l_1)^(j^2) against an existing schedule.
bool schedule_admits(std::span<const std::int64_t> schedule, std::int64_t l_next);

/// Adds one level with children of height in (l_next/2, l_next] and radii r0 h^-(gamma+eps).
/// A childless leaf leaves the tree unchanged apart from the degenerate flag.
CantorTree cantor_extend(const CantorTree& tree, std::int64_t l_next);

struct TreeLikeReport {
  bool single_root = false;
  bool disjoint = false;
  bool nested = false;
  bool diameters_decreasing = false;
  bool all() const { return single_root && disjoint && nested && diameters_decreasing; }
};

TreeLikeReport check_tree_like(const CantorTree& tree);

/// Deterministic pseudo-random points strictly inside each leaf.
std::vector<heisenberg::HeisenbergPoint> sample_leaf_points(const CantorTree& tree, std::size_t per_leaf,
                                                            std::uint64_t seed,
                                                            std::vector<std::size_t>* leaf_of = nullptr);

/// Constant C with d_Cyg(b * q, q) < C h^-(gamma+eps) for every box of the construction.
double certification_constant(const CantorTree& tree);

struct Certification {
  bool certified = false;
  std::vector<double> scaled_distances;  // d_Cyg(point, ancestor) * h^gamma per level
};

/// Every ancestor center is a Diophantine witness of exponent gamma + eps and constant
/// certification_constant for the point, searching heights up to that level's scale.
Certification certify_leaf_point(const CantorTree& tree, std::size_t leaf,
                                 const heisenberg::HeisenbergPoint& point);

enum class LimsupProxy { max_over_levels, last_level };

/// k - proxy_j (sum_{i<=j} log(1/Delta_i)) / log(1/d_{j+1}).
double tree_lower_bound(std::span<const LevelStat> stats, double k,
                        LimsupProxy proxy = LimsupProxy::max_over_levels);

/// k - (sum_{i<=j} log(1/Delta_i)) / log(1/d_{j+1}) for every j.
std::vector<double> running_lower_bounds(std::span<const LevelStat> stats, double k);

/// Minimal admissible schedule from l1, with Delta_j = l_{j+1}^(2n(1-g)) and d_j = r0 l_j^(-2g),
/// g = gamma + eps, all in log form.
std::vector<LevelStat> synthetic_stats(int n, double gamma_prime, double r0, double l1, std::size_t levels);

/// dim g_a + 2 dim g_2a - (2a/(2a - gh)) dim g_a - (4a/(2a - gh)) dim g_2a with gh = 2a(1 - 1/g).
Rational delta_exponent(const Rational& alpha, int dim_g_alpha, int dim_g_2alpha, const Rational& gamma_prime);

}  // namespace jarnik::limsup
