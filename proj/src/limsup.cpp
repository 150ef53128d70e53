#include "jarnik/limsup.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_map>
#include <random>
#include <thread>

#include "jarnik/errors.hpp"

namespace jarnik::limsup {

namespace {

// h^gamma when it is rational.
std::optional<BigInt> exact_power(const BigInt& h, const Rational& gamma) {
  if (gamma < 0 || gamma.get_num() > 4096 || gamma.get_den() > 64) return std::nullopt;
  const unsigned long p = gamma.get_num().get_ui(), q = gamma.get_den().get_ui();
  BigInt hp;
  mpz_pow_ui(hp.get_mpz_t(), h.get_mpz_t(), p);
  BigInt root;
  if (mpz_root(root.get_mpz_t(), hp.get_mpz_t(), q) == 0) return std::nullopt;
  return root;
}

// Coefficients of zeta -> Im<zeta, delta> on the interleaved horizontal coordinates.
std::vector<Rational> twist_coefficients(const std::vector<Rational>& delta) {
  std::vector<Rational> a(delta.size());
  for (std::size_t k = 0; k + 1 < delta.size(); k += 2) {
    a[k] = -delta[k + 1];
    a[k + 1] = delta[k];
  }
  return a;
}

// Range of f0 + 2 Im<zeta, delta> over the closed rectangle [lo, hi].
std::pair<Rational, Rational> twisted_range(const Rational& f0, const std::vector<Rational>& delta,
                                            const std::vector<Rational>& lo,
                                            const std::vector<Rational>& hi) {
  const auto a = twist_coefficients(delta);
  Rational fmin = f0, fmax = f0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const Rational s = 2 * a[k];
    if (s >= 0) {
      fmin += s * lo[k];
      fmax += s * hi[k];
    } else {
      fmin += s * hi[k];
      fmax += s * lo[k];
    }
  }
  return {fmin, fmax};
}

std::size_t horizontal_size(const CygBox& b) { return b.center().coords.size() - 1; }

template <class F>
void run_parallel(std::size_t count, unsigned threads, F&& work) {
  const std::size_t nthreads = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(count, 1));
  if (nthreads <= 1) {
    for (std::size_t i = 0; i < count; ++i) work(i);
    return;
  }
  std::vector<std::thread> pool;
  const std::size_t chunk = (count + nthreads - 1) / nthreads;
  for (std::size_t lo = 0; lo < count; lo += chunk)
    pool.emplace_back([&, lo] {
      for (std::size_t i = lo; i < std::min(count, lo + chunk); ++i) work(i);
    });
  for (auto& th : pool) th.join();
}

bool horizontal_overlap_double(const CygBox& a, const CygBox& b) {
  const double ra = a.horizontal_radius().get_d(), rb = b.horizontal_radius().get_d();
  for (std::size_t k = 0; k < horizontal_size(a); ++k) {
    const double xa = a.center().coords[k].get_d(), xb = b.center().coords[k].get_d();
    const double tol = 1e-12 * (std::fabs(xa) + std::fabs(xb) + ra + rb);
    if (std::fabs(xa - xb) > ra + rb + tol) return false;
  }
  return true;
}

// Uniform grid on the first complex coordinate; cells at least as wide as any pair reach.
class GridIndex {
 public:
  explicit GridIndex(double cell) : cell_(cell > 0.0 ? cell : 1.0) {}

  void add(const CygBox& box, std::size_t index) { cells_[key(box, 0, 0)].push_back(index); }

  template <class F>
  bool any_neighbor(const CygBox& box, F&& f) const {
    for (int dx = -1; dx <= 1; ++dx)
      for (int dy = -1; dy <= 1; ++dy) {
        auto it = cells_.find(key(box, dx, dy));
        if (it == cells_.end()) continue;
        for (std::size_t j : it->second)
          if (f(j)) return true;
      }
    return false;
  }

 private:
  using Key = std::pair<std::int64_t, std::int64_t>;
  struct Hash {
    std::size_t operator()(const Key& k) const {
      return std::hash<std::int64_t>()(k.first) * 0x9E3779B97F4A7C15ULL ^ std::hash<std::int64_t>()(k.second);
    }
  };
  Key key(const CygBox& box, int dx, int dy) const {
    const auto& c = box.center().coords;
    return {static_cast<std::int64_t>(std::floor(c[0].get_d() / cell_)) + dx,
            static_cast<std::int64_t>(std::floor(c[1].get_d() / cell_)) + dy};
  }
  double cell_;
  std::unordered_map<Key, std::vector<std::size_t>, Hash> cells_;
};

double grid_cell(double max_radius) { return 2.0 * max_radius * (1.0 + 1e-6) + 1e-300; }

}  // namespace

CygBox::CygBox(RationalPoint center, Rational horizontal_radius, Rational vertical_radius, Rational gamma,
               Rational c)
    : center_(std::move(center)),
      r_(std::move(horizontal_radius)),
      rv_(std::move(vertical_radius)),
      gamma_(std::move(gamma)),
      c_(std::move(c)) {
  require(center_.coords.size() >= 3 && center_.coords.size() % 2 == 1,
          "box center needs 2n-1 coordinates with n >= 2");
  require(r_ > 0 && rv_ > 0, "box radii must be positive");
  require(gamma_ >= 1, "box exponent gamma must be >= 1");
  require(c_ > 0, "box constant c must be positive");
}

CygBox CygBox::around(RationalPoint center, const Rational& gamma, const Rational& c) {
  require(gamma >= 1, "box exponent gamma must be >= 1");
  require(c > 0, "box constant c must be positive");
  const BigInt h = center.height;
  Rational r, rv;
  bool exact = true;
  if (auto hg = exact_power(h, gamma)) {
    r = c / Rational(*hg);
    rv = c / Rational(*hg * *hg);
  } else {
    exact = false;
    const long double hd = h.get_d(), g = gamma.get_d(), cd = c.get_d();
    r = exact_from_long_double(cd * std::pow(hd, -g));
    rv = exact_from_long_double(cd * std::pow(hd, -2.0L * g));
  }
  r.canonicalize();
  rv.canonicalize();
  CygBox box(std::move(center), std::move(r), std::move(rv), gamma, c);
  box.exact_ = exact;
  return box;
}

Rational CygBox::volume() const {
  Rational v = 2 * rv_;
  const Rational side = 2 * r_;
  for (std::size_t k = 0; k < horizontal_size(*this); ++k) v *= side;
  return v;
}

double CygBox::diameter() const {
  const double r = r_.get_d(), rv = rv_.get_d();
  return std::max(2.0 * r, 2.0 * rv + 4.0 * static_cast<double>(n() - 1) * r * r);
}

bool CygBox::contains(std::span<const Rational> coords) const {
  const std::size_t H = horizontal_size(*this);
  if (coords.size() != H + 1) return false;
  std::vector<Rational> u(H);
  for (std::size_t k = 0; k < H; ++k) {
    u[k] = coords[k] - center_.coords[k];
    if (!(abs(u[k]) < r_)) return false;
  }
  std::vector<Rational> zq(center_.coords.begin(), center_.coords.end() - 1);
  const Rational w = coords[H] - center_.coords[H] - 2 * heisenberg::im_inner(u, zq);
  return abs(w) < rv_;
}

bool CygBox::contains(const heisenberg::HeisenbergPoint& p) const {
  const std::size_t H = horizontal_size(*this);
  if (p.horizontal_size() != H) return false;
  const double r = r_.get_d(), rv = rv_.get_d();
  std::vector<double> u(H), zq(H);
  for (std::size_t k = 0; k < H; ++k) {
    zq[k] = center_.coords[k].get_d();
    u[k] = p.horizontal()[k] - zq[k];
    if (!(std::fabs(u[k]) < r)) return false;
  }
  const double w = p.vertical() - center_.coords[H].get_d() - 2.0 * heisenberg::im_inner(u, zq);
  return std::fabs(w) < rv;
}

EnumBox CygBox::bounding_box() const {
  const std::size_t H = horizontal_size(*this);
  std::vector<Rational> lo(H + 1), hi(H + 1);
  Rational spread = 0;
  for (std::size_t k = 0; k < H; ++k) {
    lo[k] = center_.coords[k] - r_;
    hi[k] = center_.coords[k] + r_;
    spread += abs(center_.coords[k]);
  }
  const Rational vr = rv_ + 2 * r_ * spread;
  lo[H] = center_.coords[H] - vr;
  hi[H] = center_.coords[H] + vr;
  return EnumBox(std::move(lo), std::move(hi));
}

bool closures_intersect(const CygBox& a, const CygBox& b) {
  const std::size_t H = horizontal_size(a);
  require(horizontal_size(b) == H, "boxes live in different Heisenberg groups");
  std::vector<Rational> lo(H), hi(H), delta(H);
  const auto& ca = a.center().coords;
  const auto& cb = b.center().coords;
  for (std::size_t k = 0; k < H; ++k) {
    lo[k] = std::max(Rational(ca[k] - a.horizontal_radius()), Rational(cb[k] - b.horizontal_radius()));
    hi[k] = std::min(Rational(ca[k] + a.horizontal_radius()), Rational(cb[k] + b.horizontal_radius()));
    if (lo[k] > hi[k]) return false;
    delta[k] = ca[k] - cb[k];
  }
  const auto [fmin, fmax] = twisted_range(ca[H] - cb[H], delta, lo, hi);
  const Rational S = a.vertical_radius() + b.vertical_radius();
  return fmin <= S && fmax >= -S;
}

bool closure_inside(const CygBox& child, const CygBox& parent) {
  const std::size_t H = horizontal_size(child);
  require(horizontal_size(parent) == H, "boxes live in different Heisenberg groups");
  const auto& cc = child.center().coords;
  const auto& cp = parent.center().coords;
  const Rational& rc = child.horizontal_radius();
  const Rational& rp = parent.horizontal_radius();
  std::vector<Rational> lo(H), hi(H), delta(H);
  for (std::size_t k = 0; k < H; ++k) {
    lo[k] = cc[k] - rc;
    hi[k] = cc[k] + rc;
    if (!(lo[k] > cp[k] - rp) || !(hi[k] < cp[k] + rp)) return false;
    delta[k] = cc[k] - cp[k];
  }
  const Rational slack = parent.vertical_radius() - child.vertical_radius();
  if (slack <= 0) return false;
  const auto [gmin, gmax] = twisted_range(cc[H] - cp[H], delta, lo, hi);
  return std::max(abs(gmin), abs(gmax)) < slack;
}

std::vector<CygBox> build_cover(const EnumBox& box, const Rational& gamma, std::int64_t l, std::int64_t H_max,
                                const Rational& c, const rational::EnumOptions& options) {
  require(box.dim() >= 3 && box.dim() % 2 == 1, "cover box needs 2n-1 coordinates with n >= 2");
  require(gamma >= 1, "gamma must be >= 1");
  require(c > 0, "c must be positive");
  require(l >= 1 && H_max >= 1, "l and H_max must be positive");
  std::vector<CygBox> out;
  if (l >= H_max) return out;
  auto points = rational::enumerate_heights(box, l, H_max, options);
  out.reserve(points.size());
  for (auto& p : points) out.push_back(CygBox::around(std::move(p), gamma, c));
  return out;
}

BigInt subdivide_count(const CygBox& box, int n) {
  require(n >= 2, "n must be >= 2");
  require(static_cast<std::size_t>(2 * n - 1) == box.center().coords.size(), "n does not match the box");
  const BigInt side = ceil(Rational(box.horizontal_radius() / box.vertical_radius()));
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), side.get_mpz_t(), static_cast<unsigned long>(2 * n - 2));
  return out;
}

std::vector<LevelStat> CantorTree::stats() const {
  std::vector<LevelStat> out;
  for (std::size_t j = 1; j < levels.size(); ++j) {
    const Rational& delta = levels[j].delta;
    const double log_inv_delta = -(std::log(delta.get_num().get_d()) - std::log(delta.get_den().get_d()));
    out.push_back({log_inv_delta, -std::log(levels[j].diameter)});
  }
  return out;
}

CantorTree cantor_start(const CantorParams& params, const CygBox& root) {
  require(params.n >= 2, "n must be >= 2");
  require(params.gamma >= 1, "gamma must be >= 1");
  require(params.epsilon > 0, "epsilon must be positive");
  require(params.r0 > 0, "r0 must be positive");
  require(root.n() == params.n, "root box does not match n");
  CantorTree tree;
  tree.params = params;
  CantorLevel level;
  level.boxes.push_back(root);
  level.parents.push_back(0);
  level.diameter = root.diameter();
  tree.levels.push_back(std::move(level));
  return tree;
}

bool schedule_admits(std::span<const std::int64_t> schedule, std::int64_t l_next) {
  if (l_next < 1) return false;
  if (schedule.empty()) return true;
  if (l_next <= schedule.back()) return false;
  const unsigned long j = schedule.size();
  BigInt prod = 1;
  for (std::int64_t l : schedule) prod *= BigInt(std::to_string(l));
  BigInt bound;
  mpz_pow_ui(bound.get_mpz_t(), prod.get_mpz_t(), j * j);
  return BigInt(std::to_string(l_next)) >= bound;
}

CantorTree cantor_extend(const CantorTree& tree, std::int64_t l_next) {
  require(!tree.levels.empty() && !tree.levels.back().boxes.empty(), "tree must be nonempty");
  require(!tree.degenerate(), "tree already has a degenerate level");
  require(schedule_admits(tree.schedule, l_next), "scale violates the schedule inequality");
  const CantorParams& p = tree.params;
  const Rational gamma_prime = p.gamma + p.epsilon;
  const auto& parents = tree.levels.back().boxes;
  const std::int64_t h_lo = l_next / 2;

  double cost = 0.0;
  for (const auto& parent : parents) cost += rational::enumeration_cost(parent.bounding_box(), h_lo, l_next);
  if (cost > p.options.budget) throw ResourceLimit("Cantor extension exceeds the enumeration budget");

  struct ParentResult {
    std::vector<CygBox> kept;
    Rational ratio;
    std::size_t candidates = 0;
  };
  std::vector<ParentResult> results(parents.size());
  const double max_child_radius =
      p.r0.get_d() * std::pow(static_cast<double>(h_lo + 1), -gamma_prime.get_d()) * (1.0 + 1e-9);
  run_parallel(parents.size(), p.options.threads, [&](std::size_t i) {
    const CygBox& parent = parents[i];
    ParentResult& res = results[i];
    GridIndex index(grid_cell(max_child_radius));
    Rational kept_volume = 0;
    const std::size_t H = parent.center().coords.size() - 1;
    std::vector<double> zq(H), u(H);
    for (std::size_t k = 0; k < H; ++k) zq[k] = parent.center().coords[k].get_d();
    const double vq = parent.center().coords[H].get_d();
    const double r = parent.horizontal_radius().get_d(), rv = parent.vertical_radius().get_d();
    const double slack = 1e-9 * (r + rv) + 1e-12;
    std::vector<Rational> coords(H + 1);
    rational::for_each_point(parent.bounding_box(), h_lo, l_next, [&](std::span<const std::int64_t> nums, std::int64_t h) {
      const double hd = static_cast<double>(h);
      for (std::size_t k = 0; k < H; ++k) {
        u[k] = static_cast<double>(nums[k]) / hd - zq[k];
        if (std::fabs(u[k]) > r + slack) return;
      }
      const double w = static_cast<double>(nums[H]) / hd - vq - 2.0 * heisenberg::im_inner(u, zq);
      if (std::fabs(w) > rv + slack) return;
      for (std::size_t k = 0; k <= H; ++k) {
        coords[k] = Rational(nums[k], h);
        coords[k].canonicalize();
      }
      CygBox child = CygBox::around(rational::make_point(coords), gamma_prime, p.r0);
      if (!closure_inside(child, parent)) return;
      ++res.candidates;
      const bool clash = index.any_neighbor(child, [&](std::size_t j) {
        return horizontal_overlap_double(child, res.kept[j]) && closures_intersect(child, res.kept[j]);
      });
      if (clash) return;
      kept_volume += child.volume();
      index.add(child, res.kept.size());
      res.kept.push_back(std::move(child));
    });
    res.ratio = kept_volume / parent.volume();
  });

  CantorTree out = tree;
  CantorLevel level;
  level.l = l_next;
  bool first = true;
  for (std::size_t i = 0; i < results.size(); ++i) {
    auto& res = results[i];
    if (res.kept.empty()) {
      out.degenerate_level = tree.levels.size();
      return out;
    }
    if (first || res.ratio < level.delta) level.delta = res.ratio;
    first = false;
    level.candidates += res.candidates;
    for (auto& child : res.kept) {
      level.diameter = std::max(level.diameter, child.diameter());
      level.boxes.push_back(std::move(child));
      level.parents.push_back(i);
    }
  }
  out.schedule.push_back(l_next);
  out.levels.push_back(std::move(level));
  return out;
}

TreeLikeReport check_tree_like(const CantorTree& tree) {
  TreeLikeReport report;
  if (tree.levels.empty()) return report;
  report.single_root = tree.levels[0].boxes.size() == 1;

  report.disjoint = true;
  for (const auto& level : tree.levels) {
    const auto& boxes = level.boxes;
    double max_radius = 0.0;
    for (const auto& b : boxes) max_radius = std::max(max_radius, b.horizontal_radius().get_d());
    GridIndex index(grid_cell(max_radius));
    for (std::size_t i = 0; i < boxes.size() && report.disjoint; ++i) {
      const bool clash = index.any_neighbor(boxes[i], [&](std::size_t j) {
        return horizontal_overlap_double(boxes[i], boxes[j]) && closures_intersect(boxes[i], boxes[j]);
      });
      if (clash) report.disjoint = false;
      index.add(boxes[i], i);
    }
  }

  report.nested = true;
  for (std::size_t j = 1; j < tree.levels.size() && report.nested; ++j) {
    const auto& level = tree.levels[j];
    const auto& above = tree.levels[j - 1].boxes;
    if (level.parents.size() != level.boxes.size()) {
      report.nested = false;
      break;
    }
    for (std::size_t i = 0; i < level.boxes.size(); ++i)
      if (level.parents[i] >= above.size() || !closure_inside(level.boxes[i], above[level.parents[i]])) {
        report.nested = false;
        break;
      }
  }

  report.diameters_decreasing = true;
  for (std::size_t j = 0; j < tree.levels.size(); ++j) {
    const double d = tree.levels[j].diameter;
    if (!(d > 0.0) || (j > 0 && !(d < tree.levels[j - 1].diameter))) report.diameters_decreasing = false;
  }
  return report;
}

std::vector<heisenberg::HeisenbergPoint> sample_leaf_points(const CantorTree& tree, std::size_t per_leaf,
                                                            std::uint64_t seed, std::vector<std::size_t>* leaf_of) {
  require(!tree.levels.empty(), "tree must be nonempty");
  std::mt19937_64 rng(seed);
  auto uniform = [&rng] {  // in (-1, 1), identical on every standard library
    return static_cast<double>(rng() >> 11) * 0x1.0p-52 - 1.0;
  };
  std::vector<heisenberg::HeisenbergPoint> out;
  if (leaf_of) leaf_of->clear();
  const auto& leaves = tree.levels.back().boxes;
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    const CygBox& b = leaves[i];
    const std::size_t H = horizontal_size(b);
    const double r = b.horizontal_radius().get_d() * 0.9, rv = b.vertical_radius().get_d() * 0.9;
    std::vector<double> zq(H);
    for (std::size_t k = 0; k < H; ++k) zq[k] = b.center().coords[k].get_d();
    const double vq = b.center().coords[H].get_d();
    for (std::size_t s = 0; s < per_leaf; ++s) {
      std::vector<double> u(H), z(H);
      for (std::size_t k = 0; k < H; ++k) {
        u[k] = r * uniform();
        z[k] = zq[k] + u[k];
      }
      const double w = rv * uniform();
      out.emplace_back(std::move(z), vq + w + 2.0 * heisenberg::im_inner(u, zq));
      if (leaf_of) leaf_of->push_back(i);
    }
  }
  return out;
}

double certification_constant(const CantorTree& tree) {
  const double gp = Rational(tree.params.gamma + tree.params.epsilon).get_d();
  double best = 0.0;
  for (std::size_t j = 1; j < tree.levels.size(); ++j)
    for (const CygBox& b : tree.levels[j].boxes) {
      const double H = static_cast<double>(horizontal_size(b));
      const double r = b.horizontal_radius().get_d(), rv = b.vertical_radius().get_d();
      const double sup = std::pow(H * H * r * r * r * r + rv * rv, 0.25);
      best = std::max(best, sup * std::pow(b.center().height.get_d(), gp));
    }
  return best * (1.0 + 1e-9);
}

Certification certify_leaf_point(const CantorTree& tree, std::size_t leaf, const heisenberg::HeisenbergPoint& point) {
  require(tree.levels.size() >= 2, "tree has no constructed levels");
  require(leaf < tree.levels.back().boxes.size(), "leaf index out of range");
  const double gp = Rational(tree.params.gamma + tree.params.epsilon).get_d();
  const double g = tree.params.gamma.get_d();
  const double C = certification_constant(tree);
  Certification out;
  out.certified = true;
  std::size_t index = leaf;
  for (std::size_t j = tree.levels.size() - 1; j >= 1; --j) {
    const CygBox& box = tree.levels[j].boxes[index];
    const auto witnesses =
        rational::diophantine_witnesses(point, gp, C, tree.levels[j].l, box.bounding_box(), tree.params.options);
    const auto hit = std::find_if(witnesses.begin(), witnesses.end(),
                                  [&](const rational::Witness& w) { return w.point == box.center(); });
    if (hit == witnesses.end()) {
      out.certified = false;
      out.scaled_distances.push_back(std::numeric_limits<double>::infinity());
    } else {
      out.scaled_distances.push_back(hit->distance * std::pow(box.center().height.get_d(), g));
    }
    index = tree.levels[j].parents[index];
  }
  std::reverse(out.scaled_distances.begin(), out.scaled_distances.end());
  return out;
}

namespace {

void validate_stats(std::span<const LevelStat> stats) {
  require(!stats.empty(), "tree bound needs at least one constructed level");
  double prev = 0.0;
  for (std::size_t j = 0; j < stats.size(); ++j) {
    const LevelStat& s = stats[j];
    require(std::isfinite(s.log_inv_delta), "Delta_j = 0 degenerates the bound");
    require(s.log_inv_delta >= 0.0, "Delta_j must lie in (0, 1]");
    require(std::isfinite(s.log_inv_diam) && s.log_inv_diam > 0.0, "diameters must lie in (0, 1)");
    require(j == 0 || s.log_inv_diam >= prev, "diameters must be decreasing");
    prev = s.log_inv_diam;
  }
}

}  // namespace

std::vector<double> running_lower_bounds(std::span<const LevelStat> stats, double k) {
  validate_stats(stats);
  std::vector<double> out;
  double sum = 0.0;
  for (const LevelStat& s : stats) {
    sum += s.log_inv_delta;
    out.push_back(k - sum / s.log_inv_diam);
  }
  return out;
}

double tree_lower_bound(std::span<const LevelStat> stats, double k, LimsupProxy proxy) {
  const auto bounds = running_lower_bounds(stats, k);
  if (proxy == LimsupProxy::last_level) return bounds.back();
  return *std::min_element(bounds.begin(), bounds.end());
}

std::vector<LevelStat> synthetic_stats(int n, double gamma_prime, double r0, double l1, std::size_t levels) {
  require(n >= 2, "n must be >= 2");
  require(gamma_prime >= 1.0 && std::isfinite(gamma_prime), "gamma + eps must be >= 1");
  require(r0 > 0.0 && r0 < 1.0, "r0 must lie in (0, 1)");
  require(l1 > 1.0 && std::isfinite(l1), "l1 must exceed 1");
  require(levels >= 1, "at least one level");
  std::vector<double> log_l{std::log(l1)};  // log l_1, log l_2, ...
  double sum = log_l[0];
  while (log_l.size() < levels) {
    const double j = static_cast<double>(log_l.size());
    const double prev = log_l.back();
    const double next = std::max(j * j * sum, prev + std::log1p(std::exp(-prev)));
    log_l.push_back(next);
    sum += next;
  }
  std::vector<LevelStat> out;
  for (std::size_t j = 0; j < levels; ++j) {
    const double L = log_l[j];
    out.push_back({2.0 * n * (gamma_prime - 1.0) * L, 2.0 * gamma_prime * L - std::log(r0)});
  }
  return out;
}

Rational delta_exponent(const Rational& alpha, int dim_g_alpha, int dim_g_2alpha, const Rational& gamma_prime) {
  require(alpha > 0, "alpha must be positive");
  require(gamma_prime >= 1, "gamma + eps must be >= 1");
  require(dim_g_alpha >= 0 && dim_g_2alpha >= 0, "root space dimensions must be nonnegative");
  const Rational gamma_hom = 2 * alpha * (1 - 1 / gamma_prime);
  const Rational gap = 2 * alpha - gamma_hom;
  require(gap > 0, "exponent conversion leaves the admissible range");
  Rational e = dim_g_alpha + 2 * dim_g_2alpha - (2 * alpha / gap) * dim_g_alpha - (4 * alpha / gap) * dim_g_2alpha;
  e.canonicalize();
  return e;
}

}  // namespace jarnik::limsup
