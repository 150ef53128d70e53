#include <doctest.h>

#include <cmath>
#include <random>

#include "jarnik/errors.hpp"
#include "jarnik/limsup.hpp"

using namespace jarnik;
using namespace jarnik::limsup;

namespace {

RationalPoint pt(std::vector<Rational> c) { return rational::make_point(std::move(c)); }

CygBox cube_root(const Rational& half) { return CygBox(pt({0, 0, 0}), half, half); }

// Vertices of the closure: the box is the affine image of [-R, R]^(2n-2) x [-Rv, Rv].
std::vector<std::vector<Rational>> vertices(const CygBox& b) {
  const auto& c = b.center().coords;
  const std::size_t H = c.size() - 1;
  std::vector<std::vector<Rational>> out;
  for (unsigned mask = 0; mask < (1u << (H + 1)); ++mask) {
    std::vector<Rational> u(H), zq(c.begin(), c.end() - 1), p(H + 1);
    for (std::size_t k = 0; k < H; ++k) {
      u[k] = (mask >> k & 1) ? b.horizontal_radius() : Rational(-b.horizontal_radius());
      p[k] = c[k] + u[k];
    }
    const Rational w = (mask >> H & 1) ? b.vertical_radius() : Rational(-b.vertical_radius());
    p[H] = c[H] + w + 2 * heisenberg::im_inner(u, zq);
    out.push_back(p);
  }
  return out;
}

Rational random_rational(std::mt19937_64& rng, int range, int den) {
  return Rational(static_cast<long>(rng() % (2 * range + 1)) - range, 1 + static_cast<long>(rng() % den));
}

}  // namespace

TEST_CASE("cover of the unit cube") {
  const auto box = rational::EnumBox::cube(3, 0, 1);
  CHECK(build_cover(box, Rational(2), 2, 2, Rational(1)).empty());
  CHECK(build_cover(box, Rational(2), 3, 2, Rational(1)).empty());
  const auto cover = build_cover(box, Rational(2), 1, 2, Rational(1));
  REQUIRE(cover.size() == 7);
  for (const auto& b : cover) {
    CHECK(b.horizontal_radius() == Rational(1, 4));
    CHECK(b.vertical_radius() == Rational(1, 16));
    CHECK(b.exact_radii());
  }
  for (const auto& b : build_cover(box, Rational(3, 2), 2, 6, Rational(1, 3))) {
    CHECK(b.center().height > 2);
    CHECK(b.center().height <= 6);
  }
}

TEST_CASE("radii follow the height") {
  const auto b = CygBox::around(pt({Rational(1, 3), 0, Rational(2, 9)}), Rational(2), Rational(1, 4));
  CHECK(b.center().height == 9);
  CHECK(b.horizontal_radius() == Rational(1, 4 * 81));
  CHECK(b.vertical_radius() == b.horizontal_radius() * b.horizontal_radius() / Rational(1, 4));
  const auto root4 = CygBox::around(pt({Rational(1, 16), 0, 0}), Rational(5, 4), Rational(1));
  CHECK(root4.exact_radii());
  CHECK(root4.horizontal_radius() == Rational(1, 32));
  const auto irr = CygBox::around(pt({Rational(1, 5), 0, 0}), Rational(21, 10), Rational(1));
  CHECK(!irr.exact_radii());
  CHECK(irr.horizontal_radius().get_d() == doctest::Approx(std::pow(5.0, -2.1)).epsilon(1e-15));
}

TEST_CASE("subdivision counts") {
  const auto h2 = CygBox::around(pt({Rational(1, 2), 0, 0}), Rational(2), Rational(1));
  CHECK(subdivide_count(h2, 2) == 16);
  CHECK(subdivide_count(cube_root(Rational(1, 2)), 2) == 1);
  const auto n3 = CygBox::around(pt({Rational(1, 2), 0, 0, 0, 0}), Rational(1), Rational(1));
  CHECK(subdivide_count(n3, 3) == 16);
  const auto h3 = CygBox::around(pt({Rational(1, 3), 0, 0}), Rational(2), Rational(1, 7));
  CHECK(subdivide_count(h3, 2) == 81);
}

TEST_CASE("sheared box intersection, hand computed") {
  const CygBox a(pt({0, 0, 0}), 1, 1);
  CHECK(closures_intersect(a, CygBox(pt({1, 0, 4}), 1, 1)));
  CHECK(!closures_intersect(a, CygBox(pt({1, 0, Rational(401, 100)}), 1, 1)));
  CHECK(closures_intersect(a, CygBox(pt({1, 0, -4}), 1, 1)));
  CHECK(!closures_intersect(a, CygBox(pt({Rational(201, 100), 0, 0}), 1, 1)));
  CHECK(closures_intersect(CygBox(pt({0, 0, 0}), 1, Rational(1, 2)), CygBox(pt({0, 0, 1}), 1, Rational(1, 2))));
}

TEST_CASE("containment agrees with the vertex oracle") {
  std::mt19937_64 rng(17);
  int inside = 0;
  for (int i = 0; i < 400; ++i) {
    const CygBox parent(pt({random_rational(rng, 3, 4), random_rational(rng, 3, 4), random_rational(rng, 3, 4)}),
                        Rational(1), Rational(1));
    std::vector<Rational> c(3);
    for (std::size_t k = 0; k < 3; ++k) c[k] = parent.center().coords[k] + random_rational(rng, 4, 5) / 4;
    const CygBox child(pt(c), Rational(1, 1 + static_cast<long>(rng() % 6)), Rational(1, 1 + static_cast<long>(rng() % 6)));
    bool oracle = true;
    for (const auto& v : vertices(child)) oracle = oracle && parent.contains(v);
    CHECK(closure_inside(child, parent) == oracle);
    inside += oracle;
  }
  CHECK(inside > 20);
}

TEST_CASE("intersection is consistent with sampled points") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int i = 0; i < 300; ++i) {
    const CygBox a(pt({random_rational(rng, 2, 3), random_rational(rng, 2, 3), random_rational(rng, 2, 3)}),
                   Rational(1, 2), Rational(1, 2));
    const CygBox b(pt({random_rational(rng, 2, 3), random_rational(rng, 2, 3), random_rational(rng, 2, 3)}),
                   Rational(1, 2), Rational(1, 3));
    const bool meet = closures_intersect(a, b);
    CHECK(meet == closures_intersect(b, a));
    bool found = false;
    for (int s = 0; s < 2000 && !found; ++s) {
      const auto& c = a.center().coords;
      const double ux = 0.5 * u(rng), uy = 0.5 * u(rng), w = 0.5 * u(rng);
      const double x = c[0].get_d(), y = c[1].get_d();
      const heisenberg::HeisenbergPoint p({x + ux, y + uy}, c[2].get_d() + w + 2.0 * (uy * x - ux * y));
      found = a.contains(p) && b.contains(p);
    }
    if (found) CHECK(meet);
    for (const auto& v : vertices(b))
      if (a.contains(v)) CHECK(meet);
  }
}

TEST_CASE("schedule inequality") {
  const std::vector<std::int64_t> empty, one{8}, two{8, 9};
  CHECK(schedule_admits(empty, 8));
  CHECK(schedule_admits(one, 9));
  CHECK(!schedule_admits(one, 8));
  CHECK(!schedule_admits(two, 26873855));
  CHECK(schedule_admits(two, 26873856));
  const std::vector<std::int64_t> small{1, 5};
  CHECK(schedule_admits(small, 625));
  CHECK(!schedule_admits(small, 624));
}

TEST_CASE("Cantor extension keeps children disjoint and nested") {
  CantorParams p;
  p.gamma = 1;
  p.epsilon = Rational(1, 10);
  const auto tree = cantor_extend(cantor_start(p, cube_root(Rational(1, 2))), 8);
  REQUIRE(!tree.degenerate());
  const auto& kids = tree.levels[1].boxes;
  REQUIRE(kids.size() > 10);
  for (std::size_t i = 0; i < kids.size(); ++i) {
    CHECK(closure_inside(kids[i], tree.levels[0].boxes[0]));
    for (std::size_t j = i + 1; j < kids.size(); ++j) REQUIRE(!closures_intersect(kids[i], kids[j]));
  }
  for (const auto& b : kids) {
    CHECK(b.center().height > 4);
    CHECK(b.center().height <= 8);
  }
  CHECK(check_tree_like(tree).all());
  CHECK(tree.levels[1].candidates >= kids.size());
}

TEST_CASE("retention ratio for a single child height") {
  CantorParams p;
  const CygBox root = cube_root(Rational(2));
  const auto tree = cantor_extend(cantor_start(p, root), 2);
  REQUIRE(!tree.degenerate());
  const auto& kids = tree.levels[1].boxes;
  for (const auto& b : kids) CHECK(b.center().height == 2);
  CHECK(tree.levels[1].delta == Rational(static_cast<long>(kids.size())) * kids[0].volume() / root.volume());
}

TEST_CASE("degenerate levels and rejected schedules") {
  CantorParams p;
  const auto start = cantor_start(p, cube_root(Rational(1, 2)));
  const auto degenerate = cantor_extend(start, 2);  // only the origin, of height 1, lies inside
  CHECK(degenerate.degenerate());
  CHECK(degenerate.levels.size() == 1);
  CHECK_THROWS_AS(cantor_extend(degenerate, 3), InvalidInput);
  const auto one = cantor_extend(start, 1);
  CHECK(!one.degenerate());
  CHECK_THROWS_AS(cantor_extend(one, 1), InvalidInput);
  const auto two = cantor_extend(one, 5);
  CHECK_THROWS_AS(cantor_extend(two, 600), InvalidInput);
}

TEST_CASE("tree checks detect violations and extension ignores the worker count") {
  CantorParams p;
  const auto base = cantor_extend(cantor_extend(cantor_start(p, cube_root(Rational(1, 2))), 1), 5);
  CHECK(check_tree_like(base).all());
  p.options.threads = 3;
  const auto threaded = cantor_extend(cantor_extend(cantor_start(p, cube_root(Rational(1, 2))), 1), 5);
  REQUIRE(threaded.levels.size() == base.levels.size());
  for (std::size_t i = 0; i < base.levels[2].boxes.size(); ++i)
    CHECK(threaded.levels[2].boxes[i].center() == base.levels[2].boxes[i].center());
  auto broken = base;
  broken.levels[2].boxes.push_back(broken.levels[2].boxes[0]);
  broken.levels[2].parents.push_back(broken.levels[2].parents[0]);
  CHECK(!check_tree_like(broken).disjoint);
  auto orphan = base;
  orphan.levels[2].boxes[0] = CygBox(pt({3, 3, 3}), Rational(1, 100), Rational(1, 100));
  CHECK(!check_tree_like(orphan).nested);
}

TEST_CASE("sampled leaf points are certified by their ancestors") {
  CantorParams p;
  const auto tree = cantor_extend(cantor_extend(cantor_start(p, cube_root(Rational(1, 2))), 1), 5);
  std::vector<std::size_t> leaf_of;
  const auto pts = sample_leaf_points(tree, 3, 42, &leaf_of);
  REQUIRE(pts.size() == 3 * tree.levels.back().boxes.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    CHECK(tree.levels.back().boxes[leaf_of[i]].contains(pts[i]));
    const auto cert = certify_leaf_point(tree, leaf_of[i], pts[i]);
    CHECK(cert.certified);
    CHECK(cert.scaled_distances.size() == 2);
  }
  CHECK(sample_leaf_points(tree, 3, 42)[5] == pts[5]);
}

TEST_CASE("tree lower bound evaluator") {
  const std::vector<LevelStat> flat{{0.0, std::log(2.0)}, {0.0, std::log(8.0)}};
  CHECK(tree_lower_bound(flat, 3.0) == 3.0);
  const std::vector<LevelStat> one{{std::log(4.0), std::log(16.0)}};
  CHECK(tree_lower_bound(one, 3.0) == 2.5);
  const std::vector<LevelStat> zero{{INFINITY, std::log(16.0)}};
  CHECK_THROWS_AS(tree_lower_bound(zero, 3.0), InvalidInput);
  const std::vector<LevelStat> growing{{0.1, 1.0}, {0.1, 0.5}};
  CHECK_THROWS_AS(tree_lower_bound(growing, 3.0), InvalidInput);
  CHECK_THROWS_AS(tree_lower_bound(std::vector<LevelStat>{}, 3.0), InvalidInput);
}

TEST_CASE("adding a lossless level never lowers the bound") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(0.0, 3.0);
  for (int i = 0; i < 200; ++i) {
    std::vector<LevelStat> s;
    double diam = 0.5;
    for (int j = 0; j < 1 + i % 5; ++j) {
      diam += u(rng);
      s.push_back({u(rng), diam});
    }
    for (auto proxy : {LimsupProxy::max_over_levels, LimsupProxy::last_level}) {
      const double before = tree_lower_bound(s, 5.0, proxy);
      auto more = s;
      more.push_back({0.0, diam + u(rng)});
      CHECK(tree_lower_bound(more, 5.0, proxy) >= before);
    }
  }
}

TEST_CASE("synthetic schedule converges to the Heisenberg dimension") {
  for (const Rational& g : {Rational(3, 2), Rational(2), Rational(3)}) {
    const double gp = Rational(g + Rational(1, 10)).get_d();
    const auto stats = synthetic_stats(2, gp, 0.25, 8.0, 7);
    const double target = (1.0 + gp) / gp * 2.0 - 1.0;
    const auto bounds = running_lower_bounds(stats, 3.0);
    CHECK(std::fabs(tree_lower_bound(stats, 3.0, LimsupProxy::last_level) - target) < 0.05);
    for (std::size_t j = 3; j < bounds.size(); ++j) CHECK(bounds[j] >= bounds[j - 1]);
    CHECK(bounds.back() <= target);
    MESSAGE("gamma' = " << gp << ": running " << bounds[0] << " .. " << bounds.back() << ", max-proxy "
                        << tree_lower_bound(stats, 3.0) << ", target " << target);
  }
}

TEST_CASE("retention exponent") {
  CHECK(delta_exponent(Rational(1), 2, 1, Rational(21, 10)) == Rational(-22, 5));
  CHECK(delta_exponent(Rational(1), 2, 1, Rational(1)) == 0);
  CHECK(delta_exponent(Rational(2), 1, 0, Rational(3)) == -2);
}
