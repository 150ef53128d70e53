#include "jarnik/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <functional>
#include <optional>
#include <iostream>
#include <random>
#include <sstream>

#include "jarnik/boxdim.hpp"
#include "jarnik/errors.hpp"
#include "jarnik/formulas.hpp"
#include "jarnik/io.hpp"
#include "jarnik/limsup.hpp"
#include "jarnik/modular_flow.hpp"
#include "jarnik/rational_points.hpp"

namespace jarnik::cli {

namespace {

using io::Artifact;
using io::Json;

struct Outcome {
  Artifact artifact;
  std::string summary;
  int code = kExitOk;
};

struct Common {
  std::string format = "csv";
  std::string out;
  unsigned threads = 1;
};

std::vector<std::string> split(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(item);
  return parts;
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::vector<std::int64_t> out;
  for (const Rational& q : parse_rational_list(text)) {
    require(q.get_den() == 1, "expected integers in list: " + text);
    out.push_back(to_int64(q.get_num()));
  }
  require(!out.empty(), "empty integer list");
  return out;
}

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> out;
  for (const Rational& q : parse_rational_list(text)) out.push_back(q.get_d());
  require(!out.empty(), "empty list");
  return out;
}

long double to_long_double(const Rational& q) {
  return std::strtold(q.get_num().get_str().c_str(), nullptr) / std::strtold(q.get_den().get_str().c_str(), nullptr);
}

std::string render_value(const Rational& q) { return q.get_den() == 1 ? q.get_num().get_str() : to_string(q); }

Json fit_json(const DimensionFit& f) {
  return Json{{"slope", io::number_json(f.slope)},
              {"intercept", io::number_json(f.intercept)},
              {"residual", io::number_json(f.residual)},
              {"range", f.range}};
}

// Box given either as a cube "lo,hi" or by explicit corner lists.
struct BoxArgs {
  std::string cube, lower, upper;

  void add(CLI::App* sub) {
    sub->add_option("--box", cube, "cube bounds lo,hi (exact rationals)");
    sub->add_option("--lower", lower, "lower corner, comma separated");
    sub->add_option("--upper", upper, "upper corner, comma separated");
  }

  rational::EnumBox resolve(std::size_t dim) const {
    if (!lower.empty() || !upper.empty()) {
      require(cube.empty(), "use either --box or --lower/--upper");
      auto lo = parse_rational_list(lower), hi = parse_rational_list(upper);
      require(lo.size() == dim && hi.size() == dim, "box corners need " + std::to_string(dim) + " coordinates");
      return rational::EnumBox(std::move(lo), std::move(hi));
    }
    require(!cube.empty(), "a box is required (--box lo,hi or --lower/--upper)");
    auto b = parse_rational_list(cube);
    require(b.size() == 2, "--box takes lo,hi");
    return rational::EnumBox::cube(dim, b[0], b[1]);
  }
};

Json box_json(const rational::EnumBox& box) {
  return Json{{"lower", io::rational_list_json(box.lower())}, {"upper", io::rational_list_json(box.upper())}};
}

std::size_t resolve_dim(int n, int dim) {
  if (dim > 0) return static_cast<std::size_t>(dim);
  require(n >= 2, "n must be >= 2");
  return static_cast<std::size_t>(2 * n - 1);
}

std::vector<std::string> coord_columns(std::size_t d) {
  std::vector<std::string> cols;
  for (std::size_t i = 1; i <= d; ++i) cols.push_back("x" + std::to_string(i));
  return cols;
}

// ---- formula

struct FormulaArgs {
  bool heisenberg = false, classical = false, multi = false;
  std::string gamma, gammas, alpha = "1", dims;
  int n = 2;
};

Outcome run_formula(const FormulaArgs& a) {
  require(a.heisenberg + a.classical + a.multi <= 1, "choose one of --heisenberg, --classical, --multi-cusp");
  Outcome o;
  Json& cfg = o.artifact.config;
  o.artifact.columns = {"quantity", "value", "decimal"};
  auto row = [&](const std::string& name, const Rational& v) {
    o.artifact.rows.push_back({name, io::rational_json(v), v.get_d()});
  };
  if (a.heisenberg) {
    const Rational g = parse_rational(a.gamma);
    cfg = {{"command", "formula"}, {"kind", "heisenberg"}, {"gamma", to_string(g)}, {"n", a.n}};
    const Rational v = formulas::heisenberg_dimension(g, a.n);
    row("dimension", v);
    o.summary = render_value(v);
  } else if (a.classical) {
    const Rational g = parse_rational(a.gamma);
    cfg = {{"command", "formula"}, {"kind", "classical"}, {"gamma", to_string(g)}};
    const auto v = modular::jb_classical_dimension(g);
    row("real_line", v.real_line);
    row("homogeneous", v.homogeneous);
    o.summary = render_value(v.real_line) + " " + render_value(v.homogeneous);
  } else {
    require(!a.dims.empty(), "--dims g_-2a,g_-a,g_0,g_a,g_2a is required");
    std::vector<int> dv;
    for (const auto& s : parse_int_list(a.dims)) dv.push_back(static_cast<int>(s));
    const auto dims = formulas::root_dims(dv);
    const Rational alpha = parse_rational(a.alpha);
    Rational v;
    if (a.multi) {
      require(!a.gammas.empty(), "--gammas is required");
      const auto gs = parse_rational_list(a.gammas);
      cfg = {{"command", "formula"}, {"kind", "multi-cusp"}, {"gammas", io::rational_list_json(gs)}};
      v = formulas::multi_cusp_dimension(gs, alpha, dims);
    } else {
      const Rational g = parse_rational(a.gamma);
      cfg = {{"command", "formula"}, {"kind", "rank-one"}, {"gamma", to_string(g)}};
      v = formulas::rank_one_dimension(g, alpha, dims);
    }
    cfg["alpha"] = to_string(alpha);
    cfg["dims"] = dv;
    row("dimension", v);
    o.summary = render_value(v);
  }
  return o;
}

// ---- enumerate

struct EnumerateArgs {
  int n = 2, dim = 0;
  BoxArgs box;
  std::int64_t C = 0, hmin = 0, hmax = 0;
};

Outcome run_enumerate(const EnumerateArgs& a, const Common& c) {
  const std::size_t d = resolve_dim(a.n, a.dim);
  const auto box = a.box.resolve(d);
  std::int64_t lo = a.hmin, hi = a.hmax;
  if (a.C > 0) {
    require(a.hmax == 0 && a.hmin == 0, "use either --C or --hmin/--hmax");
    lo = a.C / 2;
    hi = a.C;
  }
  require(hi >= 1 && lo >= 0 && lo < hi, "need 0 <= hmin < hmax (or --C >= 1)");
  const auto pts = rational::enumerate_heights(box, lo, hi, {c.threads, rational::default_budget()});
  Outcome o;
  o.artifact.config = {{"command", "enumerate"}, {"dim", d}, {"box", box_json(box)}, {"hmin", lo}, {"hmax", hi}};
  o.artifact.columns = {"h"};
  for (auto& col : coord_columns(d)) o.artifact.columns.push_back(col);
  for (const auto& p : pts) {
    std::vector<Json> row{p.height.get_str()};
    for (const auto& q : p.coords) row.push_back(io::rational_json(q));
    o.artifact.rows.push_back(std::move(row));
  }
  o.summary = std::to_string(pts.size()) + " points";
  return o;
}

// ---- count-slope

struct CountArgs {
  int n = 2, dim = 0;
  BoxArgs box;
  std::string C;
};

Outcome run_count_slope(const CountArgs& a, const Common& c) {
  const std::size_t d = resolve_dim(a.n, a.dim);
  const auto box = a.box.resolve(d);
  require(!a.C.empty(), "--C list is required");
  const auto Cs = parse_int_list(a.C);
  const auto res = rational::count_slope(box, Cs, c.threads);
  Outcome o;
  Json cs = Json::array();
  for (const auto& b : res.series.bands) cs.push_back(b.C);
  o.artifact.config = {{"command", "count-slope"}, {"dim", d}, {"box", box_json(box)}, {"C", cs}};
  o.artifact.columns = {"C", "count"};
  for (const auto& b : res.series.bands) o.artifact.rows.push_back({b.C, b.count});
  o.artifact.extra["fit"] = fit_json(res.fit);
  o.artifact.extra["expected_slope"] = static_cast<std::int64_t>(d + 1);
  o.artifact.extra["empty_bands"] = res.empty_bands;
  o.summary = "slope=" + format_double(res.fit.slope) + " residual=" + format_double(res.fit.residual);
  return o;
}

// ---- witnesses

struct WitnessArgs {
  std::string point, gamma, C = "1";
  std::int64_t hmax = 0;
  BoxArgs box;
};

Outcome run_witnesses(const WitnessArgs& a, const Common& c) {
  require(!a.point.empty() && !a.gamma.empty(), "--point and --gamma are required");
  const auto coords = parse_double_list(a.point);
  const auto lambda = heisenberg::HeisenbergPoint::from_coords(coords);
  const double gamma = parse_rational(a.gamma).get_d(), C = parse_rational(a.C).get_d();
  const auto box = a.box.resolve(coords.size());
  const auto ws = rational::diophantine_witnesses(lambda, gamma, C, a.hmax, box, {c.threads, rational::default_budget()});
  Outcome o;
  Json pt = Json::array();
  for (double x : coords) pt.push_back(x);
  o.artifact.config = {{"command", "witnesses"}, {"point", pt},         {"gamma", gamma},
                       {"C", C},                 {"hmax", a.hmax},      {"box", box_json(box)}};
  o.artifact.columns = {"h"};
  for (auto& col : coord_columns(coords.size())) o.artifact.columns.push_back(col);
  o.artifact.columns.push_back("distance");
  o.artifact.columns.push_back("threshold");
  for (const auto& w : ws) {
    std::vector<Json> row{w.point.height.get_str()};
    for (const auto& q : w.point.coords) row.push_back(io::rational_json(q));
    row.push_back(w.distance);
    row.push_back(w.threshold);
    o.artifact.rows.push_back(std::move(row));
  }
  o.summary = std::to_string(ws.size()) + " witnesses";
  return o;
}

// ---- excursion / cf

struct XArg {
  std::string text;
  long double value = 0.0L;
  std::optional<Rational> exact;

  void resolve() {
    require(!text.empty(), "--x is required");
    if (text == "golden") {
      value = (1.0L + std::sqrt(5.0L)) / 2.0L;
      return;
    }
    exact = parse_rational(text);
    value = to_long_double(*exact);
  }
  Json json() const { return exact ? Json(to_string(*exact)) : Json(text); }
};

struct ExcursionArgs {
  XArg x;
  double T = 10.0, dt = 0.01;
};

Outcome run_excursion(ExcursionArgs a, const Common& c) {
  a.x.resolve();
  const auto profile = modular::excursion_profile(a.x.value, a.T, a.dt, c.threads);
  const auto minima = modular::local_minima(profile, true);
  const auto est = modular::excursion_exponent(a.x.value, a.T, a.dt);
  Outcome o;
  o.artifact.config = {{"command", "excursion"}, {"x", a.x.json()}, {"T", a.T}, {"dt", a.dt}};
  o.artifact.columns = {"t", "d"};
  for (std::size_t k = 0; k < profile.times.size(); ++k)
    o.artifact.rows.push_back({profile.times[k], profile.shortvec[k]});
  Json mins = Json::array();
  for (const auto& m : minima) mins.push_back({{"t", m.t}, {"d", m.d}, {"interior", m.interior}});
  o.artifact.extra["minima"] = mins;
  o.artifact.extra["exponent"] = {{"estimate", est.estimate},
                                  {"low_confidence", est.low_confidence},
                                  {"minima_used", est.minima_used}};
  o.summary = "exponent=" + format_double(est.estimate) + (est.low_confidence ? " (low confidence)" : "");
  return o;
}

struct CfArgs {
  XArg x;
  std::size_t k = 10;
};

Outcome run_cf(CfArgs a) {
  a.x.resolve();
  require(a.k >= 1, "--k must be >= 1");
  const auto cf = a.x.exact ? modular::cf_expansion(*a.x.exact, a.k) : modular::cf_expansion(a.x.value, a.k);
  const auto conv = modular::convergents(cf.quotients);
  Outcome o;
  o.artifact.config = {{"command", "cf"}, {"x", a.x.json()}, {"k", a.k}};
  o.artifact.columns = {"k", "a", "p", "q"};
  std::string s = "[";
  for (std::size_t i = 0; i < cf.quotients.size(); ++i) {
    o.artifact.rows.push_back({i, cf.quotients[i].get_str(), conv[i].first.get_str(), conv[i].second.get_str()});
    s += (i == 0 ? "" : i == 1 ? "; " : ", ") + cf.quotients[i].get_str();
  }
  o.artifact.extra["terminated"] = cf.terminated;
  o.summary = s + "]";
  return o;
}

// ---- cover

struct CoverArgs {
  int n = 2;
  BoxArgs box;
  std::string gamma = "1", c = "1";
  std::int64_t l = 0, hmax = 0;
};

Outcome run_cover(const CoverArgs& a, const Common& c) {
  const std::size_t d = resolve_dim(a.n, 0);
  const auto box = a.box.resolve(d);
  const Rational gamma = parse_rational(a.gamma), cc = parse_rational(a.c);
  const auto boxes = limsup::build_cover(box, gamma, a.l, a.hmax, cc, {c.threads, rational::default_budget()});
  Outcome o;
  o.artifact.config = {{"command", "cover"}, {"n", a.n}, {"box", box_json(box)}, {"gamma", to_string(gamma)},
                       {"l", a.l},           {"hmax", a.hmax}, {"c", to_string(cc)}};
  o.artifact.columns = {"h"};
  for (auto& col : coord_columns(d)) o.artifact.columns.push_back(col);
  for (const char* col : {"R", "Rv", "exact", "cubes"}) o.artifact.columns.push_back(col);
  for (const auto& b : boxes) {
    std::vector<Json> row{b.center().height.get_str()};
    for (const auto& q : b.center().coords) row.push_back(io::rational_json(q));
    row.push_back(io::rational_json(b.horizontal_radius()));
    row.push_back(io::rational_json(b.vertical_radius()));
    row.push_back(b.exact_radii());
    row.push_back(limsup::subdivide_count(b, a.n).get_str());
    o.artifact.rows.push_back(std::move(row));
  }
  o.summary = std::to_string(boxes.size()) + " boxes";
  return o;
}

// ---- cantor

struct CantorArgs {
  int n = 2;
  std::string gamma = "2", eps = "1/10", r0 = "1/4", schedule, root = "-1/2,1/2";
  bool boxes = true;
};

Json box_dump(const limsup::CygBox& b) {
  return Json{{"center", io::rational_list_json(b.center().coords)},
              {"height", b.center().height.get_str()},
              {"R", to_string(b.horizontal_radius())},
              {"Rv", to_string(b.vertical_radius())}};
}

Outcome run_cantor(const CantorArgs& a, const Common& c) {
  require(!a.schedule.empty(), "--schedule is required");
  const auto schedule = parse_int_list(a.schedule);
  const auto root_bounds = parse_rational_list(a.root);
  require(root_bounds.size() == 2 && root_bounds[0] < root_bounds[1], "--root takes lo,hi");
  limsup::CantorParams params;
  params.n = a.n;
  params.gamma = parse_rational(a.gamma);
  params.epsilon = parse_rational(a.eps);
  params.r0 = parse_rational(a.r0);
  params.options = {c.threads, rational::default_budget()};
  require(a.n >= 2, "n must be >= 2");
  const std::size_t d = static_cast<std::size_t>(2 * a.n - 1);
  const Rational mid = (root_bounds[0] + root_bounds[1]) / 2, half = (root_bounds[1] - root_bounds[0]) / 2;
  const limsup::CygBox root(rational::make_point(std::vector<Rational>(d, mid)), half, half);
  for (std::size_t j = 0; j < schedule.size(); ++j) {
    std::span<const std::int64_t> prefix(schedule.data(), j);
    require(limsup::schedule_admits(prefix, schedule[j]),
            "schedule entry " + std::to_string(schedule[j]) + " violates the scale inequality");
  }

  limsup::CantorTree tree = limsup::cantor_start(params, root);
  for (std::int64_t l : schedule) {
    tree = limsup::cantor_extend(tree, l);
    if (tree.degenerate()) break;
  }

  Outcome o;
  o.artifact.config = {{"command", "cantor"},
                       {"n", a.n},
                       {"gamma", to_string(params.gamma)},
                       {"eps", to_string(params.epsilon)},
                       {"r0", to_string(params.r0)},
                       {"schedule", schedule},
                       {"root", io::rational_list_json(root_bounds)},
                       {"boxes", a.boxes}};
  o.artifact.columns = {"j", "l", "boxes", "candidates", "delta", "diameter", "log_inv_delta", "lower_bound"};
  const auto stats = tree.stats();
  const double k = 2.0 * a.n - 1.0;
  std::vector<double> bounds;
  if (!stats.empty()) {
    bool valid = true;
    for (const auto& s : stats) valid = valid && s.log_inv_diam > 0.0;
    if (valid) bounds = limsup::running_lower_bounds(stats, k);
  }
  for (std::size_t j = 1; j < tree.levels.size(); ++j) {
    const auto& level = tree.levels[j];
    o.artifact.rows.push_back({j - 1, level.l, level.boxes.size(), level.candidates, level.delta.get_d(),
                               level.diameter, stats[j - 1].log_inv_delta,
                               bounds.empty() ? Json(nullptr) : Json(bounds[j - 1])});
  }
  const auto report = limsup::check_tree_like(tree);
  o.artifact.extra["tree_like"] = {{"single_root", report.single_root},
                                   {"disjoint", report.disjoint},
                                   {"nested", report.nested},
                                   {"diameters_decreasing", report.diameters_decreasing}};
  o.artifact.extra["degenerate_level"] =
      tree.degenerate_level ? Json(*tree.degenerate_level) : Json(nullptr);
  if (c.format == "json" && a.boxes) {
    Json levels = Json::array();
    for (std::size_t j = 0; j < tree.levels.size(); ++j) {
      Json bs = Json::array();
      for (std::size_t i = 0; i < tree.levels[j].boxes.size(); ++i) {
        Json b = box_dump(tree.levels[j].boxes[i]);
        b["parent"] = tree.levels[j].parents[i];
        bs.push_back(std::move(b));
      }
      levels.push_back({{"j", j}, {"l", tree.levels[j].l}, {"delta", to_string(tree.levels[j].delta)},
                        {"boxes", std::move(bs)}});
    }
    o.artifact.extra["levels"] = std::move(levels);
  }
  if (tree.degenerate()) {
    o.code = kExitDegenerate;
    o.summary = "degenerate level " + std::to_string(*tree.degenerate_level) + "; partial tree with " +
                std::to_string(tree.levels.size() - 1) + " levels";
  } else {
    o.summary = std::to_string(tree.levels.size() - 1) + " levels, " +
                std::to_string(tree.levels.back().boxes.size()) + " leaves" +
                (bounds.empty() ? "" : ", bound=" + format_double(bounds.back()));
  }
  return o;
}

// ---- boxdim

struct BoxdimArgs {
  std::string source = "segment", eps, file, metric = "euclidean";
  std::size_t points = 0;
  int depth = 8;
  std::uint64_t seed = 1;
};

boxdim::PointCloud read_cloud(const std::string& path, boxdim::Metric metric) {
  std::ifstream f(path);
  require(static_cast<bool>(f), "cannot read " + path);
  std::vector<double> coords;
  std::size_t arity = 0;
  std::string line;
  while (std::getline(f, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<double> row;
    bool numeric = true;
    for (const auto& cell : split(line)) {
      try {
        row.push_back(parse_rational(cell).get_d());
      } catch (const InvalidInput&) {
        numeric = false;
        break;
      }
    }
    if (!numeric) continue;  // header line
    require(arity == 0 || row.size() == arity, "inconsistent arity in " + path);
    arity = row.size();
    coords.insert(coords.end(), row.begin(), row.end());
  }
  require(arity > 0, "no points in " + path);
  return boxdim::PointCloud(arity, std::move(coords), metric);
}

Outcome run_boxdim(const BoxdimArgs& a, const Common& c) {
  require(!a.eps.empty(), "--eps list is required");
  const auto eps = parse_double_list(a.eps);
  require(a.metric == "euclidean" || a.metric == "heisenberg", "--metric is euclidean or heisenberg");
  const auto metric = a.metric == "euclidean" ? boxdim::Metric::euclidean : boxdim::Metric::heisenberg_right_invariant;
  std::mt19937_64 rng(a.seed);
  auto uniform = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  std::vector<double> coords;
  std::size_t arity = 1;
  std::size_t count = a.points;
  if (a.source == "segment") {
    if (count == 0) count = 1001;
    require(count >= 2, "--points must be >= 2");
    for (std::size_t i = 0; i < count; ++i) coords.push_back(static_cast<double>(i) / static_cast<double>(count - 1));
  } else if (a.source == "cantor") {
    require(a.depth >= 0 && a.depth <= 20, "--depth must lie in [0, 20]");
    const double scale = std::pow(3.0, a.depth);
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << a.depth); ++m) {
      std::uint64_t left = 0, pow3 = 1;
      for (int b = 0; b < a.depth; ++b, pow3 *= 3)
        if (m >> b & 1) left += 2 * pow3;
      // Left and right endpoints of each depth-level interval.
      coords.push_back(static_cast<double>(left) / scale);
      coords.push_back(static_cast<double>(left + 1) / scale);
    }
  } else if (a.source == "square") {
    if (count == 0) count = 100000;
    arity = 2;
    for (std::size_t i = 0; i < 2 * count; ++i) coords.push_back(uniform());
  } else if (a.source == "file") {
    require(!a.file.empty(), "--file is required for --source file");
  } else {
    throw InvalidInput("unknown --source: " + a.source);
  }
  const boxdim::PointCloud cloud = a.source == "file" ? read_cloud(a.file, metric)
                                                      : boxdim::PointCloud(arity, std::move(coords), metric);
  const auto res = boxdim::fit_dimension(cloud, eps, c.threads);

  Outcome o;
  Json eps_json = Json::array();
  for (double e : eps) eps_json.push_back(e);
  o.artifact.config = {{"command", "boxdim"}, {"source", a.source}, {"metric", a.metric},  {"eps", eps_json},
                       {"points", cloud.size()}, {"depth", a.depth}, {"seed", a.seed}};
  if (a.source == "file") o.artifact.config["file"] = a.file;
  o.artifact.columns = {"eps", "N"};
  Json saturated = Json::array();
  for (const auto& s : res.scales) {
    o.artifact.rows.push_back({s.eps, s.count});
    if (s.saturated) saturated.push_back(s.eps);
  }
  o.artifact.extra["fit"] = fit_json(res.fit);
  o.artifact.extra["saturated_eps"] = saturated;
  o.artifact.extra["all_saturated"] = res.all_saturated;
  o.summary = res.fitted ? "slope=" + format_double(res.fit.slope) + " residual=" + format_double(res.fit.residual)
                         : std::string("insufficient unsaturated scales");
  return o;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Diophantine approximation laboratory on the Heisenberg group and the modular surface", "jarnik"};
  app.require_subcommand(1);
  Common common;
  app.add_option("--format", common.format, "output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", common.out, "write the artifact to this path");
  app.add_option("--threads", common.threads, "worker threads")->check(CLI::Range(1u, 1024u));

  std::function<Outcome()> job;

  FormulaArgs fa;
  auto* formula = app.add_subcommand("formula", "closed-form dimension formulas");
  formula->add_flag("--heisenberg", fa.heisenberg, "(gamma + 1)/gamma n - 1");
  formula->add_flag("--classical", fa.classical, "2/(1+gamma) and 2 + 2/(1+gamma)");
  formula->add_flag("--multi-cusp", fa.multi, "rank-one formula at the minimal exponent");
  formula->add_option("--gamma", fa.gamma, "exponent (exact rational)");
  formula->add_option("--gammas", fa.gammas, "per-cusp exponents");
  formula->add_option("--n", fa.n, "Heisenberg rank n");
  formula->add_option("--alpha", fa.alpha, "root alpha");
  formula->add_option("--dims", fa.dims, "dims g_-2a,g_-a,g_0,g_a,g_2a");
  formula->callback([&] { job = [&] { return run_formula(fa); }; });

  EnumerateArgs ea;
  auto* enumerate = app.add_subcommand("enumerate", "rational points by height");
  enumerate->add_option("--n", ea.n, "Heisenberg rank n (dimension 2n-1)");
  enumerate->add_option("--dim", ea.dim, "explicit dimension, overrides --n");
  ea.box.add(enumerate);
  enumerate->add_option("--C", ea.C, "height band (C/2, C]");
  enumerate->add_option("--hmin", ea.hmin, "heights above hmin");
  enumerate->add_option("--hmax", ea.hmax, "heights up to hmax");
  enumerate->callback([&] { job = [&] { return run_enumerate(ea, common); }; });

  CountArgs ca;
  auto* count = app.add_subcommand("count-slope", "log-log growth of height-band counts");
  count->add_option("--n", ca.n, "Heisenberg rank n (dimension 2n-1)");
  count->add_option("--dim", ca.dim, "explicit dimension, overrides --n (1 for the Farey control)");
  ca.box.add(count);
  count->add_option("--C", ca.C, "band scales, comma separated");
  count->callback([&] { job = [&] { return run_count_slope(ca, common); }; });

  WitnessArgs wa;
  auto* witnesses = app.add_subcommand("witnesses", "rational points closer than C / h^gamma");
  witnesses->add_option("--point", wa.point, "point coordinates x1,y1,...,v");
  witnesses->add_option("--gamma", wa.gamma, "exponent");
  witnesses->add_option("--C", wa.C, "constant");
  witnesses->add_option("--hmax", wa.hmax, "height truncation");
  wa.box.add(witnesses);
  witnesses->callback([&] { job = [&] { return run_witnesses(wa, common); }; });

  ExcursionArgs xa;
  auto* excursion = app.add_subcommand("excursion", "shortest vector along a_t u_x Z^2");
  excursion->add_option("--x", xa.x.text, "x as a rational, decimal, or 'golden'");
  excursion->add_option("--T", xa.T, "horizon");
  excursion->add_option("--dt", xa.dt, "time step");
  excursion->callback([&] { job = [&] { return run_excursion(xa, common); }; });

  CfArgs fa2;
  auto* cf = app.add_subcommand("cf", "continued fraction expansion");
  cf->add_option("--x", fa2.x.text, "x as a rational, decimal, or 'golden'");
  cf->add_option("--k", fa2.k, "number of partial quotients");
  cf->callback([&] { job = [&] { return run_cf(fa2); }; });

  CoverArgs cva;
  auto* cover = app.add_subcommand("cover", "Cygan boxes around rational points with l < h <= hmax");
  cover->add_option("--n", cva.n, "Heisenberg rank n");
  cva.box.add(cover);
  cover->add_option("--gamma", cva.gamma, "exponent");
  cover->add_option("--l", cva.l, "lower height (exclusive)");
  cover->add_option("--hmax", cva.hmax, "upper height");
  cover->add_option("--c", cva.c, "radius constant");
  cover->callback([&] { job = [&] { return run_cover(cva, common); }; });

  CantorArgs cta;
  auto* cantor = app.add_subcommand("cantor", "tree-like Cantor construction");
  cantor->add_option("--n", cta.n, "Heisenberg rank n");
  cantor->add_option("--gamma", cta.gamma, "exponent");
  cantor->add_option("--eps", cta.eps, "exponent increment for children");
  cantor->add_option("--r0", cta.r0, "child radius constant");
  cantor->add_option("--schedule", cta.schedule, "scales l1,l2,...");
  cantor->add_option("--root", cta.root, "root cube lo,hi");
  cantor->add_flag("!--no-boxes", cta.boxes, "omit per-level box lists from JSON");
  cantor->callback([&] { job = [&] { return run_cantor(cta, common); }; });

  BoxdimArgs ba;
  auto* box = app.add_subcommand("boxdim", "box-counting dimension of a point cloud");
  box->add_option("--source", ba.source, "segment, cantor, square, or file");
  box->add_option("--file", ba.file, "CSV of points for --source file");
  box->add_option("--metric", ba.metric, "euclidean or heisenberg");
  box->add_option("--eps", ba.eps, "scales, comma separated");
  box->add_option("--points", ba.points, "sample size");
  box->add_option("--depth", ba.depth, "Cantor depth");
  box->add_option("--seed", ba.seed, "sampling seed");
  box->callback([&] { job = [&] { return run_boxdim(ba, common); }; });

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }

  try {
    Outcome o = job();
    o.artifact.config["format"] = common.format;
    const std::string text = io::render(o.artifact, common.format);
    if (common.out.empty() && o.artifact.config["command"] == "formula") {
      out << o.summary << "\n";  // the value itself is the artifact
    } else if (common.out.empty()) {
      out << text;
      err << o.summary << "\n";
    } else {
      io::write_file(common.out, text);
      out << o.summary << "\n";
    }
    return o.code;
  } catch (const InvalidInput& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const ResourceLimit& e) {
    err << "resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace jarnik::cli
