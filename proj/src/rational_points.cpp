#include "jarnik/rational_points.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>
#include <thread>

namespace jarnik::rational {

BigInt height(std::span<const Rational> coords) {
  BigInt l = 1;
  for (const Rational& q : coords) {
    Rational r(q);
    r.canonicalize();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), r.get_den_mpz_t());
  }
  return abs(l);
}

RationalPoint make_point(std::vector<Rational> coords) {
  for (Rational& q : coords) q.canonicalize();
  RationalPoint p{std::move(coords), 1};
  p.height = height(p.coords);
  return p;
}

bool lex_less(const RationalPoint& a, const RationalPoint& b) {
  return std::lexicographical_compare(a.coords.begin(), a.coords.end(), b.coords.begin(),
                                      b.coords.end());
}

heisenberg::HeisenbergPoint to_heisenberg(const RationalPoint& r) {
  std::vector<double> c;
  c.reserve(r.coords.size());
  for (const Rational& q : r.coords) c.push_back(q.get_d());
  return heisenberg::HeisenbergPoint::from_coords(c);
}

heisenberg::ExactHeisenbergPoint to_exact_heisenberg(const RationalPoint& r) {
  return heisenberg::ExactHeisenbergPoint::from_coords(r.coords);
}

EnumBox::EnumBox(std::vector<Rational> lower, std::vector<Rational> upper)
    : lower_(std::move(lower)), upper_(std::move(upper)) {
  require(!lower_.empty(), "EnumBox needs at least one coordinate");
  require(lower_.size() == upper_.size(), "EnumBox bounds have different lengths");
  for (std::size_t i = 0; i < lower_.size(); ++i) {
    lower_[i].canonicalize();
    upper_[i].canonicalize();
    require(lower_[i] < upper_[i], "EnumBox needs lower < upper in every coordinate");
  }
}

EnumBox EnumBox::cube(std::size_t dim, const Rational& lo, const Rational& hi) {
  return EnumBox(std::vector<Rational>(dim, lo), std::vector<Rational>(dim, hi));
}

Rational EnumBox::volume() const {
  Rational v = 1;
  for (std::size_t i = 0; i < dim(); ++i) v *= upper_[i] - lower_[i];
  return v;
}

bool EnumBox::contains(std::span<const Rational> coords) const {
  if (coords.size() != dim()) return false;
  for (std::size_t i = 0; i < dim(); ++i)
    if (coords[i] < lower_[i] || !(coords[i] < upper_[i])) return false;
  return true;
}

double default_budget() {
  if (const char* env = std::getenv("JARNIK_ENUM_BUDGET")) {
    char* end = nullptr;
    double v = std::strtod(env, &end);
    if (end != env && v > 0) return v;
  }
  return 2e8;
}

double enumeration_cost(const EnumBox& box, std::int64_t h_lo, std::int64_t h_hi) {
  const double points =
      box.volume().get_d() * std::pow(static_cast<double>(h_hi), static_cast<double>(box.dim() + 1));
  return std::max(points, static_cast<double>(h_hi - std::max<std::int64_t>(h_lo, 0)));
}

void check_budget(const EnumBox& box, std::int64_t h_lo, std::int64_t h_hi, double budget) {
  const double cost = enumeration_cost(box, h_lo, h_hi);
  if (cost > budget)
    throw ResourceLimit("enumeration estimate " + format_double(cost) + " exceeds budget " +
                        format_double(budget));
}

namespace detail {

ScaledCeil::ScaledCeil(const Rational& q) : q_(q) {
  if (mpz_fits_slong_p(q.get_num_mpz_t()) && mpz_fits_slong_p(q.get_den_mpz_t())) {
    fast_ = true;
    num_ = q.get_num().get_si();
    den_ = q.get_den().get_si();
  }
}

std::int64_t ScaledCeil::operator()(std::int64_t h) const {
  if (fast_) {
    const __int128 p = num_ * h;
    __int128 quot = p / den_;
    if (p % den_ != 0 && p > 0) ++quot;  // den_ > 0, so truncation already rounds negatives up
    return static_cast<std::int64_t>(quot);
  }
  return to_int64(ceil(q_ * Rational(static_cast<long>(h))));
}

}  // namespace detail

namespace {

struct RawPoints {
  std::size_t dim = 0;
  std::vector<std::int64_t> data;  // dim numerators then h, per point

  std::size_t size() const { return dim == 0 ? 0 : data.size() / (dim + 1); }
  const std::int64_t* at(std::size_t i) const { return data.data() + i * (dim + 1); }
};

bool raw_less(const std::int64_t* a, const std::int64_t* b, std::size_t dim) {
  const __int128 ha = a[dim], hb = b[dim];
  for (std::size_t i = 0; i < dim; ++i) {
    const __int128 l = a[i] * hb, r = b[i] * ha;
    if (l != r) return l < r;
  }
  return false;
}

std::vector<std::pair<std::int64_t, std::int64_t>> split_range(std::int64_t h_lo, std::int64_t h_hi,
                                                               unsigned threads) {
  h_lo = std::max<std::int64_t>(h_lo, 0);
  std::vector<std::pair<std::int64_t, std::int64_t>> chunks;
  const std::int64_t total = h_hi - h_lo;
  if (total <= 0) return chunks;
  const std::int64_t parts = std::clamp<std::int64_t>(threads, 1, total);
  for (std::int64_t k = 0; k < parts; ++k) {
    chunks.emplace_back(h_lo + total * k / parts, h_lo + total * (k + 1) / parts);
  }
  return chunks;
}

template <class Job>
void run_chunks(const std::vector<std::pair<std::int64_t, std::int64_t>>& chunks, Job&& job) {
  if (chunks.size() <= 1) {
    for (std::size_t k = 0; k < chunks.size(); ++k) job(k);
    return;
  }
  std::vector<std::thread> workers;
  workers.reserve(chunks.size());
  for (std::size_t k = 0; k < chunks.size(); ++k) workers.emplace_back([&job, k] { job(k); });
  for (auto& w : workers) w.join();
}

RationalPoint from_raw(const std::int64_t* raw, std::size_t dim) {
  RationalPoint p;
  p.coords.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    Rational q(static_cast<long>(raw[i]), static_cast<long>(raw[dim]));
    q.canonicalize();
    p.coords.push_back(std::move(q));
  }
  p.height = static_cast<long>(raw[dim]);
  return p;
}

}  // namespace

std::vector<RationalPoint> enumerate_heights(const EnumBox& box, std::int64_t h_lo, std::int64_t h_hi,
                                             const EnumOptions& options) {
  require(h_hi >= 1, "height range needs an upper end >= 1");
  check_budget(box, h_lo, h_hi, options.budget);
  const std::size_t d = box.dim();
  const auto chunks = split_range(h_lo, h_hi, options.threads);
  std::vector<RawPoints> parts(chunks.size());
  run_chunks(chunks, [&](std::size_t k) {
    RawPoints& out = parts[k];
    out.dim = d;
    for_each_point(box, chunks[k].first, chunks[k].second,
                   [&](std::span<const std::int64_t> nums, std::int64_t h) {
                     out.data.insert(out.data.end(), nums.begin(), nums.end());
                     out.data.push_back(h);
                   });
  });
  RawPoints all;
  all.dim = d;
  for (auto& p : parts) all.data.insert(all.data.end(), p.data.begin(), p.data.end());
  std::vector<std::size_t> order(all.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return raw_less(all.at(a), all.at(b), d); });
  std::vector<RationalPoint> points;
  points.reserve(order.size());
  for (std::size_t i : order) points.push_back(from_raw(all.at(i), d));
  return points;
}

std::vector<RationalPoint> enumerate_height_band(const EnumBox& box, std::int64_t C,
                                                 const EnumOptions& options) {
  require(C >= 1, "height band needs C >= 1");
  return enumerate_heights(box, C / 2, C, options);
}

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::vector<std::int64_t> distinct_primes(std::int64_t h, const std::vector<std::int32_t>& spf) {
  std::vector<std::int64_t> primes;
  if (h < static_cast<std::int64_t>(spf.size())) {
    while (h > 1) {
      const std::int64_t p = spf[static_cast<std::size_t>(h)];
      primes.push_back(p);
      while (h % p == 0) h /= p;
    }
    return primes;
  }
  for (std::int64_t p = 2; p * p <= h; ++p) {
    if (h % p == 0) {
      primes.push_back(p);
      while (h % p == 0) h /= p;
    }
  }
  if (h > 1) primes.push_back(h);
  return primes;
}

std::vector<std::int32_t> smallest_prime_factors(std::int64_t limit) {
  std::vector<std::int32_t> spf(static_cast<std::size_t>(limit + 1), 0);
  for (std::int64_t i = 2; i <= limit; ++i) {
    if (spf[static_cast<std::size_t>(i)] != 0) continue;
    for (std::int64_t j = i; j <= limit; j += i)
      if (spf[static_cast<std::size_t>(j)] == 0) spf[static_cast<std::size_t>(j)] = static_cast<std::int32_t>(i);
  }
  return spf;
}

}  // namespace

std::uint64_t count_heights(const EnumBox& box, std::int64_t h_lo, std::int64_t h_hi, unsigned threads) {
  require(h_hi >= 1, "height range needs an upper end >= 1");
  const std::size_t d = box.dim();
  const std::int64_t sieve_limit = std::min<std::int64_t>(h_hi, 10'000'000);
  const auto spf = smallest_prime_factors(sieve_limit);
  const auto chunks = split_range(h_lo, h_hi, threads);
  std::vector<unsigned __int128> partial(chunks.size(), 0);
  run_chunks(chunks, [&](std::size_t k) {
    std::vector<detail::ScaledCeil> lo, hi;
    for (std::size_t i = 0; i < d; ++i) {
      lo.emplace_back(box.lower()[i]);
      hi.emplace_back(box.upper()[i]);
    }
    std::vector<std::int64_t> first(d), last(d);
    unsigned __int128 total = 0;
    for (std::int64_t h = std::max<std::int64_t>(chunks[k].first + 1, 1); h <= chunks[k].second; ++h) {
      bool empty = false;
      for (std::size_t i = 0; i < d && !empty; ++i) {
        first[i] = lo[i](h);
        last[i] = hi[i](h) - 1;
        empty = last[i] < first[i];
      }
      if (empty) continue;
      const auto primes = distinct_primes(h, spf);
      __int128 count = 0;
      const std::size_t subsets = std::size_t{1} << primes.size();
      for (std::size_t mask = 0; mask < subsets; ++mask) {
        std::int64_t e = 1;
        int sign = 1;
        for (std::size_t b = 0; b < primes.size(); ++b) {
          if (mask & (std::size_t{1} << b)) {
            e *= primes[b];
            sign = -sign;
          }
        }
        __int128 term = 1;
        for (std::size_t i = 0; i < d; ++i)
          term *= floor_div(last[i], e) - floor_div(first[i] - 1, e);
        count += sign * term;
      }
      total += static_cast<unsigned __int128>(count);
    }
    partial[k] = total;
  });
  unsigned __int128 sum = 0;
  for (auto p : partial) sum += p;
  if (sum > static_cast<unsigned __int128>(UINT64_MAX)) throw ResourceLimit("point count overflows 64 bits");
  return static_cast<std::uint64_t>(sum);
}

CountSlope count_slope(const EnumBox& box, std::vector<std::int64_t> C_values, unsigned threads) {
  std::sort(C_values.begin(), C_values.end());
  C_values.erase(std::unique(C_values.begin(), C_values.end()), C_values.end());
  require(C_values.size() >= 3, "count_slope needs at least three distinct C values");
  require(C_values.front() >= 1, "count_slope needs C >= 1");
  CountSlope out{DimensionFit{}, CountSeries{{}, box}, {}};
  std::vector<double> xs, ys;
  for (std::int64_t C : C_values) {
    const std::uint64_t n = count_height_band(box, C, threads);
    out.series.bands.push_back({C, n});
    if (n == 0) {
      out.empty_bands.push_back(C);
      continue;
    }
    xs.push_back(std::log(static_cast<double>(C)));
    ys.push_back(std::log(static_cast<double>(n)));
  }
  require(xs.size() >= 2, "count_slope: fewer than two nonempty bands");
  out.fit = least_squares(xs, ys);
  return out;
}

std::vector<Witness> diophantine_witnesses(const heisenberg::HeisenbergPoint& lambda, double gamma,
                                           double C, std::int64_t H_max, const EnumBox& box,
                                           const EnumOptions& options) {
  require(gamma >= 1.0, "Diophantine type needs gamma >= 1");
  require(C > 0.0 && std::isfinite(C), "witness constant must be positive");
  require(H_max >= 1, "H_max must be >= 1");
  const std::size_t d = box.dim();
  require(d == lambda.horizontal_size() + 1, "box dimension does not match the point (2n-1)");
  check_budget(box, 0, H_max, options.budget);

  const std::vector<double> lam = lambda.coords();
  const auto chunks = split_range(0, H_max, options.threads);
  std::vector<RawPoints> parts(chunks.size());
  std::vector<std::vector<std::pair<double, double>>> metrics(chunks.size());
  run_chunks(chunks, [&](std::size_t k) {
    std::vector<double> x(d), u(d - 1);
    parts[k].dim = d;
    for_each_point(box, chunks[k].first, chunks[k].second,
                   [&](std::span<const std::int64_t> nums, std::int64_t h) {
                     const double hd = static_cast<double>(h);
                     for (std::size_t i = 0; i < d; ++i) x[i] = static_cast<double>(nums[i]) / hd;
                     double z2 = 0.0, twist = 0.0;
                     for (std::size_t i = 0; i + 1 < d; ++i) {
                       u[i] = lam[i] - x[i];
                       z2 += u[i] * u[i];
                     }
                     for (std::size_t i = 0; i + 1 < d; i += 2) twist += u[i + 1] * x[i] - u[i] * x[i + 1];
                     const double w = lam[d - 1] - x[d - 1] - 2.0 * twist;
                     const double dist = std::sqrt(std::hypot(z2, w));
                     const double threshold = C / std::pow(hd, gamma);
                     if (dist < threshold) {
                       parts[k].data.insert(parts[k].data.end(), nums.begin(), nums.end());
                       parts[k].data.push_back(h);
                       metrics[k].emplace_back(dist, threshold);
                     }
                   });
  });
  std::vector<Witness> out;
  for (std::size_t k = 0; k < parts.size(); ++k)
    for (std::size_t i = 0; i < parts[k].size(); ++i)
      out.push_back({from_raw(parts[k].at(i), d), metrics[k][i].first, metrics[k][i].second});
  std::sort(out.begin(), out.end(),
            [](const Witness& a, const Witness& b) { return lex_less(a.point, b.point); });
  return out;
}

}  // namespace jarnik::rational
