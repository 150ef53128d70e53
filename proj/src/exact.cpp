#include "jarnik/exact.hpp"

#include <charconv>
#include <cmath>
#include <limits>

#include "jarnik/errors.hpp"

namespace jarnik {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

Rational parse_decimal(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_part = s.substr(e + 1);
    bool exp_negative = false;
    if (!exp_part.empty() && (exp_part.front() == '+' || exp_part.front() == '-')) {
      exp_negative = exp_part.front() == '-';
      exp_part.remove_prefix(1);
    }
    if (!all_digits(exp_part) || exp_part.size() > 6)
      throw InvalidInput("malformed exponent in '" + std::string(s) + "'");
    exponent = std::stol(std::string(exp_part));
    if (exp_negative) exponent = -exponent;
    s = s.substr(0, e);
  }
  std::string digits;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = s.substr(0, dot);
    std::string_view frac_part = s.substr(dot + 1);
    if ((!int_part.empty() && !all_digits(int_part)) ||
        (!frac_part.empty() && !all_digits(frac_part)) || (int_part.empty() && frac_part.empty()))
      throw InvalidInput("malformed number '" + std::string(s) + "'");
    digits = std::string(int_part) + std::string(frac_part);
    exponent -= static_cast<long>(frac_part.size());
  } else {
    if (!all_digits(s)) throw InvalidInput("malformed number '" + std::string(s) + "'");
    digits = std::string(s);
  }
  BigInt mantissa(digits, 10);
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
  Rational q = exponent >= 0 ? Rational(mantissa * scale) : Rational(mantissa, scale);
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) throw InvalidInput("empty rational");
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view num = trim(s.substr(0, slash));
    std::string_view den = trim(s.substr(slash + 1));
    std::string_view num_digits = num;
    if (!num_digits.empty() && (num_digits.front() == '-' || num_digits.front() == '+'))
      num_digits.remove_prefix(1);
    if (!all_digits(num_digits) || !all_digits(den))
      throw InvalidInput("malformed rational '" + std::string(s) + "'");
    BigInt p(std::string(num_digits), 10);
    if (!num.empty() && num.front() == '-') p = -p;
    BigInt q(std::string(den), 10);
    if (q == 0) throw InvalidInput("zero denominator in '" + std::string(s) + "'");
    Rational r(p, q);
    r.canonicalize();
    return r;
  }
  return parse_decimal(s);
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    out.push_back(parse_rational(text.substr(start, comma - start)));
    start = comma + 1;
  }
  return out;
}

std::string to_string(const Rational& q) {
  Rational r(q);
  r.canonicalize();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational exact_from_double(double x) {
  if (!std::isfinite(x)) throw InvalidInput("non-finite value has no exact rational form");
  Rational q;
  mpq_set_d(q.get_mpq_t(), x);
  return q;
}

Rational exact_from_long_double(long double x) {
  if (!std::isfinite(x)) throw InvalidInput("non-finite value has no exact rational form");
  if (x == 0.0L) return Rational(0);
  int exponent = 0;
  const long double m = std::frexp(std::fabs(x), &exponent);  // m in [0.5, 1)
  const auto mantissa = static_cast<unsigned long long>(std::ldexp(m, 64));
  BigInt num;
  mpz_import(num.get_mpz_t(), 1, 1, sizeof(mantissa), 0, 0, &mantissa);
  Rational q(num);
  const long shift = static_cast<long>(exponent) - 64;
  if (shift >= 0)
    mpq_mul_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<unsigned long>(shift));
  else
    mpq_div_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<unsigned long>(-shift));
  return x < 0 ? Rational(-q) : q;
}

BigInt floor(const Rational& q) {
  BigInt out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

BigInt ceil(const Rational& q) {
  BigInt out;
  mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

std::int64_t to_int64(const BigInt& z) {
  if (!mpz_fits_slong_p(z.get_mpz_t())) throw InvalidInput("integer out of 64-bit range");
  static_assert(sizeof(long) == sizeof(std::int64_t));
  return z.get_si();
}

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  (void)ec;
  return std::string(buf, end);
}

}  // namespace jarnik
