#include "nrt/numeric.hpp"

#include <algorithm>
#include <cctype>

namespace nrt {

Integer ipow(long base, unsigned long exponent) {
  Integer b = base;
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), exponent);
  return out;
}

Rational rpow(const Rational& base, unsigned long exponent) {
  Rational out = 1;
  for (unsigned long i = 0; i < exponent; ++i) out *= base;
  return out;
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

Integer factorial(unsigned long n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

Rational binomial_real(const Rational& a, long m) {
  if (m < 0) return 0;
  Rational num = 1;
  for (long j = 0; j < m; ++j) num *= (a - j);
  Rational out = num / Rational(factorial(static_cast<unsigned long>(m)));
  out.canonicalize();
  return out;
}

double binomial_real(double a, long m) {
  if (m < 0) return 0.0;
  double out = 1.0;
  for (long j = 0; j < m; ++j) out *= (a - static_cast<double>(j)) / static_cast<double>(j + 1);
  return out;
}

Integer floor_of(const Rational& x) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return out;
}

Integer ceil_of(const Rational& x) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return out;
}

std::string to_string(const Rational& x) {
  Rational c = x;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

std::string to_string(const Integer& x) { return x.get_str(); }

bool is_integer(const Rational& x) {
  Rational c = x;
  c.canonicalize();
  return c.get_den() == 1;
}

namespace {

Integer parse_integer(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty integer literal");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) throw std::invalid_argument("bad integer literal");
  for (std::size_t i = start; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw std::invalid_argument("bad integer literal: " + std::string(s));
  std::string body(s[0] == '+' ? s.substr(1) : s);
  return Integer(body, 10);
}

} // namespace

Rational parse_rational(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Integer num = parse_integer(trim(text.substr(0, slash)));
    Integer den = parse_integer(trim(text.substr(slash + 1)));
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rational out(num, den);
    out.canonicalize();
    return out;
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    bool negative = !whole.empty() && whole[0] == '-';
    if (!whole.empty() && (whole[0] == '-' || whole[0] == '+')) whole.remove_prefix(1);
    Integer w = whole.empty() ? Integer(0) : parse_integer(whole);
    Integer f = frac.empty() ? Integer(0) : parse_integer(frac);
    Rational out = Rational(w) + Rational(f, ipow(10, frac.size()));
    out.canonicalize();
    return negative ? Rational(-out) : out;
  }
  return Rational(parse_integer(text));
}

} // namespace nrt
