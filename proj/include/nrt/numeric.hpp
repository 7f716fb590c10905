#pragma once

// Exact integer/rational arithmetic shared by every module.

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace nrt {

using Integer = mpz_class;
using Rational = mpq_class;

/// Thrown when an instance exceeds a hard enumeration cap. Never a wrong answer.
class BudgetExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

Integer ipow(long base, unsigned long exponent);
Rational rpow(const Rational& base, unsigned long exponent);

Integer binomial(long n, long k);
Integer factorial(unsigned long n);

/// Generalized binomial a(a-1)...(a-m+1)/m! for rational a.
Rational binomial_real(const Rational& a, long m);
double binomial_real(double a, long m);

Integer floor_of(const Rational& x);
Integer ceil_of(const Rational& x);

/// "p/q" (or "p" when the denominator is 1).
std::string to_string(const Rational& x);
std::string to_string(const Integer& x);

/// Accepts "p/q", "p", or a finite decimal such as "-1.25".
Rational parse_rational(std::string_view text);

bool is_integer(const Rational& x);

} // namespace nrt
