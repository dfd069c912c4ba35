#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace stirling {

// Exact signed integer of unbounded magnitude and the exact fraction built
// on top of it. Rational values are kept in canonical form at all times:
// lowest terms, denominator strictly positive. Comparisons are exact.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Raised when a cross-check that can only fail through an implementation
// bug (exact divisibility, series coefficient structure, engine agreement
// in checked mode) does not hold.
class consistency_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("make_rational: zero denominator");
  Rational r(num);
  r /= Rational(den);
  return r;
}

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

// Exact conversion; the caller asserts integrality via `what`.
inline BigInt to_integer(const Rational& r, const char* what) {
  if (!is_integer(r))
    throw consistency_error(std::string(what) + ": value " + r.str() +
                            " is not an integer");
  return numerator(r);
}

inline BigInt ipow(const BigInt& base, unsigned long exp) {
  BigInt result = 1;
  BigInt b = base;
  while (exp != 0) {
    if (exp & 1u) result *= b;
    b *= b;
    exp >>= 1u;
  }
  return result;
}

inline Rational rpow(const Rational& base, unsigned long exp) {
  Rational result = 1;
  Rational b = base;
  while (exp != 0) {
    if (exp & 1u) result *= b;
    b *= b;
    exp >>= 1u;
  }
  return result;
}

inline BigInt factorial(long n) {
  if (n < 0) throw std::domain_error("factorial: negative argument");
  BigInt result = 1;
  for (long i = 2; i <= n; ++i) result *= i;
  return result;
}

// Quotient of an exact division; throws if the division leaves a remainder.
inline BigInt exact_div(const BigInt& num, const BigInt& den,
                        const char* what) {
  if (den == 0) throw std::domain_error("exact_div: zero divisor");
  BigInt q, r;
  boost::multiprecision::divide_qr(num, den, q, r);
  if (r != 0)
    throw consistency_error(std::string(what) + ": " + num.str() +
                            " not divisible by " + den.str());
  return q;
}

inline std::string dec(const BigInt& v) { return v.str(); }

// "p/q" in lowest terms, or a bare integer when q == 1.
inline std::string dec(const Rational& v) {
  if (is_integer(v)) return numerator(v).str();
  return numerator(v).str() + "/" + denominator(v).str();
}

}  // namespace stirling
