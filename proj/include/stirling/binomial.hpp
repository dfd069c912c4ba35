#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>

#include "stirling/bigint.hpp"

namespace stirling {

// C(p,q) for p >= 0, with C(p,q) = 0 outside 0 <= q <= p.
inline BigInt binom(long p, long q) {
  if (p < 0) throw std::domain_error("binom: negative upper index");
  if (q < 0 || q > p) return 0;
  q = std::min(q, p - q);
  BigInt result = 1;
  for (long i = 1; i <= q; ++i) {
    result *= p - q + i;
    result /= i;  // divides exactly: result is C(p-q+i, i)
  }
  return result;
}

// Binomial coefficient under the conventions C(0,0) = C(-1,-1) = 1 and
// C(p,q) = 0 for p >= 0 > q. No other negative-argument pair has a value;
// reaching one is a caller bug.
inline BigInt binom_conventional(long p, long q) {
  if (p >= 0) return binom(p, q);
  if (p == -1 && q == -1) return 1;
  throw std::domain_error("binom_conventional: undefined pair (" +
                          std::to_string(p) + "," + std::to_string(q) + ")");
}

// Candidate extensions for binomials with negative upper index, used only
// by the experimental compact first-kind diagonal evaluation.
enum class BinomConvention {
  // The base conventions verbatim; pairs they leave undefined evaluate
  // to zero so the sum can still be formed and reported.
  strict,
  // Adds C(-1,j) = (-1)^j for j >= 0; other pairs with negative lower
  // index are zero (except C(-1,-1) = 1, kept from the base conventions).
  pascal_extension,
};

inline const char* convention_name(BinomConvention c) {
  return c == BinomConvention::strict ? "strict" : "pascal-extension";
}

inline BigInt binom_under(long p, long q, BinomConvention convention) {
  if (p >= 0) return binom(p, q);
  if (p == -1 && q == -1) return 1;
  switch (convention) {
    case BinomConvention::strict:
      if (p == -1) return 0;
      break;
    case BinomConvention::pascal_extension:
      if (p == -1 && q >= 0) return (q % 2 == 0) ? BigInt(1) : BigInt(-1);
      if (p == -1) return 0;  // q <= -2
      break;
  }
  throw std::domain_error("binom_under: convention cannot evaluate (" +
                          std::to_string(p) + "," + std::to_string(q) + ")");
}

// k(k-1)...(k-len+1); zero once len exceeds k.
inline BigInt falling_factorial(long k, long len) {
  if (len < 0) throw std::domain_error("falling_factorial: negative length");
  BigInt result = 1;
  for (long j = 0; j < len; ++j) result *= k - j;
  return result;
}

}  // namespace stirling
