#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "stirling/bigint.hpp"
#include "stirling/binomial.hpp"
#include "stirling/formal_series.hpp"
#include "stirling/stirling_table.hpp"

namespace stirling {

enum class Engine {
  explicit_sum,
  triangular,
  diagonal_full,
  diagonal_simplified,
  egf,
  oracle,
};

inline const char* engine_name(Engine e) {
  switch (e) {
    case Engine::explicit_sum:        return "explicit";
    case Engine::triangular:          return "triangular";
    case Engine::diagonal_full:       return "diagonal-full";
    case Engine::diagonal_simplified: return "diagonal-simplified";
    case Engine::egf:                 return "egf";
    case Engine::oracle:              return "oracle";
  }
  return "?";
}

// S(n,k) by inclusion-exclusion: (1/k!) sum_i (-1)^i C(k,i) (k-i)^n.
// The division by k! is exact for every valid input; a remainder means a bug.
inline BigInt s2_explicit(int n, int k) {
  if (n < 0 || k < 0 || k > n)
    throw std::domain_error("s2_explicit: need 0 <= k <= n");
  BigInt sum = 0;
  for (int i = 0; i <= k; ++i) {
    const BigInt term = binom(k, i) * ipow(k - i, n);
    if (i % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  return exact_div(sum, factorial(k), "s2_explicit");
}

// S(n,k) from the double-sum diagonal recurrence for n > k >= 0:
//
//   S(n,k) = C(n,k) sum_{l=1}^{n-k} (-1)^l C(k,l)/C(n-k+l,n-k)
//                    sum_{i=0}^{l} (-1)^i C(n-k+l,l-i) S(n-k+i,i).
//
// Inner values come from the memoized triangle; the rational sum must
// collapse to an integer, which is checked.
inline BigInt s2_diagonal_full(const StirlingTable& table, int n, int k) {
  if (!(n > k && k >= 0))
    throw std::domain_error("s2_diagonal_full: need n > k >= 0");
  if (table.kind() != Kind::second)
    throw std::invalid_argument("s2_diagonal_full: second-kind table required");
  const int d = n - k;
  Rational acc = 0;
  for (int l = 1; l <= d; ++l) {
    const BigInt upper = binom(k, l);
    if (upper == 0) continue;
    BigInt inner = 0;
    for (int i = 0; i <= l; ++i) {
      const BigInt term = binom(d + l, l - i) * table.value(d + i, i);
      if (i % 2 == 0)
        inner += term;
      else
        inner -= term;
    }
    Rational contribution = make_rational(upper * inner, binom(d + l, d));
    if (l % 2 != 0) contribution = -contribution;
    acc += contribution;
  }
  acc *= Rational(binom(n, k));
  return to_integer(acc, "s2_diagonal_full");
}

// Addends of the collapsed single-sum diagonal recurrence. For k < n <= 2k
// these are the terms of
//
//   S(n,k) = (-1)^n sum_{i=max(0,2k-n)}^{k-1} (-1)^i C(n,i) C(i-1,2k-n-1) S(n-i,k-i),
//
// where C(-1,-1) = 1 covers the i = 0 term at n = 2k. For n > 2k the
// collapsed binomial is outside the adopted conventions, so the addends
// use the pre-collapsed alternating inner sum sum_{l=0}^{i-(2k-n)} (-1)^l C(i,l)
// instead, which needs no extension.
inline std::vector<BigInt> s2_diagonal_simplified_terms(const StirlingTable& table,
                                                        int n, int k) {
  if (!(n > k && k >= 1))
    throw std::domain_error("s2_diagonal_simplified: need n > k >= 1");
  if (table.kind() != Kind::second)
    throw std::invalid_argument("s2_diagonal_simplified: second-kind table required");
  std::vector<BigInt> terms;
  const int lo = std::max(0, 2 * k - n);
  for (int i = lo; i <= k - 1; ++i) {
    BigInt term;
    if (n <= 2 * k) {
      term = binom(n, i) * binom_conventional(i - 1, 2 * k - n - 1) *
             table.value(n - i, k - i);
      if (i % 2 != 0) term = -term;
      if (n % 2 != 0) term = -term;
    } else {
      BigInt inner = 0;
      for (int l = 0; l <= i - (2 * k - n); ++l) {
        const BigInt c = binom(i, l);
        if (c == 0) continue;
        if (l % 2 == 0)
          inner += c;
        else
          inner -= c;
      }
      term = binom(n, i) * inner * table.value(n - i, k - i);
    }
    terms.push_back(term);
  }
  return terms;
}

inline BigInt s2_diagonal_simplified(const StirlingTable& table, int n, int k,
                                     bool checked = true) {
  BigInt sum = 0;
  for (const BigInt& t : s2_diagonal_simplified_terms(table, n, k)) sum += t;
  if (checked && sum != table.value(n, k))
    throw consistency_error("s2_diagonal_simplified(" + std::to_string(n) + "," +
                            std::to_string(k) + ") = " + sum.str() +
                            ", triangular gives " + table.value(n, k).str());
  return sum;
}

namespace detail {

// Shared EGF column extraction: base^k / k! gives sum_n v(n,k) x^n / n!.
// Coefficients below x^k must vanish and every n! * coefficient must be an
// integer; both are structural and checked.
inline std::vector<BigInt> egf_column(const FormalSeries& base, int k, int n_max,
                                      const char* what) {
  const FormalSeries power = base.pow(k);
  std::vector<BigInt> values;
  values.reserve(n_max - k + 1);
  const BigInt k_fact = factorial(k);
  BigInt n_fact = 1;
  for (int n = 0; n <= n_max; ++n) {
    if (n > 0) n_fact *= n;
    if (n < k) {
      if (power[n] != 0)
        throw consistency_error(std::string(what) + ": nonzero coefficient below x^" +
                                std::to_string(k));
      continue;
    }
    const Rational scaled = power[n] * Rational(n_fact) / Rational(k_fact);
    values.push_back(to_integer(scaled, what));
  }
  return values;
}

}  // namespace detail

// [S(n,k)]_{n=k..n_max} as n! times the coefficients of (e^x-1)^k / k!.
inline std::vector<BigInt> s2_egf(int k, int n_max) {
  if (k < 0 || n_max < k) throw std::domain_error("s2_egf: need 0 <= k <= n_max");
  return detail::egf_column(FormalSeries::exp_minus_one(n_max), k, n_max, "s2_egf");
}

// [s(n,k)]_{n=k..n_max} as n! times the coefficients of ln(1+x)^k / k!.
inline std::vector<BigInt> s1_egf(int k, int n_max) {
  if (k < 0 || n_max < k) throw std::domain_error("s1_egf: need 0 <= k <= n_max");
  return detail::egf_column(FormalSeries::log_one_plus(n_max), k, n_max, "s1_egf");
}

// Verbatim evaluation of the first-kind double-sum diagonal recurrence
//
//   s(n,k) = sum_{m=1}^{n} sum_{l=k-m}^{k-1} (-1)^{k+m-l} C(n,l) C(l,k-m) s(n-l,k-l)
//
// for n >= k >= 1. The l = 0, m = k term reproduces s(n,k) itself with
// coefficient 1, so the sum is an identity to verify against the triangle,
// not a standalone computation; disagreement is a consistency error.
inline BigInt s1_diagonal_double(const StirlingTable& table, int n, int k) {
  if (!(n >= k && k >= 1))
    throw std::domain_error("s1_diagonal_double: need n >= k >= 1");
  if (table.kind() != Kind::first_signed)
    throw std::invalid_argument("s1_diagonal_double: first-kind table required");
  BigInt sum = 0;
  for (int m = 1; m <= n; ++m) {
    for (int l = k - m; l <= k - 1; ++l) {
      if (l < 0) continue;  // C(n,l) = 0 for l < 0
      const BigInt c1 = binom(n, l);
      const BigInt c2 = binom_conventional(l, k - m);
      if (c1 == 0 || c2 == 0) continue;
      BigInt term = c1 * c2 * table.value(n - l, k - l);
      if ((k + m - l) % 2 != 0) term = -term;
      sum += term;
    }
  }
  if (sum != table.value(n, k))
    throw consistency_error("s1_diagonal_double(" + std::to_string(n) + "," +
                            std::to_string(k) + ") = " + sum.str() +
                            ", triangular gives " + table.value(n, k).str());
  return sum;
}

// Outcome of evaluating the compact single-sum first-kind recurrence under
// a candidate binomial convention. The sum needs binomials with upper
// index -1 and lower index <= -2 whenever n > k, which the base
// conventions leave undefined, so this is a comparison report rather than
// a value: both sides are carried and nothing is asserted.
struct CompactDiagonalReport {
  int n = 0;
  int k = 0;
  BinomConvention convention = BinomConvention::strict;
  BigInt sum;
  BigInt table_value;
  bool match = false;
};

// (-1)^{n-k} sum_{l=0}^{k-1} (-1)^l C(n,l) C(l-1,k-n-1) s(n-l,k-l),
// with C evaluated under the chosen convention.
inline CompactDiagonalReport s1_diagonal_compact(const StirlingTable& table, int n,
                                                 int k, BinomConvention convention) {
  if (!(n >= k && k >= 1))
    throw std::domain_error("s1_diagonal_compact: need n >= k >= 1");
  if (table.kind() != Kind::first_signed)
    throw std::invalid_argument("s1_diagonal_compact: first-kind table required");
  BigInt sum = 0;
  for (int l = 0; l <= k - 1; ++l) {
    BigInt term = binom(n, l) * binom_under(l - 1, k - n - 1, convention) *
                  table.value(n - l, k - l);
    if (l % 2 != 0) term = -term;
    sum += term;
  }
  if ((n - k) % 2 != 0) sum = -sum;
  CompactDiagonalReport report;
  report.n = n;
  report.k = k;
  report.convention = convention;
  report.sum = sum;
  report.table_value = table.value(n, k);
  report.match = report.sum == report.table_value;
  return report;
}

}  // namespace stirling
