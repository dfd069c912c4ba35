#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "stirling/bigint.hpp"
#include "stirling/binomial.hpp"

namespace stirling {

enum class Kind {
  second,        // S(n,k), set-partition counts
  first_signed,  // s(n,k), signed cycle counts
};

inline int kind_id(Kind kind) { return kind == Kind::second ? 2 : 1; }

inline Kind kind_from_id(int id) {
  if (id == 2) return Kind::second;
  if (id == 1) return Kind::first_signed;
  throw std::invalid_argument("kind_from_id: expected 1 or 2, got " +
                              std::to_string(id));
}

// Memoized triangle of Stirling numbers of one kind, filled once by the
// one-row-at-a-time recurrence and read-only afterwards.
//
//   second:       S(n,k) = k*S(n-1,k) + S(n-1,k-1),   S(0,0) = 1
//   first_signed: s(n,k) = s(n-1,k-1) - (n-1)*s(n-1,k), s(0,0) = 1
class StirlingTable {
 public:
  StirlingTable(Kind kind, int max_n) : kind_(kind), rows_(max_n + 1) {
    if (max_n < 0) throw std::invalid_argument("StirlingTable: max_n < 0");
    rows_[0] = {BigInt(1)};
    for (int n = 1; n <= max_n; ++n) {
      auto& row = rows_[n];
      row.resize(n + 1);
      row[0] = 0;
      const auto& prev = rows_[n - 1];
      for (int k = 1; k <= n; ++k) {
        const BigInt& above_left = prev[k - 1];
        const BigInt above = (k < n) ? prev[k] : BigInt(0);
        if (kind_ == Kind::second)
          row[k] = k * above + above_left;
        else
          row[k] = above_left - (n - 1) * above;
      }
    }
  }

  // Adopt an existing triangle (cache loads, doctored test tables).
  StirlingTable(Kind kind, std::vector<std::vector<BigInt>> rows)
      : kind_(kind), rows_(std::move(rows)) {
    if (rows_.empty()) throw std::invalid_argument("StirlingTable: no rows");
    for (std::size_t n = 0; n < rows_.size(); ++n)
      if (rows_[n].size() != n + 1)
        throw std::invalid_argument("StirlingTable: row " + std::to_string(n) +
                                    " has wrong length");
  }

  Kind kind() const { return kind_; }
  int max_n() const { return static_cast<int>(rows_.size()) - 1; }

  // Strict triangle access, 0 <= k <= n <= max_n.
  const BigInt& at(int n, int k) const {
    if (n < 0 || n > max_n())
      throw std::out_of_range("StirlingTable: n = " + std::to_string(n) +
                              " outside [0, " + std::to_string(max_n()) + "]");
    if (k < 0 || k > n)
      throw std::out_of_range("StirlingTable: k = " + std::to_string(k) +
                              " outside [0, " + std::to_string(n) + "]");
    return rows_[n][k];
  }

  // Total in k: zero outside the triangle (no partition of a nonempty set
  // into 0 or more than n blocks; same boundary for the first kind).
  BigInt value(int n, int k) const {
    if (n < 0 || n > max_n())
      throw std::out_of_range("StirlingTable: n = " + std::to_string(n) +
                              " outside [0, " + std::to_string(max_n()) + "]");
    if (k < 0 || k > n) return 0;
    return rows_[n][k];
  }

  const std::vector<BigInt>& row(int n) const {
    if (n < 0 || n > max_n())
      throw std::out_of_range("StirlingTable: row out of range");
    return rows_[n];
  }

 private:
  Kind kind_;
  std::vector<std::vector<BigInt>> rows_;
};

// Bell numbers B_0..B_max via B_{m+1} = sum_i C(m,i) B_i; independent of
// any Stirling triangle.
inline std::vector<BigInt> bell_numbers(int max_n) {
  if (max_n < 0) throw std::invalid_argument("bell_numbers: max_n < 0");
  std::vector<BigInt> bell(max_n + 1);
  bell[0] = 1;
  for (int m = 0; m + 1 <= max_n; ++m) {
    BigInt next = 0;
    for (int i = 0; i <= m; ++i) next += binom(m, i) * bell[i];
    bell[m + 1] = next;
  }
  return bell;
}

// Row sum over the second-kind triangle, cross-checked against the Bell
// recurrence before it is returned.
inline BigInt bell_row_sum(const StirlingTable& table, int n) {
  if (table.kind() != Kind::second)
    throw std::invalid_argument("bell_row_sum: second-kind table required");
  BigInt sum = 0;
  for (int k = 0; k <= n; ++k) sum += table.at(n, k);
  const BigInt expected = bell_numbers(n)[n];
  if (sum != expected)
    throw consistency_error("bell_row_sum: row " + std::to_string(n) +
                            " sums to " + sum.str() + ", Bell recurrence gives " +
                            expected.str());
  return sum;
}

}  // namespace stirling
