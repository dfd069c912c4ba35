#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "stirling/bigint.hpp"
#include "stirling/stirling_table.hpp"

namespace stirling {

// Nested log-concavity defect over the second-kind triangle:
//
//   level 1:  S(n,k-1)^2 - S(n,k-2) S(n,k)
//   level t+1 applies the same quadratic form to level t.
//
// S(n,j) is taken as 0 for j < 0, which totalizes the definition on
// n >= k >= 0 and lets boundary indices be probed instead of rejected.
inline BigInt lc_defect(const StirlingTable& table, int level, int n, int k) {
  if (level < 1) throw std::domain_error("lc_defect: need level >= 1");
  if (n < k || k < 0) throw std::domain_error("lc_defect: need n >= k >= 0");
  if (table.kind() != Kind::second)
    throw std::invalid_argument("lc_defect: second-kind table required");
  if (n > table.max_n())
    throw std::out_of_range("lc_defect: n = " + std::to_string(n) +
                            " beyond table max_n = " + std::to_string(table.max_n()));
  auto prev = [&](int j) -> BigInt {
    if (j < 0) return 0;
    return level == 1 ? table.value(n, j) : lc_defect(table, level - 1, n, j);
  };
  return prev(k - 1) * prev(k - 1) - prev(k - 2) * prev(k);
}

// Memoizing wrapper for sweeps; values are shared across levels of the
// same read-only table.
class DefectCache {
 public:
  explicit DefectCache(const StirlingTable& table) : table_(&table) {
    if (table.kind() != Kind::second)
      throw std::invalid_argument("DefectCache: second-kind table required");
  }

  const BigInt& get(int level, int n, int k) {
    if (level < 1) throw std::domain_error("DefectCache: need level >= 1");
    if (n < k || k < 0) throw std::domain_error("DefectCache: need n >= k >= 0");
    const auto key = std::make_tuple(level, n, k);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    auto prev = [&](int j) -> BigInt {
      if (j < 0) return 0;
      return level == 1 ? table_->value(n, j) : get(level - 1, n, j);
    };
    BigInt value = prev(k - 1) * prev(k - 1) - prev(k - 2) * prev(k);
    return memo_.emplace(key, std::move(value)).first->second;
  }

  const StirlingTable& table() const { return *table_; }

 private:
  const StirlingTable* table_;
  std::map<std::tuple<int, int, int>, BigInt> memo_;
};

// Ratio of consecutive defect levels. A vanishing denominator is data the
// sweep wants to see, so it is reported in-band rather than thrown.
struct DefectRatio {
  bool defined = false;
  Rational value;
  BigInt numerator_value;    // level+1 defect
  BigInt denominator_value;  // level defect
};

inline DefectRatio defect_ratio(DefectCache& cache, int level, int n, int k) {
  if (level < 1) throw std::domain_error("defect_ratio: need level >= 1");
  if (!(n >= k && k >= level + 2))
    throw std::domain_error("defect_ratio: need n >= k >= level + 2");
  DefectRatio ratio;
  ratio.numerator_value = cache.get(level + 1, n, k);
  ratio.denominator_value = cache.get(level, n, k);
  if (ratio.denominator_value != 0) {
    ratio.defined = true;
    ratio.value = make_rational(ratio.numerator_value, ratio.denominator_value);
  }
  return ratio;
}

inline DefectRatio defect_ratio(const StirlingTable& table, int level, int n, int k) {
  DefectCache cache(table);
  return defect_ratio(cache, level, n, k);
}

struct DiagonalIncreaseCheck {
  int n = 0;
  int k = 0;
  int m_max = 0;
  int comparisons = 0;
  std::optional<int> first_violation_m;
  BigInt violation_lhs;
  BigInt violation_rhs;
  bool pass() const { return !first_violation_m.has_value(); }
};

// Strict increase of the level-1 defect along a diagonal:
// lc_defect(n+m, k+m) < lc_defect(n+m+1, k+m+1) for 0 <= m < m_max.
inline DiagonalIncreaseCheck check_theorem3(const StirlingTable& table, int n, int k,
                                            int m_max) {
  if (!(n >= k && k >= 2)) throw std::domain_error("check_theorem3: need n >= k >= 2");
  if (m_max < 0) throw std::domain_error("check_theorem3: need m_max >= 0");
  if (n + m_max > table.max_n())
    throw std::out_of_range("check_theorem3: table does not cover n + m_max");
  DiagonalIncreaseCheck check;
  check.n = n;
  check.k = k;
  check.m_max = m_max;
  BigInt curr = lc_defect(table, 1, n, k);
  for (int m = 0; m < m_max; ++m) {
    const BigInt next = lc_defect(table, 1, n + m + 1, k + m + 1);
    ++check.comparisons;
    if (!(curr < next) && !check.first_violation_m.has_value()) {
      check.first_violation_m = m;
      check.violation_lhs = curr;
      check.violation_rhs = next;
    }
    curr = next;
  }
  return check;
}

struct SufficeCheck {
  int n = 0;
  int k = 0;
  BigInt lhs;  // (n+1)(n-k+2) [S(n+1,k-1)S(n+1,k+1) - S(n,k-1)S(n,k)]
  BigInt rhs;  // (n+2)(n-k+1) S(n+1,k)^2
  bool pass = false;
};

// Cross-multiplied form of
//   S(n+1,k-1)S(n+1,k+1)/S(n+1,k)^2 - S(n,k-1)S(n,k)/S(n+1,k)^2
//     <= (n+2)(n-k+1) / ((n+1)(n-k+2))
// for 2 <= k <= n.
inline SufficeCheck check_suffice_inequality(const StirlingTable& table, int n, int k) {
  if (!(2 <= k && k <= n))
    throw std::domain_error("check_suffice_inequality: need 2 <= k <= n");
  SufficeCheck check;
  check.n = n;
  check.k = k;
  const BigInt diff = table.value(n + 1, k - 1) * table.value(n + 1, k + 1) -
                      table.value(n, k - 1) * table.value(n, k);
  check.lhs = BigInt(n + 1) * (n - k + 2) * diff;
  const BigInt s = table.value(n + 1, k);
  check.rhs = BigInt(n + 2) * (n - k + 1) * s * s;
  check.pass = check.lhs <= check.rhs;
  return check;
}

// One violated comparison, with enough context to re-evaluate it from the
// table alone. m is -1 for claims that have no diagonal shift.
struct ClaimWitness {
  int claim = 0;
  int level = 0;
  int n = 0;
  int k = 0;
  int m = -1;
  std::string relation;  // the comparison that failed, e.g. "lhs < rhs"
  std::string lhs;
  std::string rhs;
};

struct ClaimLevelResult {
  int level = 0;
  long comparisons = 0;
  long violations = 0;
  std::optional<ClaimWitness> first_witness;
  bool verified() const { return violations == 0; }
};

struct ClaimResult {
  int claim = 0;
  std::string range;
  long comparisons = 0;
  long violations = 0;
  std::string status;  // "verified-in-range" or "counterexample"
  std::optional<ClaimWitness> first_witness;
  std::vector<ClaimLevelResult> levels;         // present when the claim fixes a level
  std::vector<ClaimWitness> zero_denominators;  // ratio claims only
};

namespace detail {

inline void record(ClaimResult& result, ClaimLevelResult* level_result,
                   const ClaimWitness& witness, bool violated) {
  ++result.comparisons;
  if (level_result) ++level_result->comparisons;
  if (!violated) return;
  ++result.violations;
  if (!result.first_witness) result.first_witness = witness;
  if (level_result) {
    ++level_result->violations;
    if (!level_result->first_witness) level_result->first_witness = witness;
  }
}

}  // namespace detail

// Exhaustive scan of one conjecture claim over the grid
// 1 <= level <= ell_max, n <= n_max, k <= min(n, k_max), intersected with
// the claim's stated domain. Enumeration is lexicographic in
// (level, n, k, m), so the first recorded witness is the lexicographically
// first counterexample. Nothing is asserted: violations are findings.
inline ClaimResult sweep_claim(DefectCache& cache, int claim, int n_max, int k_max,
                               int ell_max) {
  const auto& table = cache.table();
  if (n_max > table.max_n())
    throw std::out_of_range("sweep_claim: table does not cover n_max");
  ClaimResult result;
  result.claim = claim;
  result.range = "n <= " + std::to_string(n_max) + ", k <= " + std::to_string(k_max) +
                 ", level <= " + std::to_string(ell_max);

  auto witness = [&](int level, int n, int k, int m, const char* relation,
                     const BigInt& lhs, const BigInt& rhs) {
    return ClaimWitness{claim, level, n, k, m, relation, lhs.str(), rhs.str()};
  };

  switch (claim) {
    case 1:
      // {defect_l(n,k)}_{k=l+1..n} log-concave in k for n >= l+3:
      // defect(n,k)^2 >= defect(n,k-1)*defect(n,k+1) at interior k.
      for (int level = 1; level <= ell_max; ++level) {
        auto& lr = result.levels.emplace_back();
        lr.level = level;
        for (int n = level + 3; n <= n_max; ++n) {
          for (int k = level + 2; k <= std::min(n - 1, k_max); ++k) {
            const BigInt mid = cache.get(level, n, k);
            const BigInt lhs = mid * mid;
            const BigInt rhs = cache.get(level, n, k - 1) * cache.get(level, n, k + 1);
            detail::record(result, &lr, witness(level, n, k, -1, "lhs >= rhs", lhs, rhs),
                           !(lhs >= rhs));
          }
        }
      }
      break;

    case 2:
      // {defect_l(n,k)}_{l=1..k-1} strictly increasing in l for n >= k >= 3;
      // consecutive pairs, both levels within ell_max.
      for (int level = 1; level + 1 <= ell_max; ++level) {
        auto& lr = result.levels.emplace_back();
        lr.level = level;
        for (int n = 3; n <= n_max; ++n) {
          for (int k = std::max(3, level + 2); k <= std::min(n, k_max); ++k) {
            const BigInt lhs = cache.get(level, n, k);
            const BigInt rhs = cache.get(level + 1, n, k);
            detail::record(result, &lr, witness(level, n, k, -1, "lhs < rhs", lhs, rhs),
                           !(lhs < rhs));
          }
        }
      }
      break;

    case 3:
      // {defect_l(n+m,k+m)}_{m>=0} strictly increasing for n >= k >= l+1.
      for (int level = 1; level <= ell_max; ++level) {
        auto& lr = result.levels.emplace_back();
        lr.level = level;
        for (int n = level + 1; n <= n_max; ++n) {
          for (int k = level + 1; k <= std::min(n, k_max); ++k) {
            for (int m = 0; n + m + 1 <= n_max; ++m) {
              const BigInt lhs = cache.get(level, n + m, k + m);
              const BigInt rhs = cache.get(level, n + m + 1, k + m + 1);
              detail::record(result, &lr, witness(level, n, k, m, "lhs < rhs", lhs, rhs),
                             !(lhs < rhs));
            }
          }
        }
      }
      break;

    case 4:
      // {defect_l(n,k)}_{n>=k} strictly increasing in n for k >= l+1.
      for (int level = 1; level <= ell_max; ++level) {
        auto& lr = result.levels.emplace_back();
        lr.level = level;
        for (int n = level + 1; n + 1 <= n_max; ++n) {
          for (int k = level + 1; k <= std::min(n, k_max); ++k) {
            const BigInt lhs = cache.get(level, n, k);
            const BigInt rhs = cache.get(level, n + 1, k);
            detail::record(result, &lr, witness(level, n, k, -1, "lhs < rhs", lhs, rhs),
                           !(lhs < rhs));
          }
        }
      }
      break;

    case 5: {
      // {ratio_l(n+m,k+m)}_{m>=0} strictly increasing for n >= k >= l+2.
      std::set<std::tuple<int, int, int>> seen_zeros;
      for (int level = 1; level <= ell_max; ++level) {
        auto& lr = result.levels.emplace_back();
        lr.level = level;
        for (int n = level + 2; n <= n_max; ++n) {
          for (int k = level + 2; k <= std::min(n, k_max); ++k) {
            for (int m = 0; n + m + 1 <= n_max; ++m) {
              const DefectRatio lhs = defect_ratio(cache, level, n + m, k + m);
              const DefectRatio rhs = defect_ratio(cache, level, n + m + 1, k + m + 1);
              bool skip = false;
              for (const auto* r : {&lhs, &rhs}) {
                if (!r->defined) {
                  skip = true;
                  const int shift = (r == &lhs) ? m : m + 1;
                  if (seen_zeros.emplace(level, n + shift, k + shift).second)
                    result.zero_denominators.push_back(
                        witness(level, n + shift, k + shift, -1, "denominator != 0",
                                r->numerator_value, r->denominator_value));
                }
              }
              if (skip) continue;
              detail::record(result, &lr,
                             ClaimWitness{claim, level, n, k, m, "lhs < rhs",
                                          dec(lhs.value), dec(rhs.value)},
                             !(lhs.value < rhs.value));
            }
          }
        }
      }
      break;
    }

    case 6: {
      // {ratio_l(n,k)}_{n>=k} strictly increasing in n for k >= l+2.
      std::set<std::tuple<int, int, int>> seen_zeros;
      for (int level = 1; level <= ell_max; ++level) {
        auto& lr = result.levels.emplace_back();
        lr.level = level;
        for (int n = level + 2; n + 1 <= n_max; ++n) {
          for (int k = level + 2; k <= std::min(n, k_max); ++k) {
            const DefectRatio lhs = defect_ratio(cache, level, n, k);
            const DefectRatio rhs = defect_ratio(cache, level, n + 1, k);
            bool skip = false;
            for (const auto* r : {&lhs, &rhs}) {
              if (!r->defined) {
                skip = true;
                const int nn = (r == &lhs) ? n : n + 1;
                if (seen_zeros.emplace(level, nn, k).second)
                  result.zero_denominators.push_back(
                      witness(level, nn, k, -1, "denominator != 0", r->numerator_value,
                              r->denominator_value));
              }
            }
            if (skip) continue;
            detail::record(result, &lr,
                           ClaimWitness{claim, level, n, k, -1, "lhs < rhs",
                                        dec(lhs.value), dec(rhs.value)},
                           !(lhs.value < rhs.value));
          }
        }
      }
      break;
    }

    default:
      throw std::invalid_argument("sweep_claim: claim must be in 1..6");
  }

  result.status = result.violations == 0 ? "verified-in-range" : "counterexample";
  return result;
}

inline std::vector<ClaimResult> sweep_conjecture(const StirlingTable& table,
                                                 const std::vector<int>& claims,
                                                 int n_max, int k_max, int ell_max) {
  DefectCache cache(table);
  std::vector<ClaimResult> results;
  results.reserve(claims.size());
  for (int claim : claims)
    results.push_back(sweep_claim(cache, claim, n_max, k_max, ell_max));
  return results;
}

// Re-evaluates a witness from the table and reports whether the recorded
// violation (and its exact values) reproduce.
inline bool recheck_claim_witness(const StirlingTable& table, const ClaimWitness& w) {
  DefectCache cache(table);
  std::string lhs, rhs;
  bool violated = false;
  switch (w.claim) {
    case 1: {
      const BigInt mid = cache.get(w.level, w.n, w.k);
      const BigInt l = mid * mid;
      const BigInt r = cache.get(w.level, w.n, w.k - 1) * cache.get(w.level, w.n, w.k + 1);
      lhs = l.str();
      rhs = r.str();
      violated = !(l >= r);
      break;
    }
    case 2: {
      const BigInt l = cache.get(w.level, w.n, w.k);
      const BigInt r = cache.get(w.level + 1, w.n, w.k);
      lhs = l.str();
      rhs = r.str();
      violated = !(l < r);
      break;
    }
    case 3: {
      const BigInt l = cache.get(w.level, w.n + w.m, w.k + w.m);
      const BigInt r = cache.get(w.level, w.n + w.m + 1, w.k + w.m + 1);
      lhs = l.str();
      rhs = r.str();
      violated = !(l < r);
      break;
    }
    case 4: {
      const BigInt l = cache.get(w.level, w.n, w.k);
      const BigInt r = cache.get(w.level, w.n + 1, w.k);
      lhs = l.str();
      rhs = r.str();
      violated = !(l < r);
      break;
    }
    case 5: {
      const DefectRatio l = defect_ratio(cache, w.level, w.n + w.m, w.k + w.m);
      const DefectRatio r = defect_ratio(cache, w.level, w.n + w.m + 1, w.k + w.m + 1);
      if (!l.defined || !r.defined) return false;
      lhs = dec(l.value);
      rhs = dec(r.value);
      violated = !(l.value < r.value);
      break;
    }
    case 6: {
      const DefectRatio l = defect_ratio(cache, w.level, w.n, w.k);
      const DefectRatio r = defect_ratio(cache, w.level, w.n + 1, w.k);
      if (!l.defined || !r.defined) return false;
      lhs = dec(l.value);
      rhs = dec(r.value);
      violated = !(l.value < r.value);
      break;
    }
    default:
      return false;
  }
  return violated && lhs == w.lhs && rhs == w.rhs;
}

}  // namespace stirling
