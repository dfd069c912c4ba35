#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "stirling/bigint.hpp"
#include "stirling/binomial.hpp"
#include "stirling/rational_matrix.hpp"
#include "stirling/stirling_table.hpp"

namespace stirling {

// r(l) = S(l+k,k) / C(l+k,k), the moment-like sequence behind the
// determinant, product, and log-convexity checks.
inline Rational stirling_ratio(const StirlingTable& table, int k, int l) {
  if (k < 0 || l < 0) throw std::domain_error("stirling_ratio: negative input");
  return make_rational(table.value(l + k, k), binom(l + k, k));
}

// Weighted majorization data: a >=_q b iff every weighted prefix sum of a
// dominates that of b and the weighted totals agree.
struct MajorizationInstance {
  std::vector<long> q;
  std::vector<long> a;
  std::vector<long> b;
};

namespace detail {

inline void validate_instance(const MajorizationInstance& inst) {
  const std::size_t n = inst.q.size();
  if (n == 0 || inst.a.size() != n || inst.b.size() != n)
    throw std::invalid_argument("majorization: tuples must share a positive length");
  for (std::size_t i = 0; i < n; ++i)
    if (inst.q[i] < 0 || inst.a[i] < 0 || inst.b[i] < 0)
      throw std::invalid_argument("majorization: entries must be non-negative");
  for (std::size_t i = 1; i < n; ++i) {
    if (inst.a[i - 1] < inst.a[i])
      throw std::invalid_argument("majorization: a is not non-increasing");
    if (inst.b[i - 1] < inst.b[i])
      throw std::invalid_argument("majorization: b is not non-increasing");
  }
}

}  // namespace detail

inline bool check_q_majorization(const MajorizationInstance& inst) {
  detail::validate_instance(inst);
  const std::size_t n = inst.q.size();
  BigInt sum_a = 0, sum_b = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sum_a += BigInt(inst.q[i]) * inst.a[i];
    sum_b += BigInt(inst.q[i]) * inst.b[i];
    if (i + 1 < n && sum_a < sum_b) return false;
  }
  return sum_a == sum_b;
}

// Order-m matrix with entry (i,j) = r(a_i + a_j), optionally conjugated by
// the alternating signs (-1)^{a_i + a_j}.
struct HankelSpec {
  std::vector<int> a;
  int k = 1;
  bool signed_entries = false;
};

inline RationalMatrix hankel_matrix(const StirlingTable& table, const HankelSpec& spec) {
  if (spec.a.empty()) throw std::invalid_argument("hankel_matrix: empty index tuple");
  if (spec.k < 1) throw std::domain_error("hankel_matrix: need k >= 1");
  for (int ai : spec.a)
    if (ai < 0) throw std::invalid_argument("hankel_matrix: negative index");
  const std::size_t m = spec.a.size();
  RationalMatrix matrix(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      Rational entry = stirling_ratio(table, spec.k, spec.a[i] + spec.a[j]);
      if (spec.signed_entries && (spec.a[i] + spec.a[j]) % 2 != 0) entry = -entry;
      matrix.at(i, j) = entry;
    }
  }
  return matrix;
}

struct DeterminantCheck {
  HankelSpec spec;
  Rational det;
  bool pass = false;
};

inline DeterminantCheck check_det_nonneg(const StirlingTable& table,
                                         const HankelSpec& spec) {
  DeterminantCheck check;
  check.spec = spec;
  check.det = det_exact(hankel_matrix(table, spec));
  check.pass = check.det >= 0;
  return check;
}

struct ProductCheck {
  Rational lhs;
  Rational rhs;
  bool pass = false;
};

// prod r(a_i)^{q_i} >= prod r(b_i)^{q_i}; both sides exact rationals, so
// the comparison is an exact cross-multiplied integer test.
inline ProductCheck check_product_inequality(const StirlingTable& table,
                                             const MajorizationInstance& inst, int k) {
  if (k < 1) throw std::domain_error("check_product_inequality: need k >= 1");
  if (!check_q_majorization(inst))
    throw std::invalid_argument("check_product_inequality: a does not q-majorize b");
  ProductCheck check;
  check.lhs = 1;
  check.rhs = 1;
  for (std::size_t i = 0; i < inst.q.size(); ++i) {
    check.lhs *= rpow(stirling_ratio(table, k, static_cast<int>(inst.a[i])),
                      static_cast<unsigned long>(inst.q[i]));
    check.rhs *= rpow(stirling_ratio(table, k, static_cast<int>(inst.b[i])),
                      static_cast<unsigned long>(inst.q[i]));
  }
  check.pass = check.lhs >= check.rhs;
  return check;
}

struct LogConvexityViolation {
  int l = 0;
  Rational lhs;  // r(l) * r(l+2)
  Rational rhs;  // r(l+1)^2
};

struct LogConvexityCheck {
  int k = 0;
  int checks = 0;
  std::vector<LogConvexityViolation> violations;
  bool pass() const { return violations.empty(); }
};

// r(l) r(l+2) >= r(l+1)^2 for 0 <= l <= n_max-2, verified both as stated
// and as monotonicity of the consecutive ratios r(l+1)/r(l); the two
// formulations disagreeing would be an implementation bug.
inline LogConvexityCheck check_log_convexity(const StirlingTable& table, int k,
                                             int n_max) {
  if (k < 1 || n_max < 2)
    throw std::domain_error("check_log_convexity: need k >= 1, n_max >= 2");
  LogConvexityCheck check;
  check.k = k;
  Rational prev = stirling_ratio(table, k, 0);
  Rational curr = stirling_ratio(table, k, 1);
  Rational prev_ratio = curr / prev;  // r(l) > 0 throughout
  for (int l = 0; l + 2 <= n_max; ++l) {
    const Rational next = stirling_ratio(table, k, l + 2);
    const bool product_form = prev * next >= curr * curr;
    const Rational next_ratio = next / curr;
    const bool ratio_form = next_ratio >= prev_ratio;
    if (product_form != ratio_form)
      throw consistency_error("check_log_convexity: formulations disagree at l = " +
                              std::to_string(l));
    ++check.checks;
    if (!product_form) check.violations.push_back({l, prev * next, curr * curr});
    prev = curr;
    curr = next;
    prev_ratio = next_ratio;
  }
  return check;
}

struct SibuyaCheck {
  int n = 0;
  int k = 0;
  BigInt lhs;  // (k+1)(n-k+2) S(n+1,k-1) S(n+1,k+1)
  BigInt rhs;  // (k-1)(n-k+1) S(n+1,k)^2
  bool strict = false;
};

// Cross-multiplied form of the strict ratio bound
//   S(n+1,k-1) S(n+1,k+1) / S(n+1,k)^2 < (k-1)(n-k+1) / ((k+1)(n-k+2))
// for 2 <= k <= n.
inline SibuyaCheck check_sibuya(const StirlingTable& table, int n, int k) {
  if (!(2 <= k && k <= n)) throw std::domain_error("check_sibuya: need 2 <= k <= n");
  SibuyaCheck check;
  check.n = n;
  check.k = k;
  check.lhs = BigInt(k + 1) * (n - k + 2) * table.value(n + 1, k - 1) *
              table.value(n + 1, k + 1);
  const BigInt s = table.value(n + 1, k);
  check.rhs = BigInt(k - 1) * (n - k + 1) * s * s;
  check.strict = check.lhs < check.rhs;
  return check;
}

// Deterministic generator of valid (instance, k) pairs for product-
// inequality sweeps. Starts from a random non-increasing b, copies it to
// a, and applies weighted transfers that move weight toward lower indices,
// which preserves the weighted total and can only raise prefix sums; any
// transfer that would break bounds or ordering is skipped.
struct MajorizationBounds {
  int max_len = 4;
  long max_entry = 8;
  long max_weight = 3;
  int max_k = 6;
};

class MajorizationGenerator {
 public:
  using Bounds = MajorizationBounds;

  explicit MajorizationGenerator(std::uint64_t seed, Bounds bounds = Bounds())
      : rng_(seed), bounds_(bounds) {}

  struct Sample {
    MajorizationInstance instance;
    int k = 1;
  };

  Sample next() {
    Sample sample;
    const int len = 1 + static_cast<int>(uniform_below(bounds_.max_len));
    auto& inst = sample.instance;
    inst.q.resize(len);
    inst.b.resize(len);
    for (auto& w : inst.q) w = static_cast<long>(uniform_below(bounds_.max_weight + 1));
    for (auto& v : inst.b) v = static_cast<long>(uniform_below(bounds_.max_entry + 1));
    std::sort(inst.b.rbegin(), inst.b.rend());
    inst.a = inst.b;

    const int transfers = static_cast<int>(uniform_below(5));
    for (int t = 0; t < transfers && len >= 2; ++t) {
      const int i = static_cast<int>(uniform_below(len - 1));
      const int j = i + 1 + static_cast<int>(uniform_below(len - 1 - i));
      const long qi = inst.q[i], qj = inst.q[j];
      if (qi == 0 || qj == 0) continue;
      std::vector<long> candidate = inst.a;
      candidate[i] += qj;  // weighted total change: qi*qj - qj*qi = 0
      candidate[j] -= qi;
      if (candidate[i] > bounds_.max_entry || candidate[j] < 0) continue;
      bool sorted = true;
      for (int r = 1; r < len; ++r)
        if (candidate[r - 1] < candidate[r]) sorted = false;
      if (!sorted) continue;
      inst.a = candidate;
    }
    sample.k = 1 + static_cast<int>(uniform_below(bounds_.max_k));
    return sample;
  }

 private:
  std::uint64_t uniform_below(long bound) {
    // Plain rejection sampling; the stream depends only on mt19937_64.
    if (bound <= 0) throw std::invalid_argument("uniform_below: bound <= 0");
    const std::uint64_t b = static_cast<std::uint64_t>(bound);
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % b;
    std::uint64_t draw;
    do {
      draw = rng_();
    } while (draw >= limit);
    return draw % b;
  }

  std::mt19937_64 rng_;
  Bounds bounds_;
};

}  // namespace stirling
