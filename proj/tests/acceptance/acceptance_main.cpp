// Acceptance suite: one line per criterion, every check exact, nonzero
// exit if any criterion fails. Criteria mirror the verification CLI but
// run the library directly at the full advertised ranges.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "stirling/bell_polynomials.hpp"
#include "stirling/conjecture.hpp"
#include "stirling/engines.hpp"
#include "stirling/enumeration.hpp"
#include "stirling/inequalities.hpp"
#include "stirling/report.hpp"
#include "stirling/suites.hpp"

namespace {

using namespace stirling;

struct Criterion {
  int id;
  std::string description;
  std::function<bool(std::string&)> run;
};

bool check_eq(const BigInt& actual, const BigInt& expected, const std::string& where,
              std::string& detail) {
  if (actual == expected) return true;
  detail = where + ": got " + actual.str() + ", expected " + expected.str();
  return false;
}

// 1. explicit, triangular, and EGF agree for 0 <= k <= n <= 60; both
//    diagonal engines additionally agree for k < n.
bool criterion_cross_engine(std::string& detail) {
  const StirlingTable t2(Kind::second, 60);
  for (int n = 0; n <= 60; ++n)
    for (int k = 0; k <= n; ++k)
      if (!check_eq(s2_explicit(n, k), t2.at(n, k),
                    "explicit(" + std::to_string(n) + "," + std::to_string(k) + ")",
                    detail))
        return false;
  for (int k = 0; k <= 60; ++k) {
    const auto column = s2_egf(k, 60);
    for (int n = k; n <= 60; ++n)
      if (!check_eq(column[n - k], t2.at(n, k),
                    "egf(" + std::to_string(n) + "," + std::to_string(k) + ")", detail))
        return false;
  }
  for (int n = 1; n <= 60; ++n)
    for (int k = 0; k < n; ++k) {
      if (!check_eq(s2_diagonal_full(t2, n, k), t2.at(n, k),
                    "diagonal-full(" + std::to_string(n) + "," + std::to_string(k) + ")",
                    detail))
        return false;
      if (k >= 1 &&
          !check_eq(s2_diagonal_simplified(t2, n, k, false), t2.at(n, k),
                    "diagonal-simplified(" + std::to_string(n) + "," +
                        std::to_string(k) + ")",
                    detail))
        return false;
    }
  return true;
}

// 2. Every engine equals the exhaustive enumeration oracles.
bool criterion_oracles(std::string& detail) {
  const StirlingTable t2(Kind::second, 12);
  for (int n = 0; n <= 12; ++n) {
    const auto counts = set_partition_counts(n);
    for (int k = 0; k <= n; ++k) {
      const BigInt& expected = counts[k];
      const std::string at = "(" + std::to_string(n) + "," + std::to_string(k) + ")";
      if (!check_eq(t2.at(n, k), expected, "triangular" + at, detail)) return false;
      if (!check_eq(s2_explicit(n, k), expected, "explicit" + at, detail)) return false;
      if (!check_eq(s2_egf(k, n)[n - k], expected, "egf" + at, detail)) return false;
      if (k < n &&
          !check_eq(s2_diagonal_full(t2, n, k), expected, "diagonal-full" + at, detail))
        return false;
      if (k >= 1 && k < n &&
          !check_eq(s2_diagonal_simplified(t2, n, k, false), expected,
                    "diagonal-simplified" + at, detail))
        return false;
    }
  }
  const StirlingTable t1(Kind::first_signed, 8);
  for (int n = 0; n <= 8; ++n) {
    const auto counts = permutation_cycle_counts(n);
    for (int k = 0; k <= n; ++k) {
      BigInt expected = counts[k];
      if ((n - k) % 2 != 0) expected = -expected;
      const std::string at = "(" + std::to_string(n) + "," + std::to_string(k) + ")";
      if (!check_eq(t1.at(n, k), expected, "s1-triangular" + at, detail)) return false;
      if (!check_eq(s1_egf(k, n)[n - k], expected, "s1-egf" + at, detail)) return false;
      if (k >= 1 &&
          !check_eq(s1_diagonal_double(t1, n, k), expected, "s1-diagonal" + at, detail))
        return false;
    }
  }
  return true;
}

// 3. Bell polynomial at (1/2,...,1/(n-k+2)) equals the closed form for
//    0 <= k <= n <= 20.
bool criterion_bell_identity(std::string& detail) {
  const StirlingTable t2(Kind::second, 40);
  for (int n = 0; n <= 20; ++n)
    for (int k = 0; k <= n; ++k) {
      const Rational lhs = bell_partial(n, k, bell_reciprocal_args(n, k));
      const Rational rhs = bell_special_rhs(t2, n, k);
      if (lhs != rhs) {
        detail = "(" + std::to_string(n) + "," + std::to_string(k) + "): " + dec(lhs) +
                 " vs " + dec(rhs);
        return false;
      }
    }
  return true;
}

// 4. Chain-rule expansion equals the series derivative for 1 <= m <= 15,
//    1 <= k <= 10.
bool criterion_faa_di_bruno(std::string& detail) {
  for (int m = 1; m <= 15; ++m)
    for (int k = 1; k <= 10; ++k) {
      const auto check = faa_di_bruno_check(k, m);
      if (!check.equal) {
        detail = "(k=" + std::to_string(k) + ",m=" + std::to_string(m) +
                 "): " + dec(check.bell_side) + " vs " + dec(check.series_side);
        return false;
      }
    }
  return true;
}

// 5. Hankel determinants are non-negative and sign-conjugation invariant
//    for every order <= 4, entries <= 6, k <= 8.
bool criterion_determinants(std::string& detail) {
  const StirlingTable t2(Kind::second, 2 * 6 + 8);
  for (int order = 1; order <= 4; ++order) {
    std::vector<int> a(order, 0);
    while (true) {
      for (int k = 1; k <= 8; ++k) {
        const auto plain = check_det_nonneg(t2, {a, k, false});
        const auto conjugated = check_det_nonneg(t2, {a, k, true});
        if (!plain.pass || !conjugated.pass || plain.det != conjugated.det) {
          std::ostringstream oss;
          oss << "order " << order << " k " << k << " a (";
          for (int v : a) oss << v << ' ';
          oss << "): unsigned " << dec(plain.det) << ", signed " << dec(conjugated.det);
          detail = oss.str();
          return false;
        }
      }
      int pos = order - 1;
      while (pos >= 0 && a[pos] == 6) a[pos--] = 0;
      if (pos < 0) break;
      ++a[pos];
    }
  }
  return true;
}

// 6. 500 constructively generated majorization instances satisfy the
//    product inequality.
bool criterion_product_inequality(std::string& detail) {
  const StirlingTable t2(Kind::second, 8 + 6);
  MajorizationGenerator generator(kDefaultSeed);
  for (int trial = 0; trial < 500; ++trial) {
    const auto sample = generator.next();
    if (!check_q_majorization(sample.instance)) {
      detail = "trial " + std::to_string(trial) + ": generator produced invalid instance";
      return false;
    }
    const auto check = check_product_inequality(t2, sample.instance, sample.k);
    if (!check.pass) {
      detail = "trial " + std::to_string(trial) + ": " + dec(check.lhs) + " < " +
               dec(check.rhs);
      return false;
    }
  }
  return true;
}

// 7. Log-convexity of the ratio sequence for k <= 30 and indices up to 200.
bool criterion_log_convexity(std::string& detail) {
  const StirlingTable t2(Kind::second, 200);
  for (int k = 1; k <= 30; ++k) {
    const auto check = check_log_convexity(t2, k, 200 - k);
    if (!check.pass()) {
      detail = "k = " + std::to_string(k) + ", l = " +
               std::to_string(check.violations.front().l);
      return false;
    }
  }
  return true;
}

// 8. The strict ratio bound holds for 2 <= k <= n <= 60.
bool criterion_sibuya(std::string& detail) {
  const StirlingTable t2(Kind::second, 61);
  for (int n = 2; n <= 60; ++n)
    for (int k = 2; k <= n; ++k) {
      const auto check = check_sibuya(t2, n, k);
      if (!check.strict) {
        detail = "(" + std::to_string(n) + "," + std::to_string(k) + "): " +
                 check.lhs.str() + " !< " + check.rhs.str();
        return false;
      }
    }
  return true;
}

// 9. Strict diagonal increase of the level-1 defect for 2 <= k <= n <= 50,
//    m up to 50 - n, plus the worked chain 8 < 29 < 75.
bool criterion_theorem3(std::string& detail) {
  const StirlingTable t2(Kind::second, 50);
  if (lc_defect(t2, 1, 3, 3) != 8 || lc_defect(t2, 1, 4, 4) != 29 ||
      lc_defect(t2, 1, 5, 5) != 75) {
    detail = "worked chain 8 < 29 < 75 does not reproduce";
    return false;
  }
  for (int n = 2; n <= 50; ++n)
    for (int k = 2; k <= n; ++k) {
      const auto check = check_theorem3(t2, n, k, 50 - n);
      if (!check.pass()) {
        detail = "(" + std::to_string(n) + "," + std::to_string(k) + ") at m = " +
                 std::to_string(*check.first_violation_m);
        return false;
      }
    }
  return true;
}

// 10. The conjecture sweep completes for claims 1..6 with n <= 30,
//     levels <= 4, emits well-formed JSON, and claim 3 verifies at level 1.
bool criterion_conjecture_sweep(std::string& detail) {
  ConjectureOptions opt;
  opt.claims = {1, 2, 3, 4, 5, 6};
  opt.max_n = 30;
  opt.max_k = 30;
  opt.max_ell = 4;
  const auto reports = run_conjecture(opt);
  if (reports.size() != 6) {
    detail = "expected 6 claim reports";
    return false;
  }
  const std::string json_text = render_json(reports);
  nlohmann::json parsed;
  try {
    parsed = nlohmann::json::parse(json_text);
  } catch (const std::exception& e) {
    detail = std::string("JSON does not parse: ") + e.what();
    return false;
  }
  if (!parsed.is_array() || parsed.size() != 6) {
    detail = "JSON report is not a 6-element array";
    return false;
  }
  for (const auto& suite : parsed)
    for (const char* field :
         {"suite", "config", "instances", "passes", "failures", "status", "wall_time_ms"})
      if (!suite.contains(field)) {
        detail = std::string("missing field ") + field;
        return false;
      }
  const auto& claim3 = parsed[2];
  if (claim3["suite"] != "conjecture-claim-3") {
    detail = "claim 3 report out of order";
    return false;
  }
  if (claim3["theorem_backed_level_1"] != "verified-in-range") {
    detail = "claim 3 level 1 reported " +
             claim3["theorem_backed_level_1"].get<std::string>();
    return false;
  }
  if (!claim3["failures"].empty()) {
    detail = "claim 3 carries assertion failures";
    return false;
  }
  return true;
}

// 11. Repeating a command with an identical config yields byte-identical
//     reports.
bool criterion_determinism(std::string& detail) {
  {
    VerifyOptions opt;
    opt.max_n = 12;
    if (render_json(run_verify(opt)) != render_json(run_verify(opt))) {
      detail = "verify reports differ";
      return false;
    }
  }
  {
    InequalityOptions opt;
    opt.max_n = 12;
    opt.max_k = 5;
    opt.det_order = 2;
    opt.trials = 50;
    opt.seed = 7;
    if (render_json(run_inequalities(opt)) != render_json(run_inequalities(opt))) {
      detail = "inequality reports differ";
      return false;
    }
  }
  {
    ConjectureOptions opt;
    opt.max_n = 14;
    opt.max_k = 14;
    opt.max_ell = 3;
    if (render_json(run_conjecture(opt)) != render_json(run_conjecture(opt))) {
      detail = "conjecture reports differ";
      return false;
    }
  }
  return true;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "cross-engine equality up to n = 60", criterion_cross_engine},
      {2, "enumeration oracles (partitions n <= 12, cycles n <= 8)", criterion_oracles},
      {3, "Bell special-value identity up to n = 20", criterion_bell_identity},
      {4, "chain-rule limit check (m <= 15, k <= 10)", criterion_faa_di_bruno},
      {5, "Hankel determinant non-negativity (order <= 4)", criterion_determinants},
      {6, "product inequality on 500 seeded instances", criterion_product_inequality},
      {7, "log-convexity (k <= 30, indices <= 200)", criterion_log_convexity},
      {8, "strict ratio bound (2 <= k <= n <= 60)", criterion_sibuya},
      {9, "strict diagonal defect increase up to n = 50", criterion_theorem3},
      {10, "conjecture sweep completes with JSON report", criterion_conjecture_sweep},
      {11, "byte-identical reports on repeated runs", criterion_determinism},
  };

  int failures = 0;
  for (const auto& criterion : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
      ok = criterion.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << criterion.id << ": "
              << criterion.description << "  [" << ms << " ms]";
    if (!ok) {
      std::cout << "  -- " << detail;
      ++failures;
    }
    std::cout << std::endl;
  }
  if (failures != 0) {
    std::cout << failures << " criterion(s) failed" << std::endl;
    return 1;
  }
  std::cout << "all criteria passed" << std::endl;
  return 0;
}
