#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stirling/bell_polynomials.hpp"
#include "stirling/bigint.hpp"
#include "stirling/binomial.hpp"
#include "stirling/conjecture.hpp"
#include "stirling/engines.hpp"
#include "stirling/enumeration.hpp"
#include "stirling/inequalities.hpp"
#include "stirling/report.hpp"
#include "stirling/stirling_table.hpp"

namespace stirling {

// Documented default for every seeded sweep; override with --seed.
inline constexpr std::uint64_t kDefaultSeed = 20240613;

// Fixed bounds of the Hankel determinant sweep (index entries and k).
inline constexpr int kDetMaxEntry = 6;
inline constexpr int kDetMaxK = 8;

struct VerifyOptions {
  int max_n = 40;
  bool timing = false;
};

struct InequalityOptions {
  int max_n = 30;
  int max_k = 12;
  int det_order = 3;
  int trials = 100;
  std::uint64_t seed = kDefaultSeed;
  bool timing = false;
};

struct ConjectureOptions {
  std::vector<int> claims = {1, 2, 3, 4, 5, 6};
  int max_n = 30;
  int max_k = 30;
  int max_ell = 2;
  bool timing = false;
};

namespace detail {

class SuiteTimer {
 public:
  explicit SuiteTimer(bool enabled) : enabled_(enabled) {}
  void finish(SuiteReport& report) const {
    if (!enabled_) return;
    const auto elapsed = std::chrono::steady_clock::now() - start_;
    report.wall_time_ms = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count());
  }

 private:
  bool enabled_;
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline void record_check(SuiteReport& report, bool ok, ordered_json params,
                         ordered_json witness) {
  ++report.instances;
  if (ok)
    ++report.passes;
  else
    report.failures.push_back({std::move(params), std::move(witness)});
}

inline void compare_value(SuiteReport& report, const char* engine, int n, int k,
                          const BigInt& expected, const BigInt& actual) {
  record_check(report, expected == actual,
               ordered_json{{"engine", engine}, {"n", n}, {"k", k}},
               ordered_json{{"expected", expected.str()}, {"actual", actual.str()}});
}

inline ordered_json witness_params(const ClaimWitness& w) {
  ordered_json j{{"level", w.level}, {"n", w.n}, {"k", w.k}};
  if (w.m >= 0) j["m"] = w.m;
  return j;
}

inline ordered_json witness_values(const ClaimWitness& w) {
  return ordered_json{{"relation", w.relation}, {"lhs", w.lhs}, {"rhs", w.rhs}};
}

inline ordered_json witness_json(const ClaimWitness& w) {
  ordered_json j = witness_params(w);
  j["relation"] = w.relation;
  j["lhs"] = w.lhs;
  j["rhs"] = w.rhs;
  return j;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// verify: cross-engine, oracle, Bell-identity, and first-kind suites.

inline std::vector<SuiteReport> run_verify(const VerifyOptions& opt) {
  if (opt.max_n < 0) throw std::invalid_argument("verify: max_n must be >= 0");
  const int n_max = opt.max_n;
  const int eq8_n = std::min(n_max, 20);
  const int faa_m = std::min(n_max, 15);
  const int faa_k = std::min(n_max, 10);
  const int table_n = std::max({n_max, 2 * eq8_n, faa_m + faa_k});
  const StirlingTable t2(Kind::second, table_n);
  const StirlingTable t1(Kind::first_signed, n_max);
  const ordered_json config{{"max_n", n_max}};

  std::vector<SuiteReport> reports;

  {
    SuiteReport r;
    r.suite = "cross-engine-second-kind";
    r.config = config;
    detail::SuiteTimer timer(opt.timing);
    for (int n = 0; n <= n_max; ++n)
      for (int k = 0; k <= n; ++k)
        detail::compare_value(r, "explicit", n, k, t2.at(n, k), s2_explicit(n, k));
    for (int k = 0; k <= n_max; ++k) {
      const auto column = s2_egf(k, n_max);
      for (int n = k; n <= n_max; ++n)
        detail::compare_value(r, "egf", n, k, t2.at(n, k), column[n - k]);
    }
    for (int n = 1; n <= n_max; ++n)
      for (int k = 0; k < n; ++k)
        detail::compare_value(r, "diagonal-full", n, k, t2.at(n, k),
                              s2_diagonal_full(t2, n, k));
    for (int n = 2; n <= n_max; ++n)
      for (int k = 1; k < n; ++k)
        detail::compare_value(r, "diagonal-simplified", n, k, t2.at(n, k),
                              s2_diagonal_simplified(t2, n, k, /*checked=*/false));
    timer.finish(r);
    reports.push_back(std::move(r));
  }

  {
    SuiteReport r;
    r.suite = "cross-engine-first-kind";
    r.config = config;
    detail::SuiteTimer timer(opt.timing);
    for (int k = 0; k <= n_max; ++k) {
      const auto column = s1_egf(k, n_max);
      for (int n = k; n <= n_max; ++n)
        detail::compare_value(r, "egf", n, k, t1.at(n, k), column[n - k]);
    }
    timer.finish(r);
    reports.push_back(std::move(r));
  }

  {
    SuiteReport r;
    r.suite = "first-kind-structure";
    r.config = config;
    detail::SuiteTimer timer(opt.timing);
    // Sign pattern (-1)^{n-k} s(n,k) > 0 on the triangle interior.
    for (int n = 1; n <= n_max; ++n)
      for (int k = 1; k <= n; ++k) {
        BigInt v = t1.at(n, k);
        if ((n - k) % 2 != 0) v = -v;
        detail::record_check(r, v > 0, ordered_json{{"check", "sign"}, {"n", n}, {"k", k}},
                             ordered_json{{"value", t1.at(n, k).str()}});
      }
    // Falling factorial at 1: rows n >= 2 sum to zero.
    for (int n = 2; n <= n_max; ++n) {
      BigInt sum = 0;
      for (int k = 0; k <= n; ++k) sum += t1.at(n, k);
      detail::record_check(r, sum == 0, ordered_json{{"check", "row-sum"}, {"n", n}},
                           ordered_json{{"sum", sum.str()}});
    }
    timer.finish(r);
    reports.push_back(std::move(r));
  }

  {
    SuiteReport r;
    r.suite = "enumeration-oracle-second-kind";
    r.config = config;
    detail::SuiteTimer timer(opt.timing);
    for (int n = 0; n <= std::min(n_max, kMaxPartitionOracleN); ++n) {
      const auto counts = set_partition_counts(n);
      for (int k = 0; k <= n; ++k) {
        detail::compare_value(r, "triangular", n, k, counts[k], t2.at(n, k));
        detail::compare_value(r, "explicit", n, k, counts[k], s2_explicit(n, k));
        if (k < n)
          detail::compare_value(r, "diagonal-full", n, k, counts[k],
                                s2_diagonal_full(t2, n, k));
        if (k >= 1 && k < n)
          detail::compare_value(r, "diagonal-simplified", n, k, counts[k],
                                s2_diagonal_simplified(t2, n, k, false));
      }
      const auto column_row = [&](int k) { return s2_egf(k, n)[n - k]; };
      for (int k = 0; k <= n; ++k)
        detail::compare_value(r, "egf", n, k, counts[k], column_row(k));
    }
    timer.finish(r);
    reports.push_back(std::move(r));
  }

  {
    SuiteReport r;
    r.suite = "enumeration-oracle-first-kind";
    r.config = config;
    detail::SuiteTimer timer(opt.timing);
    for (int n = 0; n <= std::min(n_max, kMaxPermutationOracleN); ++n) {
      const auto counts = permutation_cycle_counts(n);
      for (int k = 0; k <= n; ++k) {
        BigInt expected = counts[k];
        if ((n - k) % 2 != 0) expected = -expected;
        detail::compare_value(r, "triangular", n, k, expected, t1.at(n, k));
        detail::compare_value(r, "egf", n, k, expected, s1_egf(k, n)[n - k]);
        if (k >= 1) {
          BigInt diag;
          bool consistent = true;
          try {
            diag = s1_diagonal_double(t1, n, k);
          } catch (const consistency_error&) {
            consistent = false;
          }
          detail::record_check(
              r, consistent && diag == expected,
              ordered_json{{"engine", "diagonal-double"}, {"n", n}, {"k", k}},
              ordered_json{{"expected", expected.str()},
                           {"actual", consistent ? diag.str() : "inconsistent"}});
        }
      }
    }
    timer.finish(r);
    reports.push_back(std::move(r));
  }

  {
    SuiteReport r;
    r.suite = "bell-row-sum";
    r.config = config;
    detail::SuiteTimer timer(opt.timing);
    const auto bells = bell_numbers(n_max);
    for (int n = 0; n <= n_max; ++n) {
      BigInt sum = 0;
      for (int k = 0; k <= n; ++k) sum += t2.at(n, k);
      detail::record_check(r, sum == bells[n], ordered_json{{"n", n}},
                           ordered_json{{"row_sum", sum.str()},
                                        {"bell_recurrence", bells[n].str()}});
    }
    timer.finish(r);
    reports.push_back(std::move(r));
  }

  {
    SuiteReport r;
    r.suite = "first-kind-diagonal-double";
    r.config = config;
    detail::SuiteTimer timer(opt.timing);
    for (int n = 1; n <= n_max; ++n)
      for (int k = 1; k <= n; ++k) {
        bool consistent = true;
        BigInt sum;
        try {
          sum = s1_diagonal_double(t1, n, k);
        } catch (const consistency_error&) {
          consistent = false;
        }
        detail::record_check(r, consistent, ordered_json{{"n", n}, {"k", k}},
                             ordered_json{{"sum", consistent ? sum.str() : "mismatch"},
                                          {"table", t1.at(n, k).str()}});
      }
    timer.finish(r);
    reports.push_back(std::move(r));
  }

  {
    SuiteReport r;
    r.suite = "bell-special-value";
    r.config = config;
    detail::SuiteTimer timer(opt.timing);
    for (int n = 0; n <= eq8_n; ++n)
      for (int k = 0; k <= n; ++k) {
        const Rational lhs = bell_partial(n, k, bell_reciprocal_args(n, k));
        const Rational rhs = bell_special_rhs(t2, n, k);
        detail::record_check(r, lhs == rhs, ordered_json{{"n", n}, {"k", k}},
                             ordered_json{{"bell", dec(lhs)}, {"closed_form", dec(rhs)}});
      }
    timer.finish(r);
    reports.push_back(std::move(r));
  }

  {
    SuiteReport r;
    r.suite = "faa-di-bruno-limit";
    r.config = config;
    detail::SuiteTimer timer(opt.timing);
    for (int m = 1; m <= faa_m; ++m)
      for (int k = 1; k <= faa_k; ++k) {
        const auto check = faa_di_bruno_check(k, m);
        detail::record_check(r, check.equal, ordered_json{{"k", k}, {"m", m}},
                             ordered_json{{"bell_side", dec(check.bell_side)},
                                          {"series_side", dec(check.series_side)}});
      }
    timer.finish(r);
    reports.push_back(std::move(r));
  }

  return reports;
}

// ---------------------------------------------------------------------------
// inequalities: determinants, product inequality, log-convexity, strict
// ratio bound.

inline std::vector<SuiteReport> run_inequalities(const InequalityOptions& opt) {
  if (opt.max_n < 2 || opt.max_k < 1 || opt.det_order < 1 || opt.trials < 0)
    throw std::invalid_argument("inequalities: invalid bounds");
  const int table_n =
      std::max({opt.max_n + 1, 2 * kDetMaxEntry + kDetMaxK,
                8 + 6 /* generator bounds: entries <= 8, k <= 6 */});
  const StirlingTable t2(Kind::second, table_n);

  std::vector<SuiteReport> reports;

  {
    SuiteReport r;
    r.suite = "hankel-determinants";
    r.config = ordered_json{{"det_order", opt.det_order},
                            {"max_entry", kDetMaxEntry},
                            {"max_k", kDetMaxK}};
    detail::SuiteTimer timer(opt.timing);
    for (int order = 1; order <= opt.det_order; ++order) {
      std::vector<int> a(order, 0);
      while (true) {
        for (int k = 1; k <= kDetMaxK; ++k) {
          const auto unsigned_check = check_det_nonneg(t2, {a, k, false});
          const auto signed_check = check_det_nonneg(t2, {a, k, true});
          const ordered_json params{{"a", a}, {"k", k}};
          detail::record_check(r, unsigned_check.pass, params,
                               ordered_json{{"det", dec(unsigned_check.det)}});
          detail::record_check(r, signed_check.pass,
                               ordered_json{{"a", a}, {"k", k}, {"signed", true}},
                               ordered_json{{"det", dec(signed_check.det)}});
          detail::record_check(r, unsigned_check.det == signed_check.det,
                               ordered_json{{"a", a}, {"k", k}, {"check", "conjugation"}},
                               ordered_json{{"unsigned", dec(unsigned_check.det)},
                                            {"signed", dec(signed_check.det)}});
        }
        // next tuple in [0, kDetMaxEntry]^order, lexicographic
        int pos = order - 1;
        while (pos >= 0 && a[pos] == kDetMaxEntry) a[pos--] = 0;
        if (pos < 0) break;
        ++a[pos];
      }
    }
    timer.finish(r);
    reports.push_back(std::move(r));
  }

  {
    SuiteReport r;
    r.suite = "product-inequality-random";
    r.config = ordered_json{{"trials", opt.trials}, {"seed", opt.seed}};
    detail::SuiteTimer timer(opt.timing);
    MajorizationGenerator generator(opt.seed);
    for (int t = 0; t < opt.trials; ++t) {
      const auto sample = generator.next();
      const auto check = check_product_inequality(t2, sample.instance, sample.k);
      detail::record_check(r, check.pass,
                           ordered_json{{"trial", t},
                                        {"q", sample.instance.q},
                                        {"a", sample.instance.a},
                                        {"b", sample.instance.b},
                                        {"k", sample.k}},
                           ordered_json{{"lhs", dec(check.lhs)}, {"rhs", dec(check.rhs)}});
    }
    timer.finish(r);
    reports.push_back(std::move(r));
  }

  {
    SuiteReport r;
    r.suite = "log-convexity";
    r.config = ordered_json{{"max_n", opt.max_n}, {"max_k", opt.max_k}};
    detail::SuiteTimer timer(opt.timing);
    for (int k = 1; k <= std::min(opt.max_k, opt.max_n - 2); ++k) {
      const auto check = check_log_convexity(t2, k, opt.max_n - k);
      for (const auto& violation : check.violations)
        detail::record_check(r, false, ordered_json{{"k", k}, {"l", violation.l}},
                             ordered_json{{"lhs", dec(violation.lhs)},
                                          {"rhs", dec(violation.rhs)}});
      r.instances += check.checks - check.violations.size();
      r.passes += check.checks - check.violations.size();
    }
    timer.finish(r);
    reports.push_back(std::move(r));
  }

  {
    SuiteReport r;
    r.suite = "sibuya-strictness";
    r.config = ordered_json{{"max_n", opt.max_n}};
    detail::SuiteTimer timer(opt.timing);
    for (int n = 2; n <= opt.max_n; ++n)
      for (int k = 2; k <= n; ++k) {
        const auto check = check_sibuya(t2, n, k);
        detail::record_check(r, check.strict, ordered_json{{"n", n}, {"k", k}},
                             ordered_json{{"lhs", check.lhs.str()},
                                          {"rhs", check.rhs.str()}});
      }
    timer.finish(r);
    reports.push_back(std::move(r));
  }

  return reports;
}

// ---------------------------------------------------------------------------
// conjecture: one suite per claim; counterexamples are findings, not
// failures. The single exception is claim 3 at level 1, which Theorem 3
// proves: a violation there lands in `failures` and fails the run.

inline std::vector<SuiteReport> run_conjecture(const ConjectureOptions& opt) {
  if (opt.max_n < 0 || opt.max_ell < 1)
    throw std::invalid_argument("conjecture: invalid bounds");
  for (int claim : opt.claims)
    if (claim < 1 || claim > 6)
      throw std::invalid_argument("conjecture: claims must be in 1..6");
  const StirlingTable t2(Kind::second, opt.max_n);
  const ordered_json config{
      {"max_n", opt.max_n}, {"max_k", opt.max_k}, {"max_ell", opt.max_ell}};

  std::vector<SuiteReport> reports;
  DefectCache cache(t2);
  for (int claim : opt.claims) {
    detail::SuiteTimer timer(opt.timing);
    const ClaimResult result = sweep_claim(cache, claim, opt.max_n, opt.max_k, opt.max_ell);
    SuiteReport r;
    r.suite = "conjecture-claim-" + std::to_string(claim);
    r.config = config;
    r.instances = static_cast<std::uint64_t>(result.comparisons);
    r.passes = static_cast<std::uint64_t>(result.comparisons - result.violations);
    r.extra["status"] = result.status;
    r.extra["range"] = result.range;
    r.extra["violations"] = result.violations;
    r.extra["counterexample"] =
        result.first_witness ? detail::witness_json(*result.first_witness)
                             : ordered_json(nullptr);
    ordered_json levels = ordered_json::array();
    for (const auto& level : result.levels) {
      ordered_json lj{{"level", level.level},
                      {"comparisons", level.comparisons},
                      {"violations", level.violations},
                      {"status", level.verified() ? "verified-in-range" : "counterexample"}};
      if (level.first_witness) lj["counterexample"] = detail::witness_json(*level.first_witness);
      levels.push_back(lj);
    }
    r.extra["levels"] = levels;
    if (claim == 5 || claim == 6) {
      ordered_json zeros = ordered_json::array();
      for (const auto& z : result.zero_denominators) zeros.push_back(detail::witness_json(z));
      r.extra["zero_denominator_findings"] = zeros;
    }
    if (claim == 3) {
      // Level 1 is a proved theorem, not a conjecture: violations there
      // are assertion failures.
      const auto level1 = std::find_if(result.levels.begin(), result.levels.end(),
                                       [](const auto& l) { return l.level == 1; });
      const bool level1_ok = level1 == result.levels.end() || level1->verified();
      r.extra["theorem_backed_level_1"] =
          level1_ok ? "verified-in-range" : "counterexample";
      if (!level1_ok && level1->first_witness)
        r.failures.push_back({detail::witness_params(*level1->first_witness),
                              detail::witness_values(*level1->first_witness)});
    }
    timer.finish(r);
    reports.push_back(std::move(r));
  }
  return reports;
}

// ---------------------------------------------------------------------------
// table artifact rendering (the cache file itself is written separately).

inline std::string table_artifact(const StirlingTable& table, int max_n, Format format) {
  if (max_n < 0 || max_n > table.max_n())
    throw std::invalid_argument("table_artifact: max_n outside table");
  std::ostringstream out;
  switch (format) {
    case Format::csv:
      out << "n,k,value\n";
      for (int n = 0; n <= max_n; ++n)
        for (int k = 0; k <= n; ++k)
          out << n << ',' << k << ',' << table.at(n, k) << '\n';
      return out.str();
    case Format::text:
      out << "kind " << kind_id(table.kind()) << " max_n " << max_n << '\n';
      for (int n = 0; n <= max_n; ++n)
        for (int k = 0; k <= n; ++k)
          out << n << ' ' << k << ' ' << table.at(n, k) << '\n';
      return out.str();
    case Format::json: {
      ordered_json j;
      j["command"] = "table";
      j["kind"] = kind_id(table.kind());
      j["max_n"] = max_n;
      ordered_json entries = ordered_json::array();
      for (int n = 0; n <= max_n; ++n)
        for (int k = 0; k <= n; ++k)
          entries.push_back(ordered_json{{"n", n}, {"k", k}, {"value", table.at(n, k).str()}});
      j["entries"] = entries;
      return j.dump(2) + "\n";
    }
  }
  return {};
}

inline bool all_pass(const std::vector<SuiteReport>& reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const SuiteReport& r) { return r.pass(); });
}

// Re-runs the checker named by a failure entry against the given tables and
// reports whether the recorded violation reproduces exactly. Entries from a
// suite this cannot re-evaluate return false.
inline bool recheck_failure(const StirlingTable& t2, const StirlingTable& t1,
                            const std::string& suite, const ordered_json& params,
                            const ordered_json& witness) {
  try {
    if (suite.rfind("conjecture-claim-", 0) == 0) {
      ClaimWitness w;
      w.claim = std::stoi(suite.substr(std::string("conjecture-claim-").size()));
      w.level = params.at("level").get<int>();
      w.n = params.at("n").get<int>();
      w.k = params.at("k").get<int>();
      w.m = params.contains("m") ? params.at("m").get<int>() : -1;
      w.relation = witness.at("relation").get<std::string>();
      w.lhs = witness.at("lhs").get<std::string>();
      w.rhs = witness.at("rhs").get<std::string>();
      return recheck_claim_witness(t2, w);
    }
    if (suite == "cross-engine-second-kind") {
      const int n = params.at("n").get<int>();
      const int k = params.at("k").get<int>();
      const std::string engine = params.at("engine").get<std::string>();
      BigInt actual;
      if (engine == "explicit")
        actual = s2_explicit(n, k);
      else if (engine == "egf")
        actual = s2_egf(k, n)[n - k];
      else if (engine == "diagonal-full")
        actual = s2_diagonal_full(t2, n, k);
      else if (engine == "diagonal-simplified")
        actual = s2_diagonal_simplified(t2, n, k, false);
      else
        return false;
      return actual != t2.at(n, k) &&
             actual.str() == witness.at("actual").get<std::string>() &&
             t2.at(n, k).str() == witness.at("expected").get<std::string>();
    }
    if (suite == "sibuya-strictness") {
      const auto check =
          check_sibuya(t2, params.at("n").get<int>(), params.at("k").get<int>());
      return !check.strict && check.lhs.str() == witness.at("lhs").get<std::string>() &&
             check.rhs.str() == witness.at("rhs").get<std::string>();
    }
    if (suite == "log-convexity") {
      const int k = params.at("k").get<int>();
      const int l = params.at("l").get<int>();
      const Rational lhs = stirling_ratio(t2, k, l) * stirling_ratio(t2, k, l + 2);
      const Rational rhs = rpow(stirling_ratio(t2, k, l + 1), 2);
      return lhs < rhs && dec(lhs) == witness.at("lhs").get<std::string>() &&
             dec(rhs) == witness.at("rhs").get<std::string>();
    }
    if (suite == "product-inequality-random") {
      MajorizationInstance inst;
      inst.q = params.at("q").get<std::vector<long>>();
      inst.a = params.at("a").get<std::vector<long>>();
      inst.b = params.at("b").get<std::vector<long>>();
      const auto check = check_product_inequality(t2, inst, params.at("k").get<int>());
      return !check.pass && dec(check.lhs) == witness.at("lhs").get<std::string>() &&
             dec(check.rhs) == witness.at("rhs").get<std::string>();
    }
    if (suite == "hankel-determinants") {
      HankelSpec spec;
      spec.a = params.at("a").get<std::vector<int>>();
      spec.k = params.at("k").get<int>();
      spec.signed_entries = params.contains("signed") && params.at("signed").get<bool>();
      const auto check = check_det_nonneg(t2, spec);
      return !check.pass && dec(check.det) == witness.at("det").get<std::string>();
    }
    if (suite == "bell-row-sum") {
      const int n = params.at("n").get<int>();
      BigInt sum = 0;
      for (int k = 0; k <= n; ++k) sum += t2.at(n, k);
      const BigInt expected = bell_numbers(n)[n];
      return sum != expected && sum.str() == witness.at("row_sum").get<std::string>() &&
             expected.str() == witness.at("bell_recurrence").get<std::string>();
    }
    if (suite == "first-kind-structure") {
      const int n = params.at("n").get<int>();
      if (params.at("check") == "sign") {
        const int k = params.at("k").get<int>();
        BigInt v = t1.at(n, k);
        if ((n - k) % 2 != 0) v = -v;
        return v <= 0 && t1.at(n, k).str() == witness.at("value").get<std::string>();
      }
      BigInt sum = 0;
      for (int k = 0; k <= n; ++k) sum += t1.at(n, k);
      return sum != 0 && sum.str() == witness.at("sum").get<std::string>();
    }
  } catch (const std::exception&) {
    return false;
  }
  return false;
}

}  // namespace stirling
