// Command-line front end: build/cache Stirling triangles, run the
// verification, inequality, and conjecture sweeps, and emit text, CSV, or
// JSON reports.
//
// Exit codes: 0 all asserted suites pass, 1 assertion failure,
// 2 usage or configuration error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "stirling/report.hpp"
#include "stirling/stirling_table.hpp"
#include "stirling/suites.hpp"
#include "stirling/table_cache.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

// Flag, then STIRLING_CACHE_DIR, then a platform cache default.
fs::path resolve_cache_dir(const std::string& flag_value) {
  if (!flag_value.empty()) return flag_value;
  if (const char* env = std::getenv("STIRLING_CACHE_DIR"); env && *env) return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
    return fs::path(xdg) / "stirling-tables";
  if (const char* home = std::getenv("HOME"); home && *home)
    return fs::path(home) / ".cache" / "stirling-tables";
  return fs::path(".stirling-cache");
}

// Writes to `output` or stdout; returns false (usage error) when the path
// cannot be written.
bool emit(const std::string& output, const std::string& content) {
  if (output.empty()) {
    std::cout << content;
    return true;
  }
  std::ofstream out(output, std::ios::trunc);
  if (!out) {
    std::cerr << "error: cannot write output file '" << output << "'\n";
    return false;
  }
  out << content;
  if (!out) {
    std::cerr << "error: write failed for '" << output << "'\n";
    return false;
  }
  return true;
}

struct CommonArgs {
  std::string format = "text";
  std::string output;
  std::string cache_dir;
  bool timing = false;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--format", args.format, "Output format: text, csv, or json")
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->capture_default_str();
  cmd->add_option("--output", args.output, "Write the report to this path (default stdout)");
  cmd->add_option("--cache-dir", args.cache_dir,
                  "Table cache directory (default: $STIRLING_CACHE_DIR, then the "
                  "platform cache directory)");
  cmd->add_flag("--timing", args.timing,
                "Record measured wall time in reports (off by default so repeated "
                "runs are byte-identical)");
}

// Exit 1 only on suite failures. Conjecture findings never reach the
// failures list (only a theorem-backed level-1 violation does), so the
// same rule serves every command.
int run_reports(const std::vector<stirling::SuiteReport>& reports,
                const CommonArgs& args) {
  const std::string content =
      stirling::render(reports, stirling::format_from_name(args.format));
  if (!emit(args.output, content)) return kExitUsage;
  return stirling::all_pass(reports) ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Stirling-number computation and verification"};
  app.require_subcommand(1);

  // table
  auto* table_cmd = app.add_subcommand("table", "Build a Stirling triangle, cache it, "
                                                "and emit it");
  int table_kind = 2;
  int table_max_n = 40;
  CommonArgs table_args;
  table_cmd->add_option("--kind", table_kind, "Stirling kind: 2 (second) or 1 (first, signed)")
      ->check(CLI::IsMember({1, 2}))
      ->capture_default_str();
  table_cmd->add_option("--max-n", table_max_n, "Largest row to compute")
      ->check(CLI::Range(0, 100000))
      ->capture_default_str();
  add_common(table_cmd, table_args);

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Cross-engine and identity suites");
  std::string verify_set = "recurrences";
  int verify_max_n = 40;
  CommonArgs verify_args;
  verify_cmd->add_option("set", verify_set, "Suite set to run")
      ->check(CLI::IsMember({"recurrences"}))
      ->capture_default_str();
  verify_cmd->add_option("--max-n", verify_max_n, "Largest row to check")
      ->check(CLI::Range(0, 2000))
      ->capture_default_str();
  add_common(verify_cmd, verify_args);

  // inequalities
  auto* ineq_cmd = app.add_subcommand("inequalities",
                                      "Determinant, product, log-convexity, and strict "
                                      "ratio suites");
  stirling::InequalityOptions ineq_opt;
  CommonArgs ineq_args;
  ineq_cmd->add_option("--max-n", ineq_opt.max_n, "Largest sequence index")
      ->check(CLI::Range(2, 2000))
      ->capture_default_str();
  ineq_cmd->add_option("--max-k", ineq_opt.max_k, "Largest k for log-convexity")
      ->check(CLI::Range(1, 2000))
      ->capture_default_str();
  ineq_cmd->add_option("--det-order", ineq_opt.det_order, "Largest determinant order")
      ->check(CLI::Range(1, 8))
      ->capture_default_str();
  ineq_cmd->add_option("--trials", ineq_opt.trials, "Random product-inequality instances")
      ->check(CLI::Range(0, 1000000))
      ->capture_default_str();
  ineq_cmd->add_option("--seed", ineq_opt.seed, "Seed for the instance generator")
      ->capture_default_str();
  add_common(ineq_cmd, ineq_args);

  // conjecture
  auto* conj_cmd = app.add_subcommand("conjecture", "Sweep the six monotonicity and "
                                                    "log-concavity claims");
  stirling::ConjectureOptions conj_opt;
  CommonArgs conj_args;
  conj_cmd->add_option("--claims", conj_opt.claims, "Claims to sweep (subset of 1..6)")
      ->delimiter(',')
      ->check(CLI::Range(1, 6))
      ->capture_default_str();
  conj_cmd->add_option("--max-n", conj_opt.max_n, "Largest n in the sweep")
      ->check(CLI::Range(0, 500))
      ->capture_default_str();
  conj_cmd->add_option("--max-k", conj_opt.max_k, "Largest k in the sweep")
      ->check(CLI::Range(0, 500))
      ->capture_default_str();
  conj_cmd->add_option("--max-ell", conj_opt.max_ell, "Largest defect level")
      ->check(CLI::Range(1, 8))
      ->capture_default_str();
  add_common(conj_cmd, conj_args);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // CLI11 prints its own message/help; fold all parse outcomes into the
    // usage exit code except a clean --help.
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (table_cmd->parsed()) {
      const auto kind = stirling::kind_from_id(table_kind);
      const fs::path dir = resolve_cache_dir(table_args.cache_dir);
      std::error_code ec;
      fs::create_directories(dir, ec);
      const fs::path cache_file =
          dir / ("stirling-" + std::to_string(table_kind) + ".cache");

      std::optional<stirling::StirlingTable> table;
      if (fs::exists(cache_file)) {
        try {
          auto loaded = stirling::load_table(cache_file);
          if (loaded.kind() == kind && loaded.max_n() >= table_max_n)
            table.emplace(std::move(loaded));
        } catch (const std::exception& e) {
          std::cerr << "warning: ignoring unreadable cache: " << e.what() << "\n";
        }
      }
      if (!table) table.emplace(kind, table_max_n);
      try {
        stirling::save_table(*table, cache_file);
      } catch (const std::exception& e) {
        std::cerr << "warning: could not write cache: " << e.what() << "\n";
      }
      const std::string artifact = stirling::table_artifact(
          *table, table_max_n, stirling::format_from_name(table_args.format));
      return emit(table_args.output, artifact) ? kExitOk : kExitUsage;
    }

    if (verify_cmd->parsed()) {
      stirling::VerifyOptions opt;
      opt.max_n = verify_max_n;
      opt.timing = verify_args.timing;
      return run_reports(stirling::run_verify(opt), verify_args);
    }

    if (ineq_cmd->parsed()) {
      ineq_opt.timing = ineq_args.timing;
      return run_reports(stirling::run_inequalities(ineq_opt), ineq_args);
    }

    if (conj_cmd->parsed()) {
      conj_opt.timing = conj_args.timing;
      return run_reports(stirling::run_conjecture(conj_opt), conj_args);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}
