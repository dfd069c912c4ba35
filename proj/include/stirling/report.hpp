#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace stirling {

using ordered_json = nlohmann::ordered_json;

enum class Format { text, csv, json };

inline Format format_from_name(const std::string& name) {
  if (name == "text") return Format::text;
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  throw std::invalid_argument("unknown format: " + name);
}

struct Failure {
  ordered_json params;
  ordered_json witness;
};

// One verification suite. Big values are serialized as decimal strings;
// field order is fixed so reports diff cleanly. `extra` holds suite-
// specific fields (conjecture claim status, findings) that are spliced in
// between `failures` and `wall_time_ms`.
struct SuiteReport {
  std::string suite;
  ordered_json config = ordered_json::object();
  std::uint64_t instances = 0;
  std::uint64_t passes = 0;
  std::vector<Failure> failures;
  ordered_json extra = ordered_json::object();
  std::uint64_t wall_time_ms = 0;

  bool pass() const { return failures.empty(); }
};

inline ordered_json suite_to_json(const SuiteReport& report) {
  ordered_json j;
  j["suite"] = report.suite;
  j["config"] = report.config;
  j["instances"] = report.instances;
  j["passes"] = report.passes;
  ordered_json failures = ordered_json::array();
  for (const Failure& f : report.failures)
    failures.push_back(ordered_json{{"params", f.params}, {"witness", f.witness}});
  j["failures"] = failures;
  for (const auto& [key, value] : report.extra.items()) j[key] = value;
  j["wall_time_ms"] = report.wall_time_ms;
  return j;
}

inline std::string render_json(const std::vector<SuiteReport>& reports) {
  ordered_json array = ordered_json::array();
  for (const SuiteReport& r : reports) array.push_back(suite_to_json(r));
  return array.dump(2) + "\n";
}

inline std::string render_csv(const std::vector<SuiteReport>& reports) {
  std::ostringstream out;
  out << "suite,instances,passes,failures\n";
  for (const SuiteReport& r : reports)
    out << r.suite << ',' << r.instances << ',' << r.passes << ','
        << r.failures.size() << '\n';
  return out.str();
}

inline std::string render_text(const std::vector<SuiteReport>& reports) {
  std::ostringstream out;
  for (const SuiteReport& r : reports) {
    out << (r.pass() ? "PASS" : "FAIL") << "  " << r.suite << "  (" << r.passes << '/'
        << r.instances << " checks)";
    if (r.wall_time_ms != 0) out << "  [" << r.wall_time_ms << " ms]";
    out << '\n';
    for (const Failure& f : r.failures)
      out << "      failure: params=" << f.params.dump()
          << " witness=" << f.witness.dump() << '\n';
    if (!r.extra.empty())
      for (const auto& [key, value] : r.extra.items())
        out << "      " << key << ": " << value.dump() << '\n';
  }
  return out.str();
}

inline std::string render(const std::vector<SuiteReport>& reports, Format format) {
  switch (format) {
    case Format::json: return render_json(reports);
    case Format::csv: return render_csv(reports);
    case Format::text: return render_text(reports);
  }
  return {};
}

}  // namespace stirling
