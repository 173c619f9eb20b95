#pragma once

#include <charconv>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "plab/version.hpp"

namespace plab {

// Shortest round-trip decimal form; used everywhere a double reaches an
// output file so that reruns are byte-identical.
inline std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

enum class CheckStatus { Pass, Fail, Inconclusive, Info };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      return "pass";
    case CheckStatus::Fail:
      return "fail";
    case CheckStatus::Inconclusive:
      return "inconclusive";
    default:
      return "info";
  }
}

// One estimate row: what was measured, against which reference, where the
// reference comes from, and whether the stated tolerance held. Tolerances are
// stored next to the estimates; there are no hidden pass thresholds.
struct ReportRow {
  std::string label;
  long n = 0;
  long replicates = 0;
  double estimate = 0;
  double std_error = 0;
  double reference = 0;
  std::string reference_source;
  double tolerance = 0;
  CheckStatus status = CheckStatus::Info;

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["label"] = label;
    j["n"] = n;
    j["replicates"] = replicates;
    j["estimate"] = estimate;
    j["std_error"] = std_error;
    j["reference"] = reference;
    j["reference_source"] = reference_source;
    j["tolerance"] = tolerance;
    j["status"] = to_string(status);
    return j;
  }
};

struct ExperimentReport {
  std::string experiment;
  std::string spec_key;
  std::uint64_t seed = 0;
  nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
  std::vector<ReportRow> rows;
  std::vector<std::string> notes;

  CheckStatus overall() const {
    bool inconclusive = false;
    for (const auto& r : rows) {
      if (r.status == CheckStatus::Fail) return CheckStatus::Fail;
      if (r.status == CheckStatus::Inconclusive) inconclusive = true;
    }
    return inconclusive ? CheckStatus::Inconclusive : CheckStatus::Pass;
  }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["experiment"] = experiment;
    j["spec"] = spec_key;
    j["seed"] = seed;
    j["library_version"] = kVersion;
    j["parameters"] = parameters;
    j["rows"] = nlohmann::ordered_json::array();
    for (const auto& r : rows) j["rows"].push_back(r.to_json());
    j["notes"] = notes;
    j["overall"] = to_string(overall());
    return j;
  }

  std::string to_json_string() const { return to_json().dump(2) + "\n"; }

  // Per-n table, plot-ready.
  std::string to_csv() const {
    std::string out =
        "label,n,replicates,estimate,std_error,reference,reference_source,tolerance,status\n";
    for (const auto& r : rows) {
      out += r.label + ',' + std::to_string(r.n) + ',' + std::to_string(r.replicates) + ',' +
             format_double(r.estimate) + ',' + format_double(r.std_error) + ',' +
             format_double(r.reference) + ',' + r.reference_source + ',' +
             format_double(r.tolerance) + ',' + to_string(r.status) + '\n';
    }
    return out;
  }
};

}  // namespace plab
