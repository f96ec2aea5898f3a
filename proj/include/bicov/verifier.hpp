#pragma once

// Check registry, suite runners and report rendering behind the command-line
// verifier. Every record carries the equation tag it verifies and whether the
// check is expected to pass, expected to fail (no-go results) or is a finding.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "bicov/scalar.hpp"

namespace bicov {

inline constexpr int kReportSchemaVersion = 1;

enum class Mode { symbolic, randomized };
enum class Expectation { pass, fail, finding };
enum class Status { pass, fail, fail_as_expected, unexpected_pass, finding };

std::string to_string(Mode m);
std::string to_string(Expectation e);
std::string to_string(Status s);
Mode parse_mode(const std::string& s);
Expectation parse_expectation(const std::string& s);
Status parse_status(const std::string& s);

const std::vector<std::string>& suite_names();

struct RunConfig {
  std::string group = "sp4";
  std::vector<std::string> suites;
  Mode mode = Mode::randomized;
  std::vector<std::uint64_t> seeds{1, 2, 3};
  std::vector<Rational> q_samples{Rational(4), Rational(9, 4)};
  int degree = 2;
  std::optional<std::string> preset;
  /// parameter name -> value; nullopt keeps the parameter free
  std::map<std::string, std::optional<Rational>> params;
  std::string format = "json";
  bool timing = false;
};

/// Throws std::invalid_argument on an empty suite list, unknown suite, mode
/// without seeds, unknown parameter name, bad degree or format.
void validate(const RunConfig& c);

/// "key = value" lines, '#' comments. Run keys (group, suites, mode, seed, q,
/// degree, preset, format) set options; any other key is a parameter whose
/// value is a rational or "free". Throws std::invalid_argument with the line number.
void apply_config_text(RunConfig& c, const std::string& text);

/// "a1=1/2,b3=free"
void apply_params_text(RunConfig& c, const std::string& text);

struct CheckRecord {
  std::string id;
  std::string tag;
  std::string suite;
  Expectation expected = Expectation::pass;
  Status status = Status::pass;
  std::string residual;
  nlohmann::json details = nlohmann::json::object();
  double timing_ms = 0;
};

/// Status from the expectation and the observed truth value of the check.
Status judge(Expectation e, bool holds);

struct VerificationReport {
  RunConfig config;
  std::vector<CheckRecord> records;
  void sort();
  bool success() const;
  int exit_code() const { return success() ? 0 : 1; }
};

VerificationReport run(const RunConfig& config);

nlohmann::json to_json(const VerificationReport& r);
VerificationReport report_from_json(const nlohmann::json& j);
std::string render(const VerificationReport& r, const std::string& format);

}  // namespace bicov
