#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "pst/triple.hpp"

namespace pst {

using Json = nlohmann::ordered_json;

enum class Command { Commutant, Dirac, Beta, Verify, Report };
enum class Format { Json, Text };

struct RunSpec {
  Command command = Command::Verify;
  std::optional<CaseTag> case_tag;
  std::optional<GradingTag> grading;
  std::optional<std::string> beta;
  bool self_adjoint = false;
  bool basis = false;
  Format format = Format::Json;
  std::optional<std::string> out;
  std::string scope = "all";
  std::optional<std::string> help;  ///< set when help was requested
};

/// Arguments without the program name. Throws UsageError naming the
/// offending flag or value.
RunSpec parse_args(const std::vector<std::string>& args);
RunSpec parse_args(int argc, const char* const* argv);

std::string to_string(Command c);

struct Check {
  std::string name;
  std::string anchor;
  bool pass = false;
};

struct Report {
  Json inputs = Json::object();
  Json dimensions = Json::object();
  std::optional<Json> basis;
  std::vector<Check> checks;
  std::optional<Json> verdicts;

  bool ok() const;
};

/// Names accepted by run_verify besides "all".
std::vector<std::string> verify_scopes();

/// Runs the named check or every check; throws UsageError on an unknown scope.
Report run_verify(const std::string& scope);

Report run(const RunSpec& spec);

/// Deterministic serialization in the requested format.
std::string emit_report(const Report& r, const RunSpec& spec);

/// Writes to spec.out, or stdout when unset; throws Error with the path on failure.
void write_output(const std::string& bytes, const RunSpec& spec);

}  // namespace pst
