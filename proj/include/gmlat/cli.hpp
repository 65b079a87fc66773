#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "gmlat/integer.hpp"
#include "gmlat/isometry.hpp"

namespace gmlat::cli {

using nlohmann::json;

enum ExitCode : int { kOk = 0, kPropertyFailure = 1, kUsageError = 2 };

/// Output of every subcommand. JSON shape:
///   {"command": str, "inputs": {...}, "results": {...}, "status": "ok"|"error", "message": str}
struct Report {
  std::string command;
  json inputs = json::object();
  json results = json::object();
  std::string status = "ok";
  std::string message;

  json to_json() const;
  static Report from_json(const json& j);
  friend bool operator==(const Report&, const Report&) = default;
};

struct Outcome {
  Report report;
  int exit_code = kOk;
};

enum class Format { text, json, csv };

/// Integers print as JSON numbers when they fit in 64 bits, decimal strings otherwise.
json integer_json(const Integer& x);
/// {"num": ..., "den": ...} in lowest terms.
json rational_json(const Rational& x);
Rational rational_from_json(const json& j);

Outcome cmd_disc(std::int64_t d, std::optional<int> variant, const EnumerationOptions& opts = {});
Outcome cmd_count(std::int64_t d);
Outcome cmd_twisted(std::int64_t d_prime, bool include_r1);
/// Suites: disc-structure, marking-group, glue-extension, k3-association, surjectivity, mukai.
Outcome cmd_verify(std::int64_t start, std::int64_t end, const std::string& suite, const EnumerationOptions& opts = {});

std::string render(const Report& report, Format format);

/// Full command line entry point; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gmlat::cli
