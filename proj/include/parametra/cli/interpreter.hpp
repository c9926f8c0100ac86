#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "parametra/analysis/genericity.hpp"
#include "parametra/cli/script.hpp"

namespace parametra::cli {

// An engine failure inside a command.
class EngineError : public std::runtime_error {
 public:
  EngineError(std::size_t line, const std::string& command, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ": " + command + ": " + msg), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct NamedConstraint {
  std::string param;
  Sign sign = Sign::Positive;
};

struct RunOptions {
  // Replaces the ordering token of every ring declaration.
  std::optional<std::string> order;
  std::optional<std::size_t> max_ext;
  // Parameters absent from the current ring are ignored.
  std::vector<NamedConstraint> constraints;
  std::uint64_t seed = 1;
  bool timing = false;
};

// "pos=g,m1;nonzero=a;nonneg=k1". Throws std::invalid_argument.
std::vector<NamedConstraint> parse_constraints(std::string_view text);

std::string_view engine_version();

// Executes the statements in order and collects one report entry per
// command. Throws EngineError.
nlohmann::json run(const SessionScript& script, const RunOptions& opts = {});

// Session-style text of a report.
std::string render_text(const nlohmann::json& report);

}  // namespace parametra::cli
