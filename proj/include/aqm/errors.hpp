#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace aqm {

// Error with a stable machine-readable code ("impossible-answer",
// "no-candidate-question", ...) plus a human-readable detail string.
class AqmError : public std::runtime_error {
 public:
  explicit AqmError(std::string code, const std::string& detail = "")
      : std::runtime_error(detail.empty() ? code : code + ": " + detail),
        code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

// Invalid configuration or arguments; maps to CLI exit code 2.
class ConfigError : public AqmError {
 public:
  explicit ConfigError(const std::string& detail) : AqmError("config", detail) {}
};

// Filesystem/stream failure; maps to CLI exit code 4.
class IoError : public AqmError {
 public:
  explicit IoError(const std::string& detail) : AqmError("io", detail) {}
};

}  // namespace aqm
