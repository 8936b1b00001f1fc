#pragma once

#include <stdexcept>
#include <string>

namespace orbitwist {

/// Broad failure category; the CLI maps each kind onto a process exit code.
enum class ErrorKind {
  Parse,     // malformed input text
  Schema,    // well-formed input violating its schema
  Domain,    // mathematically invalid request
  Budget,    // enumeration or work limit hit
  Internal,  // an asserted identity failed
};

/// Exception carrying a stable, module-qualified code such as
/// "group_core.NotAGroup" alongside a human-readable message.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, std::string code, const std::string& message)
      : std::runtime_error(message), kind_(kind), code_(std::move(code)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& code() const noexcept { return code_; }

private:
  ErrorKind kind_;
  std::string code_;
};

[[noreturn]] inline void fail(ErrorKind kind, std::string code, const std::string& message) {
  throw Error(kind, std::move(code), message);
}

} // namespace orbitwist
