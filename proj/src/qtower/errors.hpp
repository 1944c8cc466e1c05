#pragma once

#include <stdexcept>
#include <string>

namespace qtower {

/// Error categories. The numeric values are the CLI exit codes and the
/// C API status codes.
enum class ErrorKind : int {
  usage = 1,
  parse = 2,
  validation = 3,
  groupspec = 4,
  precondition = 5,
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string &what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

inline Error usage_error(const std::string &m) { return {ErrorKind::usage, m}; }
inline Error parse_error(const std::string &m) { return {ErrorKind::parse, m}; }
inline Error validation_error(const std::string &m) {
  return {ErrorKind::validation, m};
}
inline Error groupspec_error(const std::string &m) {
  return {ErrorKind::groupspec, m};
}
inline Error precondition_error(const std::string &m) {
  return {ErrorKind::precondition, m};
}

} // namespace qtower
