#pragma once

#include <stdexcept>
#include <string>

namespace rskop {

enum class ErrorKind {
  invalid_weight,
  invalid_tableau,
  invalid_pair,
  invalid_argument,
  infeasible_swap,
  capacity,
  internal,
};

// Every failure raised by the library. The CLI maps kinds to exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

const char* kind_name(ErrorKind kind) noexcept;

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

}  // namespace rskop
