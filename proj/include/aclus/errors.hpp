#pragma once

#include <stdexcept>
#include <string>

namespace aclus {

enum class errc {
  context_mismatch,
  zero_polynomial,
  parse_error,
  invalid_argument,
  guard_exceeded,
  io_error,
};

/// Library-wide exception type; every failure carries a category and a message.
class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace aclus
