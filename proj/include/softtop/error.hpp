#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace softtop {

enum class Errc {
  kInvalidContext,
  kUnknownParameter,
  kUnknownElement,
  kMissingParameter,
  kContextMismatch,
  kInstanceTooLarge,
  kUnknownTheorem,
  kNotBijective,
  kSyntaxError,
  kUnknownName,
  kAxiomViolation,
};

std::string_view errc_name(Errc code);

class SoftError : public std::runtime_error {
 public:
  SoftError(Errc code, const std::string& message, std::size_t line = 0);

  Errc code() const noexcept { return code_; }
  // 1-based source line for parse errors, 0 otherwise.
  std::size_t line() const noexcept { return line_; }

 private:
  Errc code_;
  std::size_t line_;
};

}  // namespace softtop
