#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace milnor {

enum class Errc {
  ContextMismatch,
  NotAPthPower,
  ExponentOverflow,
  NotClosed,
  CoefficientNotIntegral,
  WindowOverflow,
  OutOfRange,
  MalformedSymbol,
  PreconditionViolated,
  InvalidParams,
  NotEisenstein,
  TooLarge,
  ParamsMismatch,
  ParseError,
};

std::string_view errc_name(Errc code) noexcept;

class MathError : public std::runtime_error {
 public:
  MathError(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw MathError(code, what); }

}  // namespace milnor
