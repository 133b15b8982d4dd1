#ifndef PIR_ERRORS_HPP
#define PIR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pir {

enum class Errc {
  OutOfRange,
  DomainMismatch,
  IllFormed,
  SyntaxError,
  UnboundName,
  InvalidDerivation,
  NotCoinitial,
  NotConcurrent,
  NotComposable,
  EndpointMismatch,
  CofinalityViolation,
};

const char* errcName(Errc c);

struct Error : std::runtime_error {
  Errc code;
  Error(Errc c, const std::string& msg)
      : std::runtime_error(std::string(errcName(c)) + ": " + msg), code(c) {}
};

// The cofinality theorem guarantees success on concurrent pairs; this firing
// means a bug or an unsound witness, so it gets its own type (CLI exit 2).
struct CofinalityViolation : Error {
  explicit CofinalityViolation(const std::string& msg)
      : Error(Errc::CofinalityViolation, msg) {}
};

[[noreturn]] inline void raise(Errc c, const std::string& msg) {
  if (c == Errc::CofinalityViolation) throw CofinalityViolation(msg);
  throw Error(c, msg);
}

}  // namespace pir

#endif
