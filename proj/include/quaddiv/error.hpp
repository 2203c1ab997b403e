#pragma once

#include <stdexcept>
#include <string>

namespace quaddiv {

enum class ErrorKind {
  InvalidInput,      // malformed or out-of-domain arguments
  Overflow,          // exact integer result does not fit its carrier type
  Resource,          // allocation / size cap exceeded
  HypothesisNotMet,  // sigma_{-1}(Omega) <= 4/3 does not hold
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

inline void require(bool ok, const std::string& what) {
  if (!ok) fail(ErrorKind::InvalidInput, what);
}

}  // namespace quaddiv
