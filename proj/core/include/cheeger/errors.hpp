#pragma once

#include <stdexcept>
#include <string>

namespace cheeger {

enum class ErrorKind {
  InvalidGeometry,
  InvalidParameter,
  FallbackRequired,
  NotConnected,
  InsufficientScales,
  NoSolution,
  NumericalFailure,
  DeltaTooLarge,
  InvalidInput,
  ResolutionTooCoarse,
  EmptyRegion,
  UsageError,
};

const char* to_string(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

#define CHEEGER_ERROR_TYPE(Name)                                   \
  struct Name : Error {                                            \
    explicit Name(const std::string& w) : Error(ErrorKind::Name, w) {} \
  }

CHEEGER_ERROR_TYPE(InvalidGeometry);
CHEEGER_ERROR_TYPE(InvalidParameter);
CHEEGER_ERROR_TYPE(FallbackRequired);
CHEEGER_ERROR_TYPE(NotConnected);
CHEEGER_ERROR_TYPE(InsufficientScales);
CHEEGER_ERROR_TYPE(NoSolution);
CHEEGER_ERROR_TYPE(NumericalFailure);
CHEEGER_ERROR_TYPE(DeltaTooLarge);
CHEEGER_ERROR_TYPE(InvalidInput);
CHEEGER_ERROR_TYPE(ResolutionTooCoarse);
CHEEGER_ERROR_TYPE(EmptyRegion);
CHEEGER_ERROR_TYPE(UsageError);

#undef CHEEGER_ERROR_TYPE

}  // namespace cheeger
