#pragma once

#include <stdexcept>
#include <string>

namespace rank2 {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define RANK2_DEFINE_ERROR(Name)                                  \
  class Name : public Error {                                     \
   public:                                                        \
    explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
  }

RANK2_DEFINE_ERROR(NonDivisibleExponent);
RANK2_DEFINE_ERROR(InexactDivision);
RANK2_DEFINE_ERROR(CapExceeded);
RANK2_DEFINE_ERROR(ConvergenceFailure);
RANK2_DEFINE_ERROR(NonTerminating);
RANK2_DEFINE_ERROR(MalformedSupport);
RANK2_DEFINE_ERROR(PreconditionViolated);
RANK2_DEFINE_ERROR(NotFound);
RANK2_DEFINE_ERROR(NegativeEntry);
RANK2_DEFINE_ERROR(EmptyVariety);
RANK2_DEFINE_ERROR(OutOfRange);

#undef RANK2_DEFINE_ERROR

}  // namespace rank2
