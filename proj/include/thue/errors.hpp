#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace thue {

// Base of every library error. code() is the stable machine-readable name
// emitted in CLI JSON error objects.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& detail)
      : std::runtime_error(detail.empty() ? code : code + ": " + detail),
        code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

// Raised by interval operations whose result cannot be certified at the
// current working precision. eval_to_error retries these at higher precision
// and rethrows once the precision ceiling is reached.
class Indeterminate : public Error {
 public:
  using Error::Error;
};

#define THUE_ERROR(Name, Base)                               \
  class Name : public Base {                                 \
   public:                                                   \
    explicit Name(const std::string& detail = std::string()) \
        : Base(#Name, detail) {}                             \
  };

THUE_ERROR(DivisionNearZero, Indeterminate)
THUE_ERROR(LogOfNonPositive, Indeterminate)
THUE_ERROR(SqrtOfNegative, Indeterminate)

THUE_ERROR(NonPositiveDiscriminant, Error)
THUE_ERROR(DegenerateLeadingCoefficient, Error)
THUE_ERROR(ReduciblePolynomial, Error)
THUE_ERROR(NegativeArgument, Error)
THUE_ERROR(PrecisionExhausted, Error)
THUE_ERROR(NotUnimodular, Error)
THUE_ERROR(ReducibleForm, Error)
THUE_ERROR(OriginPoint, Error)
THUE_ERROR(TieUnresolvable, Error)
THUE_ERROR(ZeroElement, Error)
THUE_ERROR(EmptySearch, Error)
THUE_ERROR(RankDeficient, Error)
THUE_ERROR(SamePoint, Error)
THUE_ERROR(NoCrossing, Error)

#undef THUE_ERROR

}  // namespace thue
