#pragma once

#include <stdexcept>
#include <string>

namespace vcyc {

/// Base of every error raised by the library. `kind()` is the stable name
/// used in structured CLI error payloads.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define VCYC_DEFINE_ERROR(Name)                                          \
  class Name : public Error {                                            \
   public:                                                               \
    explicit Name(const std::string& message) : Error(#Name, message) {} \
  }

VCYC_DEFINE_ERROR(InvalidArgument);
VCYC_DEFINE_ERROR(ArithmeticOverflow);
VCYC_DEFINE_ERROR(CapExceeded);
VCYC_DEFINE_ERROR(NotNormal);
VCYC_DEFINE_ERROR(OwnerMismatch);
VCYC_DEFINE_ERROR(RelationViolation);
VCYC_DEFINE_ERROR(TypeMismatch);
VCYC_DEFINE_ERROR(ShapeMismatch);
VCYC_DEFINE_ERROR(RingMismatch);
VCYC_DEFINE_ERROR(FilterViolation);
VCYC_DEFINE_ERROR(NoIsoAvailable);
VCYC_DEFINE_ERROR(NotAFunctor);
VCYC_DEFINE_ERROR(NotNatural);
VCYC_DEFINE_ERROR(LiftMismatch);
VCYC_DEFINE_ERROR(NotMonoidCat);
VCYC_DEFINE_ERROR(TwistMismatch);
VCYC_DEFINE_ERROR(UnknownDiagram);
VCYC_DEFINE_ERROR(ParseError);

#undef VCYC_DEFINE_ERROR

}  // namespace vcyc
