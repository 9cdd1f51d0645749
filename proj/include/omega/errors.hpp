#pragma once

#include <stdexcept>
#include <string>

namespace omega {

/// Broad classes used by the CLI to pick an exit code.
enum class ErrorClass { Parse, Math, Indeterminate };

/// Root of every error raised by the library.
class OmegaError : public std::runtime_error {
 public:
  OmegaError(std::string kind, const std::string& message, ErrorClass cls = ErrorClass::Math)
      : std::runtime_error(message), kind_(std::move(kind)), class_(cls) {}

  const std::string& kind() const noexcept { return kind_; }
  ErrorClass error_class() const noexcept { return class_; }

 private:
  std::string kind_;
  ErrorClass class_;
};

#define OMEGA_DEFINE_ERROR(Name, Class)                                              \
  class Name : public OmegaError {                                                   \
   public:                                                                           \
    explicit Name(const std::string& message) : OmegaError(#Name, message, Class) {} \
  };

OMEGA_DEFINE_ERROR(TruncationUnderflow, ErrorClass::Math)
OMEGA_DEFINE_ERROR(DivisionByZero, ErrorClass::Math)
OMEGA_DEFINE_ERROR(IndistinguishableAtTruncation, ErrorClass::Indeterminate)
OMEGA_DEFINE_ERROR(NotInRo, ErrorClass::Math)
OMEGA_DEFINE_ERROR(OrderExceedsKnown, ErrorClass::Math)
OMEGA_DEFINE_ERROR(NonRepresentableBase, ErrorClass::Math)
OMEGA_DEFINE_ERROR(DomainError, ErrorClass::Math)
OMEGA_DEFINE_ERROR(NoStabilization, ErrorClass::Math)
OMEGA_DEFINE_ERROR(PredecessorOfZero, ErrorClass::Math)
OMEGA_DEFINE_ERROR(OutOfDomain, ErrorClass::Math)
OMEGA_DEFINE_ERROR(NotInfinitesimal, ErrorClass::Math)
OMEGA_DEFINE_ERROR(SingularDerivative, ErrorClass::Math)
OMEGA_DEFINE_ERROR(SeedMismatch, ErrorClass::Math)
OMEGA_DEFINE_ERROR(UnsupportedBasePoint, ErrorClass::Math)
OMEGA_DEFINE_ERROR(IndexOutOfRange, ErrorClass::Math)

#undef OMEGA_DEFINE_ERROR

}  // namespace omega
