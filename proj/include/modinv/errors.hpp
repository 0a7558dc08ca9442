#ifndef MODINV_ERRORS_HPP
#define MODINV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace modinv {

enum class ErrorCode {
  NotAnInteger,
  ReconstructionFailed,
  NotDecomposable,
  SizeCap,
  ValidationFailed,
  DegenerateBraiding,
  NotAPermutation,
  IncompatibleLevel,
  BranchingTableCorrupt,
  ClassificationMismatch,
  SearchSpaceTooLarge,
  InequalityViolated,
  NotSimpleCurrent,
  DataMismatch,
  ExtendedInvarianceFailed,
  NegativeEntry,
  CoxeterMismatch,
  SpectrumMismatch,
  IdentityViolated,
  InvalidArgument,
  ParseError,
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotAnInteger: return "NotAnInteger";
    case ErrorCode::ReconstructionFailed: return "ReconstructionFailed";
    case ErrorCode::NotDecomposable: return "NotDecomposable";
    case ErrorCode::SizeCap: return "SizeCap";
    case ErrorCode::ValidationFailed: return "ValidationFailed";
    case ErrorCode::DegenerateBraiding: return "DegenerateBraiding";
    case ErrorCode::NotAPermutation: return "NotAPermutation";
    case ErrorCode::IncompatibleLevel: return "IncompatibleLevel";
    case ErrorCode::BranchingTableCorrupt: return "BranchingTableCorrupt";
    case ErrorCode::ClassificationMismatch: return "ClassificationMismatch";
    case ErrorCode::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case ErrorCode::InequalityViolated: return "InequalityViolated";
    case ErrorCode::NotSimpleCurrent: return "NotSimpleCurrent";
    case ErrorCode::DataMismatch: return "DataMismatch";
    case ErrorCode::ExtendedInvarianceFailed: return "ExtendedInvarianceFailed";
    case ErrorCode::NegativeEntry: return "NegativeEntry";
    case ErrorCode::CoxeterMismatch: return "CoxeterMismatch";
    case ErrorCode::SpectrumMismatch: return "SpectrumMismatch";
    case ErrorCode::IdentityViolated: return "IdentityViolated";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above so
/// callers (and the CLI) can branch on the kind of failure.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised by nearest_integer; keeps the offending value for diagnostics.
class NotAnIntegerError : public Error {
 public:
  NotAnIntegerError(const std::string& value, long long nearest, double distance)
      : Error(ErrorCode::NotAnInteger,
              value + " (nearest " + std::to_string(nearest) + ", distance " +
                  std::to_string(distance) + ")"),
        nearest_(nearest),
        distance_(distance) {}

  long long nearest() const noexcept { return nearest_; }
  double distance() const noexcept { return distance_; }

 private:
  long long nearest_;
  double distance_;
};

}  // namespace modinv

#endif  // MODINV_ERRORS_HPP
