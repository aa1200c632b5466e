#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qcomp {

enum class ErrorKind {
  // order-core
  NotAPoset,
  NotALattice,
  NoBounds,
  UnknownElement,
  NotInvolutive,
  NotOrderReversing,
  NotComplement,
  NotOrthomodular,
  PreconditionViolated,
  // galois-maps
  NotJoinPreserving,
  NotMeetPreserving,
  MixedSignatures,
  TooLarge,
  // hilbert-geometry / compound-states
  BadShape,
  NonFinite,
  DimensionMismatch,
  CrossCheckFailed,
  BadBasis,
  NotRepresentable,
  ZeroOperator,
  ZeroVector,
  // state-quantale
  NotMember,
  IllDefined,
  // cli-io
  UnknownSuite,
  ParseError,
};

constexpr std::string_view to_string(ErrorKind k) noexcept {
  switch (k) {
    case ErrorKind::NotAPoset: return "NotAPoset";
    case ErrorKind::NotALattice: return "NotALattice";
    case ErrorKind::NoBounds: return "NoBounds";
    case ErrorKind::UnknownElement: return "UnknownElement";
    case ErrorKind::NotInvolutive: return "NotInvolutive";
    case ErrorKind::NotOrderReversing: return "NotOrderReversing";
    case ErrorKind::NotComplement: return "NotComplement";
    case ErrorKind::NotOrthomodular: return "NotOrthomodular";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::NotJoinPreserving: return "NotJoinPreserving";
    case ErrorKind::NotMeetPreserving: return "NotMeetPreserving";
    case ErrorKind::MixedSignatures: return "MixedSignatures";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::BadShape: return "BadShape";
    case ErrorKind::NonFinite: return "NonFinite";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::CrossCheckFailed: return "CrossCheckFailed";
    case ErrorKind::BadBasis: return "BadBasis";
    case ErrorKind::NotRepresentable: return "NotRepresentable";
    case ErrorKind::ZeroOperator: return "ZeroOperator";
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::NotMember: return "NotMember";
    case ErrorKind::IllDefined: return "IllDefined";
    case ErrorKind::UnknownSuite: return "UnknownSuite";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the kinds above.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace qcomp
