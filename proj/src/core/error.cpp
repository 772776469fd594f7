#include "algmat/error.hpp"

namespace algmat {

const char* error_kind_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::CharZeroField: return "CharZeroField";
    case ErrorKind::DegreeTooLarge: return "DegreeTooLarge";
    case ErrorKind::ModulusTooLarge: return "ModulusTooLarge";
    case ErrorKind::InvalidField: return "InvalidField";
    case ErrorKind::UnknownField: return "UnknownField";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownVariable: return "UnknownVariable";
    case ErrorKind::DuplicateVariable: return "DuplicateVariable";
    case ErrorKind::RingMismatch: return "RingMismatch";
    case ErrorKind::NameCollision: return "NameCollision";
    case ErrorKind::ExponentOverflow: return "ExponentOverflow";
    case ErrorKind::ResourceLimitExceeded: return "ResourceLimitExceeded";
    case ErrorKind::ContextMismatch: return "ContextMismatch";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::DenominatorVanishes: return "DenominatorVanishes";
    case ErrorKind::NotOnVariety: return "NotOnVariety";
    case ErrorKind::NoValidPoint: return "NoValidPoint";
    case ErrorKind::GroundSetTooLarge: return "GroundSetTooLarge";
    case ErrorKind::GroundSetMismatch: return "GroundSetMismatch";
    case ErrorKind::ShiftPairNonzero: return "ShiftPairNonzero";
    case ErrorKind::PrimalityNotAsserted: return "PrimalityNotAsserted";
    case ErrorKind::NotAMatroid: return "NotAMatroid";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace algmat
