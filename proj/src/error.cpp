#include "permsum/error.hpp"

namespace permsum {

std::string_view error_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::NoSuccessor: return "NoSuccessor";
    case ErrorKind::NoPredecessor: return "NoPredecessor";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::MalformedInput: return "MalformedInput";
    case ErrorKind::NotAPermutation: return "NotAPermutation";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::NonInjectiveInputs: return "NonInjectiveInputs";
    case ErrorKind::NotIncreasing: return "NotIncreasing";
    case ErrorKind::NonPositiveWeight: return "NonPositiveWeight";
    case ErrorKind::NegativeInputs: return "NegativeInputs";
    case ErrorKind::BaseTooSmall: return "BaseTooSmall";
    case ErrorKind::BadIndex: return "BadIndex";
    case ErrorKind::PrefixMismatch: return "PrefixMismatch";
    case ErrorKind::InfeasibleBudget: return "InfeasibleBudget";
    case ErrorKind::NodeLimitReached: return "NodeLimitReached";
    case ErrorKind::NotDistinguishing: return "NotDistinguishing";
    case ErrorKind::PoolTooSmall: return "PoolTooSmall";
    case ErrorKind::UnknownSum: return "UnknownSum";
    case ErrorKind::RemainingOutOfRange: return "RemainingOutOfRange";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(error_name(kind)) + ": " + detail), kind_(kind) {}

void fail(ErrorKind kind, const std::string& detail) { throw Error(kind, detail); }

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) fail(ErrorKind::Overflow, "addition exceeds 64-bit range");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) fail(ErrorKind::Overflow, "subtraction exceeds 64-bit range");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) fail(ErrorKind::Overflow, "product exceeds 64-bit range");
  return r;
}

}  // namespace permsum
