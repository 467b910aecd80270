#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace permsum {

enum class ErrorKind {
  SizeMismatch,
  NoSuccessor,
  NoPredecessor,
  TooLarge,
  MalformedInput,
  NotAPermutation,
  Overflow,
  NonInjectiveInputs,
  NotIncreasing,
  NonPositiveWeight,
  NegativeInputs,
  BaseTooSmall,
  BadIndex,
  PrefixMismatch,
  InfeasibleBudget,
  NodeLimitReached,
  NotDistinguishing,
  PoolTooSmall,
  UnknownSum,
  RemainingOutOfRange,
};

/// Stable identifier of an error kind, e.g. "SizeMismatch". Surfaced verbatim by the CLI.
std::string_view error_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& detail);

// Checked 64-bit arithmetic; every overflow becomes ErrorKind::Overflow.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_sub(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

}  // namespace permsum
