#pragma once

#include <stdexcept>
#include <string>

namespace cgx {

/// Malformed input data or a violated precondition (CLI exit code 2).
class InvalidInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Desk-scale guard tripped: an exhaustive search would exceed its size limit.
class LimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A construct-then-verify procedure could not certify its output (CLI exit code 1).
class VerificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Internal consistency failure; indicates a bug rather than bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Default |E| ceiling for exponential searches.
inline constexpr std::size_t kDefaultLimit = 12;

/// Default |E| ceiling for the factorial isomorphism search.
inline constexpr std::size_t kDefaultIsomorphismLimit = 8;

/// Hard ceiling for 2^N subset enumeration regardless of user limits.
inline constexpr std::size_t kMaxEnumerable = 24;

void require_within_limit(std::size_t n, std::size_t limit, const char* what);

}  // namespace cgx
