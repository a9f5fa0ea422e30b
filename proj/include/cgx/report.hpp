#pragma once

#include <optional>
#include <string>

#include "cgx/subset.hpp"

namespace cgx {

/// Outcome of an exhaustive verification, with the first failing subset on failure.
struct VerificationReport {
  bool pass = true;
  std::optional<Subset> witness;
  std::string detail;

  static VerificationReport ok() { return {}; }
  static VerificationReport failure(Subset witness, std::string detail) {
    return VerificationReport{false, witness, std::move(detail)};
  }
};

}  // namespace cgx
