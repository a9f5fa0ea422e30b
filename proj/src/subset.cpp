#include "cgx/subset.hpp"

#include <string>

#include "cgx/error.hpp"

namespace cgx {

std::vector<ElementId> Subset::elements() const {
  std::vector<ElementId> out;
  out.reserve(size());
  for_each([&](ElementId e) { out.push_back(e); });
  return out;
}

void require_within_limit(std::size_t n, std::size_t limit, const char* what) {
  if (n > limit) {
    throw LimitExceeded(std::string(what) + ": |E| = " + std::to_string(n) + " exceeds limit " +
                        std::to_string(limit));
  }
  if (n > kMaxEnumerable) {
    throw LimitExceeded(std::string(what) + ": |E| = " + std::to_string(n) +
                        " exceeds the enumeration ceiling " + std::to_string(kMaxEnumerable));
  }
}

}  // namespace cgx
