#pragma once

#include <cstdint>
#include <vector>

#include "borderbases/polynomial.hpp"

namespace borderbases {

// Result of an all-(quasi)-order-ideals run. `pairs` is deduplicated and
// canonically sorted; branch_count counts recursive step invocations and
// raw_count the completions reached before deduplication, so
// |pairs| <= raw_count <= branch_count.
template <typename K>
struct EnumerationResult {
  std::vector<BorderPair<K>> pairs;
  std::uint64_t branch_count = 0;
  std::uint64_t raw_count = 0;
};

}  // namespace borderbases
