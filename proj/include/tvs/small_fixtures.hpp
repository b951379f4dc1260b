#pragma once

// Stored labelings for the wheels and helms too small for the general
// constructions (W_3..W_6, H_3, H_4). Each is the first witness the exact
// search returns at k = tvs, on the canonical vertex/edge order from
// generate(); small_fixtures regeneration tests re-derive and compare them.

#include <optional>

#include "tvs/families.hpp"
#include "tvs/graph.hpp"

namespace tvs {

inline std::optional<TotalLabeling> fixture_labeling(Family family, std::size_t n) {
  if (family == Family::wheel) {
    switch (n) {
      case 3: return TotalLabeling{{1, 1, 2, 2}, {1, 1, 1, 1, 2, 2}, 2};
      case 4: return TotalLabeling{{1, 2, 1, 2, 2}, {1, 1, 2, 1, 1, 1, 2, 2}, 2};
      case 5: return TotalLabeling{{1, 2, 2, 2, 2, 2}, {1, 1, 2, 2, 1, 1, 1, 1, 2, 2}, 2};
      case 6:
        return TotalLabeling{{1, 2, 3, 3, 3, 3, 1}, {1, 1, 1, 1, 2, 1, 1, 1, 1, 2, 2, 3}, 3};
      default: break;
    }
  } else if (family == Family::helm) {
    switch (n) {
      case 3: return TotalLabeling{{1, 1, 2, 1, 2, 2, 2}, {1, 1, 1, 1, 2, 2, 1, 1, 2}, 2};
      case 4:
        return TotalLabeling{{2, 3, 3, 2, 1, 2, 3, 3, 3}, {1, 1, 1, 1, 1, 1, 2, 3, 1, 1, 1, 2}, 3};
      default: break;
    }
  }
  return std::nullopt;
}

}  // namespace tvs
