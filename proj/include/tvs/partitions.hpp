#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace tvs {

/// Every partition of n into nondecreasing parts >= min_part with at most
/// max_parts parts, in lexicographic order.
inline std::vector<std::vector<std::size_t>> partitions(std::size_t n, std::size_t min_part,
                                                        std::size_t max_parts) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t left, std::size_t lo) {
    if (left == 0) {
      if (!cur.empty()) out.push_back(cur);
      return;
    }
    if (cur.size() == max_parts) return;
    for (std::size_t part = lo; part <= left; ++part) {
      cur.push_back(part);
      rec(left - part, part);
      cur.pop_back();
    }
  };
  rec(n, min_part);
  return out;
}

}  // namespace tvs
