#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <span>
#include <vector>

#include "tvs/graph.hpp"

namespace tvs {

/// Completes an edge labeling to an s-irregular total labeling, if one
/// exists. Vertices are visited by ascending vertex sum (ties by index) and
/// each takes the smallest weight above both its sum and the previous
/// weight. Sorted weights are pointwise minimal among all valid completions,
/// so a failure here means no completion with labels <= s exists.
inline std::optional<TotalLabeling> greedy_vertex_completion(const Graph& g,
                                                             std::span<const label_t> edge_labels,
                                                             label_t s) {
  const std::vector<label_t> sums = vertex_sums(g, edge_labels);
  std::vector<vertex_t> visit(g.order());
  std::iota(visit.begin(), visit.end(), vertex_t{0});
  std::stable_sort(visit.begin(), visit.end(),
                   [&](vertex_t a, vertex_t b) { return sums[a] < sums[b]; });

  TotalLabeling lab;
  lab.s = s;
  lab.edge_labels.assign(edge_labels.begin(), edge_labels.end());
  lab.vertex_labels.assign(g.order(), 0);
  label_t prev = 0;
  bool first = true;
  for (vertex_t v : visit) {
    label_t w = sums[v] + 1;
    if (!first) w = std::max(w, prev + 1);
    label_t label = w - sums[v];
    if (label > s) return std::nullopt;
    lab.vertex_labels[v] = label;
    prev = w;
    first = false;
  }
  return lab;
}

}  // namespace tvs
