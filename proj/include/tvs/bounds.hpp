#pragma once

// Counting lower bounds on the total vertex irregularity strength.

#include <cstddef>
#include <map>

#include "tvs/graph.hpp"

namespace tvs {

inline label_t ceil_div(label_t a, label_t b) { return (a + b - 1) / b; }

namespace detail {

inline void require_no_isolated(const Graph& g) {
  if (g.order() == 0) throw GraphError(GraphErrorKind::isolated_vertex, "empty graph");
  for (vertex_t v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 0) {
      throw GraphError(GraphErrorKind::isolated_vertex, "vertex " + std::to_string(v));
    }
  }
}

}  // namespace detail

/// ceil((n + min degree) / (max degree + 1)).
inline label_t baca_bound(const Graph& g) {
  detail::require_no_isolated(g);
  return ceil_div(static_cast<label_t>(g.order() + g.min_degree()),
                  static_cast<label_t>(g.max_degree() + 1));
}

struct DegreeCountBound {
  label_t value;
  std::size_t witness_degree;
};

/// The m vertices of degree <= r have pairwise distinct weights inside
/// [min degree + 1, (r + 1) k], so k >= ceil((m + min degree) / (r + 1)).
/// Maximised over every degree r present; ties keep the smallest r.
inline DegreeCountBound degree_count_bound(const Graph& g) {
  detail::require_no_isolated(g);
  std::map<std::size_t, std::size_t> by_degree;
  for (vertex_t v = 0; v < g.order(); ++v) ++by_degree[g.degree(v)];

  const auto delta = static_cast<label_t>(g.min_degree());
  DegreeCountBound best{0, 0};
  std::size_t at_most = 0;
  for (auto [r, count] : by_degree) {
    at_most += count;
    label_t k = ceil_div(static_cast<label_t>(at_most) + delta, static_cast<label_t>(r + 1));
    if (k > best.value) best = {k, r};
  }
  return best;
}

struct BoundReport {
  label_t baca_bound;
  label_t degree_count_bound;
  label_t best;
  std::size_t witness_degree;
};

inline BoundReport bounds(const Graph& g) {
  const label_t baca = baca_bound(g);
  const DegreeCountBound dc = degree_count_bound(g);
  return {baca, dc.value, std::max(baca, dc.value), dc.witness_degree};
}

}  // namespace tvs
