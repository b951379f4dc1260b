#pragma once

// Generators for the nine supported graph families. Vertex and edge order
// is fixed per family; the constructors index into it directly.
//
//   cycle / path        v_0 .. v_{n-1} in traversal order, edge i = v_i v_{i+1}
//   prism               outer v_0..v_{n-1}, inner w_i = n+i; outer cycle,
//                       inner cycle, then rungs v_i w_i
//   wheel               rim v_0..v_{n-1}, center n; rim edges then spokes
//   helm                rim v_0..v_{n-1}, pendant p_i = n+i, center 2n;
//                       rim edges, spokes, then pendant edges v_i p_i
//   friendship          triangle t has 2t, 2t+1 and the center 2n; edges
//                       per triangle: base, spoke from 2t, spoke from 2t+1
//   complete            v_0..v_{n-1}, edges (i,j) i<j lexicographic
//   complete-bipartite  v_i = i, w_j = n+j, edges (v_i, w_j) lexicographic
//   two-regular         components in caller order, each a cycle block

#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tvs/graph.hpp"

namespace tvs {

enum class Family {
  cycle,
  path,
  prism,
  wheel,
  helm,
  friendship,
  complete,
  complete_bipartite,
  two_regular,
};

inline constexpr Family kAllFamilies[] = {
    Family::cycle,      Family::path,     Family::prism,
    Family::wheel,      Family::helm,     Family::friendship,
    Family::complete,   Family::complete_bipartite, Family::two_regular,
};

inline std::string_view family_name(Family f) {
  switch (f) {
    case Family::cycle: return "cycle";
    case Family::path: return "path";
    case Family::prism: return "prism";
    case Family::wheel: return "wheel";
    case Family::helm: return "helm";
    case Family::friendship: return "friendship";
    case Family::complete: return "complete";
    case Family::complete_bipartite: return "complete-bipartite";
    case Family::two_regular: return "two-regular";
  }
  return "?";
}

class SpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline Family parse_family(std::string_view name) {
  for (Family f : kAllFamilies) {
    if (family_name(f) == name) return f;
  }
  throw SpecError("unknown family '" + std::string(name) + "'");
}

/// A family together with its size parameter. For two-regular graphs the
/// parameter is the list of cycle lengths and `n` is their total.
struct FamilySpec {
  Family family = Family::cycle;
  std::size_t n = 0;
  std::vector<std::size_t> lengths;

  static FamilySpec of(Family f, std::size_t n) { return {f, n, {}}; }
  static FamilySpec two_regular(std::vector<std::size_t> lengths) {
    std::size_t total = std::accumulate(lengths.begin(), lengths.end(), std::size_t{0});
    return {Family::two_regular, total, std::move(lengths)};
  }

  /// Throws SpecError naming the offending parameter.
  void validate() const {
    auto need = [this](std::size_t min) {
      if (n < min) {
        throw SpecError(std::string(family_name(family)) + ": n must be >= " +
                        std::to_string(min) + " (got " + std::to_string(n) + ")");
      }
    };
    switch (family) {
      case Family::cycle:
      case Family::prism:
      case Family::wheel:
      case Family::helm:
      case Family::complete:
      case Family::complete_bipartite: need(3); break;
      case Family::path: need(2); break;
      case Family::friendship: need(1); break;
      case Family::two_regular:
        if (lengths.empty()) throw SpecError("two-regular: lengths must be nonempty");
        for (std::size_t i = 0; i < lengths.size(); ++i) {
          if (lengths[i] < 3) {
            throw SpecError("two-regular: lengths[" + std::to_string(i) + "] must be >= 3 (got " +
                            std::to_string(lengths[i]) + ")");
          }
        }
        if (n != std::accumulate(lengths.begin(), lengths.end(), std::size_t{0})) {
          throw SpecError("two-regular: n must equal the sum of lengths");
        }
        break;
    }
  }

  std::string describe() const {
    std::string out(family_name(family));
    if (family == Family::two_regular) {
      out += " [";
      for (std::size_t i = 0; i < lengths.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(lengths[i]);
      }
      return out + "]";
    }
    return out + " n=" + std::to_string(n);
  }

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

enum class Role {
  cycle_vertex,
  inner_cycle_vertex,
  path_vertex,
  center,
  pendant,
  triangle_vertex,
  part_a,
  part_b,
};

struct VertexRole {
  Role role;
  std::size_t index;  // position within the role, 0-based
  std::size_t group = 0;  // triangle or component id where meaningful
};

struct CanonicalOrder {
  std::vector<VertexRole> roles;
  /// two-regular only: component ids sorted by ascending length (stable),
  /// and the first vertex of each component in caller order.
  std::vector<std::size_t> component_order;
  std::vector<std::size_t> component_offsets;
};

struct GeneratedGraph {
  Graph graph;
  CanonicalOrder order;
};

namespace detail {

inline void add_cycle(std::vector<Edge>& edges, std::size_t offset, std::size_t len) {
  for (std::size_t i = 0; i < len; ++i) edges.push_back({offset + i, offset + (i + 1) % len});
}

}  // namespace detail

inline GeneratedGraph generate(const FamilySpec& spec) {
  spec.validate();
  const std::size_t n = spec.n;
  std::vector<Edge> edges;
  CanonicalOrder ord;
  std::size_t order = 0;

  switch (spec.family) {
    case Family::cycle:
      order = n;
      detail::add_cycle(edges, 0, n);
      for (std::size_t i = 0; i < n; ++i) ord.roles.push_back({Role::cycle_vertex, i});
      break;
    case Family::path:
      order = n;
      for (std::size_t i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
      for (std::size_t i = 0; i < n; ++i) ord.roles.push_back({Role::path_vertex, i});
      break;
    case Family::prism:
      order = 2 * n;
      detail::add_cycle(edges, 0, n);
      detail::add_cycle(edges, n, n);
      for (std::size_t i = 0; i < n; ++i) edges.push_back({i, n + i});
      for (std::size_t i = 0; i < n; ++i) ord.roles.push_back({Role::cycle_vertex, i});
      for (std::size_t i = 0; i < n; ++i) ord.roles.push_back({Role::inner_cycle_vertex, i});
      break;
    case Family::wheel:
      order = n + 1;
      detail::add_cycle(edges, 0, n);
      for (std::size_t i = 0; i < n; ++i) edges.push_back({i, n});
      for (std::size_t i = 0; i < n; ++i) ord.roles.push_back({Role::cycle_vertex, i});
      ord.roles.push_back({Role::center, 0});
      break;
    case Family::helm:
      order = 2 * n + 1;
      detail::add_cycle(edges, 0, n);
      for (std::size_t i = 0; i < n; ++i) edges.push_back({i, 2 * n});
      for (std::size_t i = 0; i < n; ++i) edges.push_back({i, n + i});
      for (std::size_t i = 0; i < n; ++i) ord.roles.push_back({Role::cycle_vertex, i});
      for (std::size_t i = 0; i < n; ++i) ord.roles.push_back({Role::pendant, i});
      ord.roles.push_back({Role::center, 0});
      break;
    case Family::friendship:
      order = 2 * n + 1;
      for (std::size_t t = 0; t < n; ++t) {
        edges.push_back({2 * t, 2 * t + 1});
        edges.push_back({2 * t, 2 * n});
        edges.push_back({2 * t + 1, 2 * n});
        ord.roles.push_back({Role::triangle_vertex, 0, t});
        ord.roles.push_back({Role::triangle_vertex, 1, t});
      }
      ord.roles.push_back({Role::center, 0});
      break;
    case Family::complete:
      order = n;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) edges.push_back({i, j});
        ord.roles.push_back({Role::part_a, i});
      }
      break;
    case Family::complete_bipartite:
      order = 2 * n;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) edges.push_back({i, n + j});
      }
      for (std::size_t i = 0; i < n; ++i) ord.roles.push_back({Role::part_a, i});
      for (std::size_t i = 0; i < n; ++i) ord.roles.push_back({Role::part_b, i});
      break;
    case Family::two_regular: {
      order = n;
      std::size_t offset = 0;
      for (std::size_t c = 0; c < spec.lengths.size(); ++c) {
        ord.component_offsets.push_back(offset);
        detail::add_cycle(edges, offset, spec.lengths[c]);
        for (std::size_t i = 0; i < spec.lengths[c]; ++i) {
          ord.roles.push_back({Role::cycle_vertex, i, c});
        }
        offset += spec.lengths[c];
      }
      ord.component_order.resize(spec.lengths.size());
      std::iota(ord.component_order.begin(), ord.component_order.end(), std::size_t{0});
      std::stable_sort(ord.component_order.begin(), ord.component_order.end(),
                       [&](std::size_t a, std::size_t b) { return spec.lengths[a] < spec.lengths[b]; });
      break;
    }
  }
  return {build_graph(order, edges), std::move(ord)};
}

}  // namespace tvs
