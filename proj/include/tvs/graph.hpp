#pragma once

// Graph, total labeling containers, vertex sums / weights, and the
// irregularity verifier every construction is checked against.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tvs {

using label_t = std::int64_t;
using vertex_t = std::size_t;

struct Edge {
  vertex_t u;
  vertex_t v;

  vertex_t other(vertex_t w) const { return w == u ? v : u; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

enum class GraphErrorKind {
  self_loop,
  duplicate_edge,
  index_out_of_range,
  length_mismatch,
  isolated_vertex,
  overflow,
};

inline const char* to_string(GraphErrorKind kind) {
  switch (kind) {
    case GraphErrorKind::self_loop: return "self-loop";
    case GraphErrorKind::duplicate_edge: return "duplicate edge";
    case GraphErrorKind::index_out_of_range: return "vertex index out of range";
    case GraphErrorKind::length_mismatch: return "label length mismatch";
    case GraphErrorKind::isolated_vertex: return "isolated vertex";
    case GraphErrorKind::overflow: return "integer overflow";
  }
  return "unknown";
}

class GraphError : public std::runtime_error {
 public:
  GraphError(GraphErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  GraphErrorKind kind() const noexcept { return kind_; }

 private:
  GraphErrorKind kind_;
};

/// Immutable simple undirected graph. Edge order is the order given at
/// construction and is what every edge-label array is aligned to.
class Graph {
 public:
  Graph() = default;

  std::size_t order() const noexcept { return adjacency_.size(); }
  std::size_t size() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(std::size_t e) const { return edges_.at(e); }

  /// Indices of the edges incident to v.
  std::span<const std::size_t> incident(vertex_t v) const { return adjacency_.at(v); }
  std::size_t degree(vertex_t v) const { return adjacency_.at(v).size(); }

  std::size_t min_degree() const {
    std::size_t d = adjacency_.empty() ? 0 : adjacency_.front().size();
    for (const auto& a : adjacency_) d = std::min(d, a.size());
    return d;
  }

  std::size_t max_degree() const {
    std::size_t d = 0;
    for (const auto& a : adjacency_) d = std::max(d, a.size());
    return d;
  }

  bool has_isolated_vertex() const {
    return std::any_of(adjacency_.begin(), adjacency_.end(),
                       [](const auto& a) { return a.empty(); });
  }

  friend Graph build_graph(std::size_t n, std::span<const Edge> edge_list);

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> adjacency_;
};

/// Validates and builds a simple graph. Edge order is preserved.
inline Graph build_graph(std::size_t n, std::span<const Edge> edge_list) {
  Graph g;
  g.adjacency_.assign(n, {});
  g.edges_.reserve(edge_list.size());
  std::map<std::pair<vertex_t, vertex_t>, std::size_t> seen;
  for (std::size_t e = 0; e < edge_list.size(); ++e) {
    const Edge& ed = edge_list[e];
    if (ed.u >= n || ed.v >= n) {
      throw GraphError(GraphErrorKind::index_out_of_range,
                       "edge " + std::to_string(e) + " (" + std::to_string(ed.u) + "," +
                           std::to_string(ed.v) + ") with n=" + std::to_string(n));
    }
    if (ed.u == ed.v) {
      throw GraphError(GraphErrorKind::self_loop,
                       "edge " + std::to_string(e) + " at vertex " + std::to_string(ed.u));
    }
    auto key = std::minmax(ed.u, ed.v);
    auto [it, inserted] = seen.emplace(std::pair{key.first, key.second}, e);
    if (!inserted) {
      throw GraphError(GraphErrorKind::duplicate_edge,
                       "edge " + std::to_string(e) + " repeats edge " + std::to_string(it->second));
    }
    g.edges_.push_back(ed);
    g.adjacency_[ed.u].push_back(e);
    g.adjacency_[ed.v].push_back(e);
  }
  return g;
}

inline Graph build_graph(std::size_t n, std::initializer_list<Edge> edge_list) {
  return build_graph(n, std::span<const Edge>(edge_list.begin(), edge_list.size()));
}

/// Labels on every vertex and edge. `s` is the declared maximum label.
struct TotalLabeling {
  std::vector<label_t> vertex_labels;
  std::vector<label_t> edge_labels;
  label_t s = 1;

  label_t max_label() const {
    label_t m = 0;
    for (label_t x : vertex_labels) m = std::max(m, x);
    for (label_t x : edge_labels) m = std::max(m, x);
    return m;
  }

  /// Every label positive and none above s.
  bool within_bounds() const {
    auto ok = [this](label_t x) { return x >= 1 && x <= s; };
    return std::all_of(vertex_labels.begin(), vertex_labels.end(), ok) &&
           std::all_of(edge_labels.begin(), edge_labels.end(), ok);
  }

  friend bool operator==(const TotalLabeling&, const TotalLabeling&) = default;
};

struct WeightProfile {
  std::vector<label_t> vertex_sums;
  std::vector<label_t> weights;
};

struct SumClass {
  label_t sum;
  std::size_t count;
  friend bool operator==(const SumClass&, const SumClass&) = default;
};

/// Vertex counts per distinct vertex sum, ascending by sum.
struct SumDistribution {
  std::vector<SumClass> classes;

  std::size_t count_of(label_t sum) const {
    for (const auto& c : classes) {
      if (c.sum == sum) return c.count;
    }
    return 0;
  }

  std::size_t total() const {
    std::size_t t = 0;
    for (const auto& c : classes) t += c.count;
    return t;
  }
};

struct VerificationReport {
  bool is_irregular = false;
  label_t max_label_used = 0;
  std::optional<std::pair<vertex_t, vertex_t>> duplicate_weight_witness;
  std::pair<label_t, label_t> weight_range{0, 0};
};

namespace detail {

inline label_t checked_add(label_t a, label_t b) {
  label_t r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw GraphError(GraphErrorKind::overflow,
                     std::to_string(a) + " + " + std::to_string(b));
  }
  return r;
}

inline void require_edge_labels(const Graph& g, std::span<const label_t> edge_labels) {
  if (edge_labels.size() != g.size()) {
    throw GraphError(GraphErrorKind::length_mismatch,
                     std::to_string(edge_labels.size()) + " edge labels for " +
                         std::to_string(g.size()) + " edges");
  }
}

inline void require_lengths(const Graph& g, const TotalLabeling& lab) {
  require_edge_labels(g, lab.edge_labels);
  if (lab.vertex_labels.size() != g.order()) {
    throw GraphError(GraphErrorKind::length_mismatch,
                     std::to_string(lab.vertex_labels.size()) + " vertex labels for " +
                         std::to_string(g.order()) + " vertices");
  }
}

}  // namespace detail

/// Sum of the labels on the edges incident to each vertex.
inline std::vector<label_t> vertex_sums(const Graph& g, std::span<const label_t> edge_labels) {
  detail::require_edge_labels(g, edge_labels);
  std::vector<label_t> sums(g.order(), 0);
  for (vertex_t v = 0; v < g.order(); ++v) {
    for (std::size_t e : g.incident(v)) sums[v] = detail::checked_add(sums[v], edge_labels[e]);
  }
  return sums;
}

inline WeightProfile weight_profile(const Graph& g, const TotalLabeling& lab) {
  detail::require_lengths(g, lab);
  WeightProfile p;
  p.vertex_sums = vertex_sums(g, lab.edge_labels);
  p.weights.resize(g.order());
  for (vertex_t v = 0; v < g.order(); ++v) {
    p.weights[v] = detail::checked_add(p.vertex_sums[v], lab.vertex_labels[v]);
  }
  return p;
}

inline VerificationReport verify(const Graph& g, const TotalLabeling& lab) {
  const WeightProfile p = weight_profile(g, lab);
  VerificationReport r;
  r.max_label_used = lab.max_label();
  r.is_irregular = true;

  std::vector<vertex_t> byweight(g.order());
  for (vertex_t v = 0; v < g.order(); ++v) byweight[v] = v;
  std::sort(byweight.begin(), byweight.end(), [&](vertex_t a, vertex_t b) {
    return p.weights[a] != p.weights[b] ? p.weights[a] < p.weights[b] : a < b;
  });
  for (std::size_t i = 1; i < byweight.size(); ++i) {
    if (p.weights[byweight[i]] == p.weights[byweight[i - 1]]) {
      r.is_irregular = false;
      r.duplicate_weight_witness = std::pair{byweight[i - 1], byweight[i]};
      break;
    }
  }
  if (!byweight.empty()) {
    r.weight_range = {p.weights[byweight.front()], p.weights[byweight.back()]};
  }
  return r;
}

inline SumDistribution sum_distribution(const Graph& g, std::span<const label_t> edge_labels) {
  std::map<label_t, std::size_t> counts;
  for (label_t s : vertex_sums(g, edge_labels)) ++counts[s];
  SumDistribution d;
  d.classes.reserve(counts.size());
  for (auto [sum, count] : counts) d.classes.push_back({sum, count});
  return d;
}

}  // namespace tvs
