#pragma once

// Optimal total vertex irregular labelings built from {1,s}-edge labelings.
//
// Every construction follows the same two phases: label each edge with 1
// or s so that the vertices fall into a few vertex-sum classes of known
// sizes, then give each class a run of consecutive weights. Vertex labels
// are derived from the target weights and must land in [1, s].
//
// Formulas below are written with 1-based vertex names (v_1..v_n) where
// that reads more naturally; the code shifts to 0-based indices at the
// point of use.

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tvs/bounds.hpp"
#include "tvs/families.hpp"
#include "tvs/graph.hpp"
#include "tvs/small_fixtures.hpp"

namespace tvs {

/// Cycle/path edge layout: a edges labeled 1, then b pairs (s, 1), then c
/// edges labeled s.
struct SegmentPlan {
  std::size_t a = 0;
  std::size_t b = 0;
  std::size_t c = 0;

  std::size_t length() const { return a + 2 * b + c; }

  std::vector<label_t> labels(label_t s) const {
    std::vector<label_t> out;
    out.reserve(length());
    out.insert(out.end(), a, 1);
    for (std::size_t i = 0; i < b; ++i) {
      out.push_back(s);
      out.push_back(1);
    }
    out.insert(out.end(), c, s);
    return out;
  }
};

/// Edge patterns on one friendship triangle, named by the vertex-sum class
/// its two non-central vertices land in.
enum class TriangleType {
  I,    // all three edges 1: sums 2, 2
  II,   // spokes s, base 1: sums s+1, s+1
  III,  // all three edges s: sums 2s, 2s
};

struct ConstructionCertificate {
  FamilySpec family;
  Graph graph;
  TotalLabeling labeling;
  label_t claimed_s = 0;
  SumDistribution distribution_before_vertex_labels;
};

enum class CertificateCheck { verify, skip };

/// Closed-form tvs of each family.
inline label_t tvs_formula(const FamilySpec& spec) {
  spec.validate();
  const auto n = static_cast<label_t>(spec.n);
  switch (spec.family) {
    case Family::cycle:
    case Family::two_regular: return ceil_div(n + 2, 3);
    case Family::path:
      // P_2: both vertices share the single edge, so the vertex labels
      // alone must differ and 2 is forced.
      return n == 2 ? 2 : ceil_div(n + 1, 3);
    case Family::prism: return ceil_div(n, 2) + 1;
    case Family::wheel: return ceil_div(n + 3, 4);
    case Family::helm: return ceil_div(n + 1, 2);
    case Family::friendship: return n == 1 ? 2 : ceil_div(2 * n + 2, 3);
    case Family::complete: return 2;
    case Family::complete_bipartite: return 3;
  }
  return 0;
}

namespace detail {

/// Vertices that get consecutive weights first_weight, first_weight+1, ...
/// in order of ascending vertex sum (ties by index).
struct WeightBand {
  std::vector<vertex_t> members;
  label_t first_weight;
};

/// Vertex ids grouped by vertex sum.
inline std::map<label_t, std::vector<vertex_t>> classes_by_sum(std::span<const label_t> sums) {
  std::map<label_t, std::vector<vertex_t>> out;
  for (vertex_t v = 0; v < sums.size(); ++v) out[sums[v]].push_back(v);
  return out;
}

inline std::vector<vertex_t> members(const std::map<label_t, std::vector<vertex_t>>& classes,
                                     label_t sum) {
  auto it = classes.find(sum);
  return it == classes.end() ? std::vector<vertex_t>{} : it->second;
}

class LabelingBuilder {
 public:
  LabelingBuilder(const Graph& g, std::vector<label_t> edge_labels, label_t s)
      : g_(g), sums_(vertex_sums(g, edge_labels)), assigned_(g.order(), false) {
    lab_.s = s;
    lab_.edge_labels = std::move(edge_labels);
    lab_.vertex_labels.assign(g.order(), 0);
  }

  const std::vector<label_t>& sums() const { return sums_; }

  void band(WeightBand b) {
    std::stable_sort(b.members.begin(), b.members.end(),
                     [&](vertex_t x, vertex_t y) { return sums_[x] < sums_[y]; });
    label_t w = b.first_weight;
    for (vertex_t v : b.members) set(v, w++ - sums_[v]);
  }

  void set(vertex_t v, label_t label) {
    if (assigned_[v]) throw std::logic_error("vertex " + std::to_string(v) + " labeled twice");
    assigned_[v] = true;
    lab_.vertex_labels[v] = label;
  }

  TotalLabeling finish() && {
    for (vertex_t v = 0; v < g_.order(); ++v) {
      if (!assigned_[v]) throw std::logic_error("vertex " + std::to_string(v) + " left unlabeled");
    }
    if (!lab_.within_bounds()) {
      throw std::logic_error("construction produced a label outside [1, " +
                             std::to_string(lab_.s) + "]");
    }
    return std::move(lab_);
  }

 private:
  const Graph& g_;
  std::vector<label_t> sums_;
  std::vector<bool> assigned_;
  TotalLabeling lab_;
};

inline ConstructionCertificate certify(FamilySpec spec, Graph g, TotalLabeling lab,
                                       CertificateCheck check) {
  ConstructionCertificate cert;
  cert.claimed_s = lab.s;
  cert.distribution_before_vertex_labels = sum_distribution(g, lab.edge_labels);
  if (check == CertificateCheck::verify) {
    const VerificationReport r = verify(g, lab);
    if (!r.is_irregular || r.max_label_used > lab.s) {
      throw std::logic_error("construction for " + spec.describe() + " failed verification");
    }
  }
  cert.family = std::move(spec);
  cert.graph = std::move(g);
  cert.labeling = std::move(lab);
  return cert;
}

/// Vertex labels shared by cycles and 2-regular graphs once the edges give
/// vertex sums in {2, s+1, 2s} with class sizes (s-1, s, n+1-2s) for even s
/// or (s, s-1, n+1-2s) for odd s. Weights come out as exactly [3, n+2].
inline TotalLabeling complete_cycle_classes(const Graph& g, std::vector<label_t> edge_labels,
                                            label_t s) {
  LabelingBuilder b(g, std::move(edge_labels), s);
  const auto cls = classes_by_sum(b.sums());
  if (s % 2 == 0) {
    // labels [1,s-1], [1,s], [2,n+2-2s]
    b.band({members(cls, 2), 3});
    b.band({members(cls, s + 1), s + 2});
  } else {
    // labels [1,s], [2,s], [2,n+2-2s]
    b.band({members(cls, 2), 3});
    b.band({members(cls, s + 1), s + 3});
  }
  b.band({members(cls, 2 * s), 2 * s + 2});
  return std::move(b).finish();
}

/// Copies a labeling across a vertex bijection `to[v_src] = v_dst`.
inline TotalLabeling transfer(const Graph& src, const TotalLabeling& lab, const Graph& dst,
                              std::span<const vertex_t> to) {
  TotalLabeling out;
  out.s = lab.s;
  out.vertex_labels.assign(dst.order(), 0);
  out.edge_labels.assign(dst.size(), 0);
  for (vertex_t v = 0; v < src.order(); ++v) out.vertex_labels[to[v]] = lab.vertex_labels[v];
  std::map<std::pair<vertex_t, vertex_t>, std::size_t> index;
  for (std::size_t e = 0; e < dst.size(); ++e) {
    auto [lo, hi] = std::minmax(dst.edge(e).u, dst.edge(e).v);
    index[{lo, hi}] = e;
  }
  for (std::size_t e = 0; e < src.size(); ++e) {
    auto [lo, hi] = std::minmax(to[src.edge(e).u], to[src.edge(e).v]);
    out.edge_labels.at(index.at({lo, hi})) = lab.edge_labels[e];
  }
  return out;
}

}  // namespace detail

inline ConstructionCertificate construct_cycle(std::size_t n,
                                               CertificateCheck check = CertificateCheck::verify) {
  const FamilySpec spec = FamilySpec::of(Family::cycle, n);
  Graph g = generate(spec).graph;
  const label_t s = tvs_formula(spec);
  const auto us = static_cast<std::size_t>(s);

  // Class sizes (a-1, 2b+2, c-1) hit (s-1, s, .) for even s and (s, s-1, .)
  // for odd s; c = n+2-2s >= 1 for every n >= 3.
  SegmentPlan plan;
  if (s % 2 == 0) {
    plan = {us, (us - 2) / 2, n + 2 - 2 * us};
  } else {
    plan = {us + 1, (us - 3) / 2, n + 2 - 2 * us};
  }
  TotalLabeling lab = detail::complete_cycle_classes(g, plan.labels(s), s);
  return detail::certify(spec, std::move(g), std::move(lab), check);
}

inline ConstructionCertificate construct_path(std::size_t n,
                                              CertificateCheck check = CertificateCheck::verify) {
  const FamilySpec spec = FamilySpec::of(Family::path, n);
  Graph g = generate(spec).graph;
  const label_t s = tvs_formula(spec);
  if (n == 2) {
    TotalLabeling lab{{1, 2}, {1}, s};
    return detail::certify(spec, std::move(g), std::move(lab), check);
  }
  const auto us = static_cast<std::size_t>(s);

  // n-1 edges; class sizes (a, 2b+2, c-1).
  SegmentPlan plan;
  if (s % 2 == 0) {
    plan = {us - 1, (us - 2) / 2, n + 2 - 2 * us};
  } else {
    plan = {us, (us - 3) / 2, n + 2 - 2 * us};
  }
  std::vector<label_t> edges = plan.labels(s);
  detail::LabelingBuilder b(g, edges, s);

  // Classes are positional: at s = 2 the endpoint sum s collides with the
  // interior sum 2, so sums alone cannot tell them apart.
  std::vector<vertex_t> low, mid, high;
  auto place_end = [&](vertex_t v, label_t e) { (e == 1 ? low : mid).push_back(v); };
  place_end(0, edges.front());
  for (vertex_t v = 1; v + 1 < n; ++v) {
    const label_t l = edges[v - 1], r = edges[v];
    if (l == 1 && r == 1) {
      low.push_back(v);
    } else if (l == s && r == s) {
      high.push_back(v);
    } else {
      mid.push_back(v);
    }
  }
  place_end(n - 1, edges.back());

  b.band({low, 2});
  b.band({mid, s % 2 == 0 ? s + 1 : s + 2});
  b.band({high, 2 * s + 1});
  TotalLabeling lab = std::move(b).finish();
  return detail::certify(spec, std::move(g), std::move(lab), check);
}

inline ConstructionCertificate construct_prism(std::size_t n,
                                               CertificateCheck check = CertificateCheck::verify) {
  const FamilySpec spec = FamilySpec::of(Family::prism, n);
  Graph g = generate(spec).graph;
  const label_t s = tvs_formula(spec);
  const auto us = static_cast<std::size_t>(s);

  // Outer cycle 1, inner cycle s, first s-1 rungs 1 and the other n+1-s rungs s.
  std::vector<label_t> edges;
  edges.insert(edges.end(), n, 1);
  edges.insert(edges.end(), n, s);
  for (std::size_t i = 0; i < n; ++i) edges.push_back(i + 1 < us ? 1 : s);

  detail::LabelingBuilder b(g, std::move(edges), s);
  const auto cls = detail::classes_by_sum(b.sums());
  b.band({detail::members(cls, 3), 4});
  b.band({detail::members(cls, s + 2), s + 3});
  b.band({detail::members(cls, 2 * s + 1), 2 * s + 2});
  b.band({detail::members(cls, 3 * s), 3 * s + 1});
  TotalLabeling lab = std::move(b).finish();
  return detail::certify(spec, std::move(g), std::move(lab), check);
}

inline ConstructionCertificate construct_wheel(std::size_t n,
                                               CertificateCheck check = CertificateCheck::verify) {
  const FamilySpec spec = FamilySpec::of(Family::wheel, n);
  Graph g = generate(spec).graph;
  const label_t s = tvs_formula(spec);
  if (n < 7) {
    return detail::certify(spec, std::move(g), *fixture_labeling(Family::wheel, n), check);
  }
  const auto us = static_cast<std::size_t>(s);

  // Rim classes |U_2| = n+2-3s, |U_{s+1}| = 2s-2, |U_{2s}| = s.
  const SegmentPlan rim{n + 3 - 3 * us, us - 2, us + 1};
  std::vector<label_t> edges = rim.labels(s);
  const std::vector<label_t> rim_sums = [&] {
    std::vector<label_t> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = edges[(i + n - 1) % n] + edges[i];
    return out;
  }();

  // Spokes: U_2 -> 1, U_{2s} -> s, U_{s+1} split s-1 / s-1 by rim index.
  std::size_t mixed_seen = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (rim_sums[i] == 2) {
      edges.push_back(1);
    } else if (rim_sums[i] == 2 * s) {
      edges.push_back(s);
    } else {
      edges.push_back(mixed_seen++ < us - 1 ? 1 : s);
    }
  }

  detail::LabelingBuilder b(g, std::move(edges), s);
  const auto cls = detail::classes_by_sum(std::span(b.sums()).first(n));
  b.band({detail::members(cls, 3), 4});
  b.band({detail::members(cls, s + 2), s + 3});
  b.band({detail::members(cls, 2 * s + 1), 2 * s + 2});
  b.band({detail::members(cls, 3 * s), 3 * s + 1});
  // 2s-1 >= 5 spokes carry s, so the center sum alone exceeds every rim weight.
  b.set(n, 1);
  TotalLabeling lab = std::move(b).finish();
  return detail::certify(spec, std::move(g), std::move(lab), check);
}

inline ConstructionCertificate construct_helm(std::size_t n,
                                              CertificateCheck check = CertificateCheck::verify) {
  const FamilySpec spec = FamilySpec::of(Family::helm, n);
  Graph g = generate(spec).graph;
  const label_t s = tvs_formula(spec);
  if (n < 5) {
    return detail::certify(spec, std::move(g), *fixture_labeling(Family::helm, n), check);
  }
  const auto us = static_cast<std::size_t>(s);

  // Pendant edges at rim 0..s-1 get 1; every other edge gets s.
  std::vector<label_t> edges(3 * n, s);
  for (std::size_t i = 0; i < us; ++i) edges[2 * n + i] = 1;

  detail::LabelingBuilder b(g, std::move(edges), s);
  const auto cls = detail::classes_by_sum(std::span(b.sums()).first(2 * n));
  b.band({detail::members(cls, 1), 2});
  b.band({detail::members(cls, s), s + 2});
  b.band({detail::members(cls, 3 * s + 1), 3 * s + 2});
  b.band({detail::members(cls, 4 * s), 4 * s + 2});
  // center sum is n*s >= 5s, above the largest non-center weight n+1+3s
  b.set(2 * n, 1);
  TotalLabeling lab = std::move(b).finish();
  return detail::certify(spec, std::move(g), std::move(lab), check);
}

/// Triangle types used for F_n, in triangle order.
inline std::vector<TriangleType> friendship_triangle_types(std::size_t n, label_t s) {
  const auto us = static_cast<std::size_t>(s);
  // even s = 2a: a of type I and a-1 of type II; odd s = 2a+1: a of each.
  const std::size_t type1 = us / 2;
  const std::size_t type2 = s % 2 == 0 ? us / 2 - 1 : us / 2;
  std::vector<TriangleType> types;
  types.reserve(n);
  for (std::size_t t = 0; t < n; ++t) {
    if (t < type1) {
      types.push_back(TriangleType::I);
    } else if (t < type1 + type2) {
      types.push_back(TriangleType::II);
    } else {
      types.push_back(TriangleType::III);
    }
  }
  return types;
}

inline ConstructionCertificate construct_friendship(
    std::size_t n, CertificateCheck check = CertificateCheck::verify) {
  const FamilySpec spec = FamilySpec::of(Family::friendship, n);
  Graph g = generate(spec).graph;
  const label_t s = tvs_formula(spec);
  if (n == 1) {
    // F_1 is C_3; cycle vertices 0, 1, 2 map to triangle vertices 0, 1 and center 2.
    const ConstructionCertificate c3 = construct_cycle(3, check);
    const vertex_t to[] = {0, 1, 2};
    TotalLabeling lab = detail::transfer(c3.graph, c3.labeling, g, to);
    return detail::certify(spec, std::move(g), std::move(lab), check);
  }

  std::vector<label_t> edges;
  edges.reserve(3 * n);
  for (TriangleType t : friendship_triangle_types(n, s)) {
    switch (t) {
      case TriangleType::I: edges.insert(edges.end(), {1, 1, 1}); break;
      case TriangleType::II: edges.insert(edges.end(), {1, s, s}); break;
      case TriangleType::III: edges.insert(edges.end(), {s, s, s}); break;
    }
  }

  detail::LabelingBuilder b(g, std::move(edges), s);
  const auto cls = detail::classes_by_sum(std::span(b.sums()).first(2 * n));
  b.band({detail::members(cls, 2), 3});
  b.band({detail::members(cls, s + 1), s % 2 == 0 ? s + 3 : s + 2});
  b.band({detail::members(cls, 2 * s), 2 * s + 1});
  // at least two s-edges reach the center, so its weight is >= 3s+2
  b.set(2 * n, s);
  TotalLabeling lab = std::move(b).finish();
  return detail::certify(spec, std::move(g), std::move(lab), check);
}

inline ConstructionCertificate construct_complete(
    std::size_t n, CertificateCheck check = CertificateCheck::verify) {
  const FamilySpec spec = FamilySpec::of(Family::complete, n);
  Graph g = generate(spec).graph;

  // lambda(v_i v_j) = 1 iff i + j <= n + 1 (1-based).
  std::vector<label_t> edges;
  edges.reserve(g.size());
  for (const Edge& e : g.edges()) edges.push_back(e.u + e.v + 2 <= n + 1 ? 1 : 2);

  // omega(v_i) = n + i - 2 while 2i <= n + 1 and n + i - 3 after, so v_i
  // gets label 1 exactly when 2i <= n + 1. Every weight is then n + i - 1.
  TotalLabeling lab;
  lab.s = 2;
  lab.edge_labels = std::move(edges);
  for (std::size_t i = 1; i <= n; ++i) lab.vertex_labels.push_back(2 * i <= n + 1 ? 1 : 2);
  return detail::certify(spec, std::move(g), std::move(lab), check);
}

inline ConstructionCertificate construct_complete_bipartite(
    std::size_t n, CertificateCheck check = CertificateCheck::verify) {
  const FamilySpec spec = FamilySpec::of(Family::complete_bipartite, n);
  Graph g = generate(spec).graph;

  // lambda(v_i w_j) = 1 iff i + j <= n + 1, else 3; omega(v_i) = omega(w_i) = n + 2(i-1).
  std::vector<label_t> edges;
  edges.reserve(g.size());
  for (const Edge& e : g.edges()) {
    const std::size_t i = e.u + 1, j = e.v - n + 1;
    edges.push_back(i + j <= n + 1 ? 1 : 3);
  }
  TotalLabeling lab;
  lab.s = 3;
  lab.edge_labels = std::move(edges);
  lab.vertex_labels.assign(n, 1);
  lab.vertex_labels.insert(lab.vertex_labels.end(), n, 2);
  return detail::certify(spec, std::move(g), std::move(lab), check);
}

/// Per-component edge labels for a disjoint union of cycles, hitting the
/// cycle class sizes. Components are consumed shortest first: whole cycles
/// of 1s while they fit in the sum-2 quota, a partial 1-run for the
/// remainder, then (s,1) alternation until the sum-(s+1) quota is met and
/// s everywhere else.
inline std::vector<std::vector<label_t>> two_regular_edge_plan(
    std::span<const std::size_t> lengths, std::span<const std::size_t> shortest_first, label_t s) {
  const std::size_t n = std::accumulate(lengths.begin(), lengths.end(), std::size_t{0});
  const auto us = static_cast<std::size_t>(s);
  const std::size_t want2 = s % 2 == 0 ? us - 1 : us;
  std::size_t mixed_left = s % 2 == 0 ? us : us - 1;
  if (want2 + mixed_left > n + 1) throw std::logic_error("two-regular: quotas exceed order");

  std::vector<std::vector<label_t>> plan(lengths.size());
  // A cycle holding x2 sum-2 vertices and 2t mixed ones is a 1-run of x2+1,
  // t-1 alternating pairs, and an s-run covering the rest.
  auto mixed = [&](std::size_t comp, std::size_t x2, std::size_t t) {
    const std::size_t len = lengths[comp];
    if (t == 0 || x2 + 2 * t > len) throw std::logic_error("two-regular: infeasible component plan");
    plan[comp] = SegmentPlan{x2 + 1, t - 1, len - x2 - 2 * t + 1}.labels(s);
    mixed_left -= 2 * t;
  };

  std::size_t next = 0, ones = 0;
  while (next < shortest_first.size() && ones + lengths[shortest_first[next]] <= want2) {
    plan[shortest_first[next]].assign(lengths[shortest_first[next]], 1);
    ones += lengths[shortest_first[next++]];
  }
  const std::size_t rest = want2 - ones;
  if (rest > 0) {
    // next exists: the whole-ones prefix holds fewer than n vertices
    if (next >= shortest_first.size()) throw std::logic_error("two-regular: no cycle left for 1-run");
    const std::size_t comp = shortest_first[next++];
    const std::size_t len = lengths[comp];
    if (len >= rest + 2) {
      mixed(comp, rest, std::min(mixed_left / 2, (len - rest) / 2));
    } else {
      // len == rest + 1: this cycle can hold only rest-1 sum-2 vertices, the
      // last one comes from a 1-run of two edges in the following cycle
      mixed(comp, rest - 1, 1);
      if (next >= shortest_first.size()) throw std::logic_error("two-regular: no cycle left for 1-run");
      const std::size_t comp2 = shortest_first[next++];
      mixed(comp2, 1, std::min(mixed_left / 2, (lengths[comp2] - 1) / 2));
    }
  }
  for (; next < shortest_first.size(); ++next) {
    const std::size_t comp = shortest_first[next];
    if (mixed_left == 0) {
      plan[comp].assign(lengths[comp], s);
    } else {
      mixed(comp, 0, std::min(mixed_left / 2, lengths[comp] / 2));
    }
  }
  if (mixed_left != 0) throw std::logic_error("two-regular: could not place every mixed vertex");
  return plan;
}

inline ConstructionCertificate construct_two_regular(
    std::vector<std::size_t> lengths, CertificateCheck check = CertificateCheck::verify) {
  const FamilySpec spec = FamilySpec::two_regular(std::move(lengths));
  GeneratedGraph gen = generate(spec);
  const label_t s = tvs_formula(spec);
  if (spec.lengths.size() == 1) {
    // same vertex and edge order as C_n
    ConstructionCertificate c = construct_cycle(spec.n, check);
    return detail::certify(spec, std::move(gen.graph), std::move(c.labeling), check);
  }

  const auto plan = two_regular_edge_plan(spec.lengths, gen.order.component_order, s);
  std::vector<label_t> edges;
  edges.reserve(spec.n);
  for (const auto& comp : plan) edges.insert(edges.end(), comp.begin(), comp.end());
  TotalLabeling lab = detail::complete_cycle_classes(gen.graph, std::move(edges), s);
  return detail::certify(spec, std::move(gen.graph), std::move(lab), check);
}

inline ConstructionCertificate construct(const FamilySpec& spec,
                                         CertificateCheck check = CertificateCheck::verify) {
  spec.validate();
  switch (spec.family) {
    case Family::cycle: return construct_cycle(spec.n, check);
    case Family::path: return construct_path(spec.n, check);
    case Family::prism: return construct_prism(spec.n, check);
    case Family::wheel: return construct_wheel(spec.n, check);
    case Family::helm: return construct_helm(spec.n, check);
    case Family::friendship: return construct_friendship(spec.n, check);
    case Family::complete: return construct_complete(spec.n, check);
    case Family::complete_bipartite: return construct_complete_bipartite(spec.n, check);
    case Family::two_regular: return construct_two_regular(spec.lengths, check);
  }
  throw SpecError("unsupported family");
}

}  // namespace tvs
