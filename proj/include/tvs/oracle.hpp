#pragma once

// Exact tvs for small graphs by depth-first search over edge labels.
//
// Only edges are branched on. Once every edge is fixed the vertex sums are
// known and greedy_vertex_completion decides the vertex labels exactly, so
// the search space is k^|E| rather than k^(|E|+n). Each node is pruned by
// a distinct-representatives test on the weight intervals every vertex can
// still reach: closed vertices have [sum+1, sum+k], open ones the widest
// range their unassigned edges allow.

#include <algorithm>
#include <cstdint>
#include <future>
#include <optional>
#include <queue>
#include <stdexcept>
#include <vector>

#include "tvs/bounds.hpp"
#include "tvs/completion.hpp"
#include "tvs/graph.hpp"

namespace tvs {

struct SearchBudget {
  std::uint64_t max_nodes = 10'000'000;
  label_t max_k = 0;  // 0: use the vertex count

  void validate() const {
    if (max_nodes < 1) throw std::invalid_argument("max_nodes must be >= 1");
    if (max_k < 0) throw std::invalid_argument("max_k must be >= 1");
  }
};

enum class OracleStatus { exact, infeasible, budget_exceeded };

inline const char* to_string(OracleStatus s) {
  switch (s) {
    case OracleStatus::exact: return "exact";
    case OracleStatus::infeasible: return "infeasible";
    case OracleStatus::budget_exceeded: return "budget_exceeded";
  }
  return "?";
}

struct OracleResult {
  OracleStatus status = OracleStatus::infeasible;
  label_t k = 0;  // exact: tvs; infeasible: the k shown impossible
  std::optional<TotalLabeling> witness;
  std::uint64_t nodes = 0;
};

enum class Execution { sequential, parallel };

namespace detail {

/// Edge order that closes vertices early: repeatedly take the vertex with
/// the fewest unordered incident edges (ties by index) and append them.
inline std::vector<std::size_t> closing_edge_order(const Graph& g) {
  std::vector<std::size_t> left(g.order());
  for (vertex_t v = 0; v < g.order(); ++v) left[v] = g.degree(v);
  std::vector<bool> taken(g.size(), false);
  std::vector<std::size_t> order;
  order.reserve(g.size());
  while (order.size() < g.size()) {
    vertex_t pick = g.order();
    for (vertex_t v = 0; v < g.order(); ++v) {
      if (left[v] > 0 && (pick == g.order() || left[v] < left[pick])) pick = v;
    }
    for (std::size_t e : g.incident(pick)) {
      if (taken[e]) continue;
      taken[e] = true;
      order.push_back(e);
      --left[g.edge(e).u];
      --left[g.edge(e).v];
    }
  }
  return order;
}

class EdgeSearch {
 public:
  EdgeSearch(const Graph& g, label_t k, std::uint64_t max_nodes)
      : g_(g), k_(k), max_nodes_(max_nodes), order_(closing_edge_order(g)),
        labels_(g.size(), 0), partial_(g.order(), 0), open_(g.order()) {
    for (vertex_t v = 0; v < g.order(); ++v) open_[v] = static_cast<label_t>(g.degree(v));
    intervals_.reserve(g.order());
  }

  /// Search with the first `prefix.size()` edges of the branching order fixed.
  OracleResult run(std::span<const label_t> prefix = {}) {
    OracleResult r;
    r.k = k_;
    for (std::size_t i = 0; i < prefix.size(); ++i) assign(order_[i], prefix[i]);
    bool found = dfs(prefix.size());
    r.nodes = nodes_;
    if (found) {
      r.status = OracleStatus::exact;
      r.witness = std::move(witness_);
    } else {
      r.status = exhausted_ ? OracleStatus::budget_exceeded : OracleStatus::infeasible;
    }
    return r;
  }

 private:
  void assign(std::size_t e, label_t x) {
    labels_[e] = x;
    for (vertex_t v : {g_.edge(e).u, g_.edge(e).v}) {
      partial_[v] += x;
      --open_[v];
    }
  }

  void unassign(std::size_t e) {
    for (vertex_t v : {g_.edge(e).u, g_.edge(e).v}) {
      partial_[v] -= labels_[e];
      ++open_[v];
    }
    labels_[e] = 0;
  }

  bool dfs(std::size_t pos) {
    if (++nodes_ > max_nodes_) {
      exhausted_ = true;
      return false;
    }
    if (!reachable()) return false;
    if (pos == order_.size()) {
      auto lab = greedy_vertex_completion(g_, labels_, k_);
      if (!lab) return false;
      witness_ = std::move(*lab);
      return true;
    }
    const std::size_t e = order_[pos];
    for (label_t x = 1; x <= k_; ++x) {
      assign(e, x);
      const bool hit = dfs(pos + 1);
      unassign(e);
      if (hit) return true;
      if (exhausted_) return false;
    }
    return false;
  }

  /// Whether distinct weights can still be picked from each vertex's
  /// reachable interval (earliest-deadline matching on points).
  bool reachable() {
    intervals_.clear();
    for (vertex_t v = 0; v < g_.order(); ++v) {
      intervals_.push_back({partial_[v] + open_[v] + 1, partial_[v] + (open_[v] + 1) * k_});
    }
    std::sort(intervals_.begin(), intervals_.end());
    std::priority_queue<label_t, std::vector<label_t>, std::greater<>> ends;
    label_t point = 0;
    std::size_t i = 0;
    while (i < intervals_.size() || !ends.empty()) {
      if (ends.empty()) point = std::max(point, intervals_[i].first);
      while (i < intervals_.size() && intervals_[i].first <= point) ends.push(intervals_[i++].second);
      if (ends.top() < point) return false;
      ends.pop();
      ++point;
    }
    return true;
  }

  const Graph& g_;
  label_t k_;
  std::uint64_t max_nodes_;
  std::vector<std::size_t> order_;
  std::vector<label_t> labels_;
  std::vector<label_t> partial_;
  std::vector<label_t> open_;
  std::vector<std::pair<label_t, label_t>> intervals_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
  TotalLabeling witness_;
};

}  // namespace detail

/// Decides whether g has a k-irregular total labeling.
inline OracleResult feasible_at(const Graph& g, label_t k, const SearchBudget& budget = {},
                                Execution exec = Execution::sequential) {
  budget.validate();
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (g.order() == 0 || g.has_isolated_vertex()) {
    throw GraphError(GraphErrorKind::isolated_vertex, "oracle requires minimum degree >= 1");
  }
  if (exec == Execution::sequential || g.size() == 0) {
    return detail::EdgeSearch(g, k, budget.max_nodes).run();
  }

  // One task per label of the first branching edge; each task gets the
  // full node budget and results are merged in label order.
  std::vector<std::future<OracleResult>> tasks;
  for (label_t x = 1; x <= k; ++x) {
    tasks.push_back(std::async(std::launch::async, [&g, k, &budget, x] {
      const label_t prefix[] = {x};
      return detail::EdgeSearch(g, k, budget.max_nodes).run(prefix);
    }));
  }
  OracleResult merged;
  merged.k = k;
  merged.status = OracleStatus::infeasible;
  for (auto& t : tasks) {
    OracleResult r = t.get();
    merged.nodes += r.nodes;
    if (merged.status == OracleStatus::exact) continue;
    if (r.status == OracleStatus::exact) {
      merged.status = OracleStatus::exact;
      merged.witness = std::move(r.witness);
    } else if (r.status == OracleStatus::budget_exceeded) {
      merged.status = OracleStatus::budget_exceeded;
    }
  }
  return merged;
}

/// Smallest feasible k, starting from the degree-counting lower bound. The
/// node budget is shared across all k tried.
inline OracleResult exact_tvs(const Graph& g, const SearchBudget& budget = {},
                              Execution exec = Execution::sequential) {
  budget.validate();
  const label_t start = degree_count_bound(g).value;
  const label_t max_k = budget.max_k > 0 ? budget.max_k : static_cast<label_t>(g.order());
  std::uint64_t used = 0;
  OracleResult last;
  last.status = OracleStatus::infeasible;
  last.k = start - 1;
  for (label_t k = start; k <= max_k; ++k) {
    SearchBudget left = budget;
    left.max_nodes = budget.max_nodes - used;
    OracleResult r = feasible_at(g, k, left, exec);
    used += std::min(r.nodes, left.max_nodes);
    r.nodes = used;
    if (r.status != OracleStatus::infeasible) return r;
    last = std::move(r);
    if (used >= budget.max_nodes) {
      last.status = OracleStatus::budget_exceeded;
      return last;
    }
  }
  return last;
}

}  // namespace tvs
