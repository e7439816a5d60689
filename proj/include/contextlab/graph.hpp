#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "contextlab/errors.hpp"

namespace contextlab {

/// Ordered list of distinct vertex indices (0-based). Order matters only for
/// operations that say so (cycle traversal).
using VertexSubset = std::vector<int>;

/// Hard cap for operations that enumerate subsets (stable sets, cliques,
/// induced odd cycles). Everything in this library is desk-scale by design.
inline constexpr int kMaxEnumerableVertices = 20;

/// Compatibility graph of two-valued observables: vertices are observables,
/// an edge means the pair is jointly measurable (and hence exclusive: both
/// outcomes cannot be +1). Vertices are 0-based internally; file formats use
/// 1-based labels.
class CommutationGraph {
 public:
  CommutationGraph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n) {
    if (n <= 0) throw std::invalid_argument("graph needs at least one vertex");
    adj_.assign(static_cast<std::size_t>(n) * n, false);
    std::set<std::pair<int, int>> dedup;
    for (auto [a, b] : edges) {
      if (a < 0 || a >= n || b < 0 || b >= n)
        throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(a) +
                                    "," + std::to_string(b) + ")");
      if (a == b) throw std::invalid_argument("self-loop at vertex " + std::to_string(a));
      dedup.insert(std::minmax(a, b));
    }
    edges_.assign(dedup.begin(), dedup.end());
    for (auto [a, b] : edges_) {
      adj_[static_cast<std::size_t>(a) * n + b] = true;
      adj_[static_cast<std::size_t>(b) * n + a] = true;
    }
  }

  int vertex_count() const { return n_; }
  /// Edges as (i, j) with i < j, sorted.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  bool adjacent(int i, int j) const {
    check_vertex(i);
    check_vertex(j);
    return adj_[static_cast<std::size_t>(i) * n_ + j];
  }

  int degree(int v) const {
    check_vertex(v);
    int d = 0;
    for (int u = 0; u < n_; ++u)
      if (adj_[static_cast<std::size_t>(v) * n_ + u]) ++d;
    return d;
  }

  void check_vertex(int v) const {
    if (v < 0 || v >= n_)
      throw std::invalid_argument("vertex index out of range: " + std::to_string(v));
  }

  /// Validates that `s` holds distinct in-range indices.
  void check_subset(const VertexSubset& s) const {
    std::vector<bool> seen(n_, false);
    for (int v : s) {
      check_vertex(v);
      if (seen[v]) throw std::invalid_argument("duplicate vertex in subset: " + std::to_string(v));
      seen[v] = true;
    }
  }

  bool operator==(const CommutationGraph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  int n_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<bool> adj_;
};

/// Cycle C_k with edges (i, i+1 mod k).
inline CommutationGraph build_cycle(int k) {
  if (k < 3) throw std::invalid_argument("cycle needs k >= 3, got " + std::to_string(k));
  std::vector<std::pair<int, int>> edges;
  edges.reserve(k);
  for (int i = 0; i < k; ++i) edges.emplace_back(i, (i + 1) % k);
  return CommutationGraph(k, edges);
}

/// Edge (i,j) present iff absent in g. Involution.
inline CommutationGraph build_complement(const CommutationGraph& g) {
  const int n = g.vertex_count();
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!g.adjacent(i, j)) edges.emplace_back(i, j);
  return CommutationGraph(n, edges);
}

/// Subgraph induced by `s`, vertices relabeled 0..|s|-1 preserving s's order.
inline CommutationGraph induced_subgraph(const CommutationGraph& g, const VertexSubset& s) {
  g.check_subset(s);
  if (s.empty()) throw std::invalid_argument("induced subgraph needs a nonempty subset");
  std::vector<std::pair<int, int>> edges;
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = a + 1; b < s.size(); ++b)
      if (g.adjacent(s[a], s[b])) edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
  return CommutationGraph(static_cast<int>(s.size()), edges);
}

/// True iff every pair in `s` is adjacent.
inline bool induces_clique(const CommutationGraph& g, const VertexSubset& s) {
  g.check_subset(s);
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = a + 1; b < s.size(); ++b)
      if (!g.adjacent(s[a], s[b])) return false;
  return true;
}

/// True iff the vertices of `order`, traversed in order with wraparound, form
/// a chordless cycle of g: consecutive pairs adjacent, everything else not.
inline bool induces_chordless_cycle(const CommutationGraph& g, const VertexSubset& order) {
  g.check_subset(order);
  const int k = static_cast<int>(order.size());
  if (k < 3) return false;
  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) {
      const bool consecutive = (b == a + 1) || (a == 0 && b == k - 1);
      if (g.adjacent(order[a], order[b]) != consecutive) return false;
    }
  }
  return true;
}

inline void check_enumerable(const CommutationGraph& g, const char* op) {
  if (g.vertex_count() > kMaxEnumerableVertices)
    throw ResourceLimitError(std::string(op) + " supports at most " +
                             std::to_string(kMaxEnumerableVertices) + " vertices, got " +
                             std::to_string(g.vertex_count()));
}

}  // namespace contextlab
