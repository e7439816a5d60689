#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "contextlab/graph.hpp"

namespace contextlab {

/// 0/1 indicator vector of a stable (independent) set: q_i * q_j = 0 on every
/// edge. Stored as a bitmask with bit i = q_i.
struct StableLabeling {
  int n = 0;
  std::uint32_t mask = 0;

  int bit(int i) const { return (mask >> i) & 1u; }
  int size() const { return std::popcount(mask); }

  std::vector<int> values() const {
    std::vector<int> q(n);
    for (int i = 0; i < n; ++i) q[i] = bit(i);
    return q;
  }

  VertexSubset members() const {
    VertexSubset s;
    for (int i = 0; i < n; ++i)
      if (bit(i)) s.push_back(i);
    return s;
  }

  bool operator==(const StableLabeling&) const = default;
};

namespace detail {

/// Neighborhood bitmasks (bit j of nbr[i] set iff i~j); valid for n <= 32.
inline std::vector<std::uint32_t> neighbor_masks(const CommutationGraph& g) {
  std::vector<std::uint32_t> nbr(g.vertex_count(), 0);
  for (auto [a, b] : g.edges()) {
    nbr[a] |= 1u << b;
    nbr[b] |= 1u << a;
  }
  return nbr;
}

}  // namespace detail

/// All stable sets of g, the empty set included, in lexicographic order of the
/// labeling vector (q_0, ..., q_{n-1}).
inline std::vector<StableLabeling> enumerate_stable_sets(const CommutationGraph& g) {
  check_enumerable(g, "enumerate_stable_sets");
  const int n = g.vertex_count();
  const auto nbr = detail::neighbor_masks(g);
  std::vector<StableLabeling> out;
  // DFS assigning q_0 first explores labels in lexicographic order directly.
  struct Frame {
    int vertex;
    std::uint32_t mask;
  };
  std::vector<Frame> stack{{0, 0u}};
  while (!stack.empty()) {
    auto [v, mask] = stack.back();
    stack.pop_back();
    if (v == n) {
      out.push_back({n, mask});
      continue;
    }
    // Push q_v = 1 first so it pops last: 0-branch is explored first.
    if ((nbr[v] & mask) == 0) stack.push_back({v + 1, mask | (1u << v)});
    stack.push_back({v + 1, mask});
  }
  return out;
}

/// Largest stable-set size, by branch and bound over candidate bitmasks.
inline int independence_number(const CommutationGraph& g) {
  check_enumerable(g, "independence_number");
  const auto nbr = detail::neighbor_masks(g);
  int best = 0;
  auto recurse = [&](auto&& self, std::uint32_t candidates, int size) -> void {
    if (size + std::popcount(candidates) <= best) return;
    if (candidates == 0) {
      best = std::max(best, size);
      return;
    }
    // Branch on the lowest-index candidate: take it or drop it.
    const int v = std::countr_zero(candidates);
    self(self, candidates & ~(nbr[v] | (1u << v)), size + 1);
    self(self, candidates & ~(1u << v), size);
  };
  recurse(recurse, (g.vertex_count() == 32) ? ~0u : ((1u << g.vertex_count()) - 1u), 0);
  return best;
}

/// All maximal cliques, each as an ascending VertexSubset, ordered
/// lexicographically by membership vector. Bron–Kerbosch with pivoting.
inline std::vector<VertexSubset> enumerate_maximal_cliques(const CommutationGraph& g) {
  check_enumerable(g, "enumerate_maximal_cliques");
  const int n = g.vertex_count();
  const auto nbr = detail::neighbor_masks(g);
  std::vector<std::uint32_t> found;

  auto expand = [&](auto&& self, std::uint32_t r, std::uint32_t p, std::uint32_t x) -> void {
    if (p == 0 && x == 0) {
      found.push_back(r);
      return;
    }
    // Pivot on the vertex of P|X covering the most of P.
    int pivot = -1, cover = -1;
    for (std::uint32_t px = p | x; px;) {
      const int u = std::countr_zero(px);
      px &= px - 1;
      const int c = std::popcount(p & nbr[u]);
      if (c > cover) {
        cover = c;
        pivot = u;
      }
    }
    for (std::uint32_t ext = p & ~nbr[pivot]; ext;) {
      const int v = std::countr_zero(ext);
      ext &= ext - 1;
      self(self, r | (1u << v), p & nbr[v], x & nbr[v]);
      p &= ~(1u << v);
      x |= 1u << v;
    }
  };
  expand(expand, 0u, (n == 32) ? ~0u : ((1u << n) - 1u), 0u);

  // Lexicographic order on membership vectors = ascending order of the
  // bit-reversed mask.
  auto lex_key = [n](std::uint32_t m) {
    std::uint32_t k = 0;
    for (int i = 0; i < n; ++i)
      if (m & (1u << i)) k |= 1u << (n - 1 - i);
    return k;
  };
  std::sort(found.begin(), found.end(),
            [&](std::uint32_t a, std::uint32_t b) { return lex_key(a) < lex_key(b); });

  std::vector<VertexSubset> out;
  out.reserve(found.size());
  for (std::uint32_t m : found) {
    VertexSubset s;
    for (int i = 0; i < n; ++i)
      if (m & (1u << i)) s.push_back(i);
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace contextlab
