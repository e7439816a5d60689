#pragma once

#include <cmath>
#include <numbers>
#include <optional>
#include <vector>

#include "contextlab/graph.hpp"
#include "contextlab/stable_sets.hpp"

namespace contextlab {

/// Searches for an induced chordless odd cycle of length >= 5, returned in
/// cycle order. Deterministic: smallest length first, then lexicographically
/// smallest vertex set; traversal starts at the smallest vertex and proceeds
/// toward its smaller neighbor.
inline std::optional<VertexSubset> find_odd_hole(const CommutationGraph& g) {
  check_enumerable(g, "find_odd_hole");
  const int n = g.vertex_count();
  const auto nbr = detail::neighbor_masks(g);

  auto cycle_order = [&](const std::vector<int>& members) -> VertexSubset {
    // members ascending; walk the 2-regular induced subgraph.
    VertexSubset order{members.front()};
    int prev = -1;
    while (order.size() < members.size()) {
      int cur = order.back(), next = -1;
      for (int v : members)
        if (v != prev && v != cur && g.adjacent(cur, v)) {
          next = v;
          break;  // members ascending, so the first hit is the smaller neighbor
        }
      prev = cur;
      order.push_back(next);
    }
    return order;
  };

  std::vector<int> comb;
  for (int k = 5; k <= n; k += 2) {
    // Lexicographically ordered k-combinations of 0..n-1.
    comb.resize(k);
    for (int i = 0; i < k; ++i) comb[i] = i;
    while (true) {
      // Induced subgraph is C_k iff it has exactly k edges, all degrees 2,
      // and is connected.
      std::uint32_t sub = 0;
      for (int v : comb) sub |= 1u << v;
      bool regular = true;
      int edge_count = 0;
      for (int v : comb) {
        const int d = std::popcount(nbr[v] & sub);
        if (d != 2) {
          regular = false;
          break;
        }
        edge_count += d;
      }
      if (regular && edge_count == 2 * k) {
        std::uint32_t seen = 1u << comb[0];
        std::vector<int> stack{comb[0]};
        while (!stack.empty()) {
          const int v = stack.back();
          stack.pop_back();
          for (std::uint32_t m = nbr[v] & sub & ~seen; m;) {
            const int u = std::countr_zero(m);
            m &= m - 1;
            seen |= 1u << u;
            stack.push_back(u);
          }
        }
        if (std::popcount(seen) == k) return cycle_order(comb);
      }
      // next combination
      int i = k - 1;
      while (i >= 0 && comb[i] == n - k + i) --i;
      if (i < 0) break;
      ++comb[i];
      for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
    }
  }
  return std::nullopt;
}

enum class OddWitnessKind { Hole, Antihole };

/// Verdict of the perfect-graph test. When imperfect, `witness` induces a
/// chordless odd cycle (Hole) or its complement (Antihole) of size >= 5; for
/// antiholes the order traverses the cycle in the complement graph.
struct PerfectnessWitness {
  bool perfect = true;
  OddWitnessKind kind = OddWitnessKind::Hole;
  VertexSubset witness;
};

/// Perfect iff neither g nor its complement contains an induced odd cycle of
/// length >= 5 (strong perfect graph characterization).
inline PerfectnessWitness is_perfect(const CommutationGraph& g) {
  check_enumerable(g, "is_perfect");
  if (auto hole = find_odd_hole(g))
    return {false, OddWitnessKind::Hole, std::move(*hole)};
  if (auto antihole = find_odd_hole(build_complement(g)))
    return {false, OddWitnessKind::Antihole, std::move(*antihole)};
  return {};
}

/// Lovász number of an odd hole or odd antihole:
///   hole:     theta(C_m)    = m cos(pi/m) / (1 + cos(pi/m))
///   antihole: theta(~C_m)   = (1 + cos(pi/m)) / cos(pi/m)
/// Both exceed the independence number ((m-1)/2 resp. 2) strictly.
inline double theta_closed_form(OddWitnessKind kind, int m) {
  if (m < 5 || m % 2 == 0)
    throw std::invalid_argument("theta closed form needs odd m >= 5, got " + std::to_string(m));
  const double c = std::cos(std::numbers::pi / m);
  return kind == OddWitnessKind::Hole ? m * c / (1.0 + c) : (1.0 + c) / c;
}

}  // namespace contextlab
