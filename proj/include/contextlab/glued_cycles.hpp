#pragma once

#include <string>
#include <vector>

#include "contextlab/graph.hpp"

namespace contextlab {

/// Two odd cycles C_n sharing the vertices A_1 = A'_1 and A_{n+2-m} = A'_m.
/// The splice index is kept in 3..n-1 so both even cycles of the
/// decomposition have length >= 4.
struct GluedCycleSpec {
  int n = 5;  ///< odd cycle length, >= 5
  int m = 3;  ///< splice index, 3 <= m <= n-1

  void validate() const {
    if (n < 5 || n % 2 == 0)
      throw std::invalid_argument("glued cycles need odd n >= 5, got n=" + std::to_string(n));
    if (m < 3 || m > n - 1)
      throw std::invalid_argument("splice index must satisfy 3 <= m <= n-1, got m=" +
                                  std::to_string(m));
  }
};

/// The glued graph on 2n-2 vertices plus both labelings: unprimed[i] is the
/// internal index of A_{i+1}, primed[j] of A'_{j+1}. Shared vertices appear
/// in both arrays.
struct GluedCycles {
  CommutationGraph graph;
  std::vector<int> unprimed;
  std::vector<int> primed;
  std::vector<std::string> vertex_names;  ///< per internal index, e.g. "A3" or "A4=A'3"

  VertexSubset unprimed_cycle() const { return unprimed; }
  VertexSubset primed_cycle() const { return primed; }
};

inline GluedCycles build_glued_cycles(const GluedCycleSpec& spec) {
  spec.validate();
  const int n = spec.n, m = spec.m;
  std::vector<int> unprimed(n), primed(n);
  for (int i = 0; i < n; ++i) unprimed[i] = i;
  int next = n;
  for (int j = 1; j <= n; ++j) {
    if (j == 1)
      primed[j - 1] = unprimed[0];
    else if (j == m)
      primed[j - 1] = unprimed[n + 2 - m - 1];
    else
      primed[j - 1] = next++;
  }
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    edges.emplace_back(unprimed[i], unprimed[(i + 1) % n]);
    edges.emplace_back(primed[i], primed[(i + 1) % n]);
  }
  std::vector<std::string> names(next);
  for (int i = 0; i < n; ++i) names[unprimed[i]] = "A" + std::to_string(i + 1);
  for (int j = 0; j < n; ++j) {
    const std::string primed_name = "A'" + std::to_string(j + 1);
    if (names[primed[j]].empty())
      names[primed[j]] = primed_name;
    else
      names[primed[j]] += "=" + primed_name;
  }
  return {CommutationGraph(next, edges), std::move(unprimed), std::move(primed),
          std::move(names)};
}

/// The two ordered even cycles covering the glued graph's edges exactly once:
///   first  = (A_1, ..., A_{n+2-m}, A'_{m+1}, ..., A'_n),  length 2n+2-2m
///   second = (A_1, A'_2, ..., A'_{m-1}, A_{n+2-m}, ..., A_n),  length 2m-2
/// Both induce chordless even cycles, hence perfect subgraphs.
struct EvenCycleDecomposition {
  VertexSubset first;
  VertexSubset second;
};

inline EvenCycleDecomposition decompose_glued_into_even_cycles(const GluedCycleSpec& spec) {
  const GluedCycles glued = build_glued_cycles(spec);
  const int n = spec.n, m = spec.m;
  VertexSubset first, second;
  for (int i = 1; i <= n + 2 - m; ++i) first.push_back(glued.unprimed[i - 1]);
  for (int j = m + 1; j <= n; ++j) first.push_back(glued.primed[j - 1]);
  second.push_back(glued.unprimed[0]);
  for (int j = 2; j <= m - 1; ++j) second.push_back(glued.primed[j - 1]);
  for (int i = n + 2 - m; i <= n; ++i) second.push_back(glued.unprimed[i - 1]);
  return {std::move(first), std::move(second)};
}

}  // namespace contextlab
