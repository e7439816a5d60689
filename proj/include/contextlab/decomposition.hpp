#pragma once

#include <cmath>
#include <optional>
#include <vector>

#include "contextlab/distributions.hpp"
#include "contextlab/graph.hpp"
#include "contextlab/simplex.hpp"
#include "contextlab/stable_sets.hpp"

namespace contextlab {

/// Convex combination of stable labelings hitting a marginal vector exactly:
/// sum_k weights[k] * labelings[k] = p, weights >= 0 summing to 1. Exists iff
/// p lies in the vertex packing polytope of the graph.
struct StableSetDecomposition {
  std::vector<double> weights;
  std::vector<StableLabeling> labelings;
  double residual = 0.0;   ///< max-norm of (sum_k w_k q^(k) - p, sum w - 1)
  bool degenerate = false;  ///< residual landed in (1e-9, 1e-6): usable but flagged
};

/// Linear feasibility over all stable labelings: columns are the labelings
/// (plus a normalization row of ones), solved by the deterministic phase-1
/// simplex. Returns nullopt exactly when p is outside the vertex packing
/// polytope. Labelings that use a vertex with p_i = 0 can never carry weight
/// and are dropped up front.
inline std::optional<StableSetDecomposition> decompose_into_stable_sets(
    const CommutationGraph& g, const MarginalVector& p) {
  check_enumerable(g, "decompose_into_stable_sets");
  check_lengths(g, p);
  const int n = g.vertex_count();

  std::uint32_t support = 0;
  for (int i = 0; i < n; ++i)
    if (p[i] > 0.0) support |= std::uint32_t{1} << i;

  std::vector<StableLabeling> candidates;
  for (const StableLabeling& q : enumerate_stable_sets(g))
    if ((q.mask & ~support) == 0) candidates.push_back(q);

  const int rows = n + 1;
  std::vector<double> rhs(p.values());
  rhs.push_back(1.0);

  auto column = [&](int j, std::vector<double>& out) {
    const std::uint32_t mask = candidates[j].mask;
    for (int i = 0; i < n; ++i) out[i] = (mask >> i) & 1u ? 1.0 : 0.0;
    out[n] = 1.0;
  };
  const FeasibilityResult lp =
      solve_equality_feasibility(rows, static_cast<int>(candidates.size()), column, rhs);

  StableSetDecomposition decomposition;
  for (int i = 0; i < rows; ++i) {
    if (lp.basis[i] >= static_cast<int>(candidates.size())) continue;  // leftover artificial
    // Degenerate basic weights at (numerical) zero carry nothing; dropping
    // them moves the weight sum by < 1e-13, inside the 1e-12 invariant.
    if (lp.values[i] <= 1e-15) continue;
    decomposition.weights.push_back(lp.values[i]);
    decomposition.labelings.push_back(candidates[lp.basis[i]]);
  }

  std::vector<double> reconstructed(n, 0.0);
  double weight_sum = 0.0;
  for (std::size_t k = 0; k < decomposition.weights.size(); ++k) {
    weight_sum += decomposition.weights[k];
    for (int i = 0; i < n; ++i)
      if (decomposition.labelings[k].bit(i)) reconstructed[i] += decomposition.weights[k];
  }
  double residual = std::abs(weight_sum - 1.0);
  for (int i = 0; i < n; ++i) residual = std::max(residual, std::abs(reconstructed[i] - p[i]));
  decomposition.residual = residual;

  if (residual <= kProbabilityTolerance) return decomposition;
  if (residual < 1e-6) {
    decomposition.degenerate = true;
    return decomposition;
  }
  return std::nullopt;
}

/// Joint distribution carried by a decomposition: each labeling q contributes
/// its weight to the single outcome a with a_i = 2 q_i - 1; coincident
/// outcomes merge.
inline JointDistribution construct_joint_distribution(const StableSetDecomposition& d) {
  if (d.labelings.empty()) throw std::invalid_argument("empty decomposition");
  JointDistribution joint(d.labelings.front().n);
  for (std::size_t k = 0; k < d.labelings.size(); ++k)
    joint.add_mass(d.labelings[k].mask, d.weights[k]);
  return joint;
}

}  // namespace contextlab
