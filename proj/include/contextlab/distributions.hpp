#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "contextlab/graph.hpp"
#include "contextlab/stable_sets.hpp"

namespace contextlab {

inline constexpr double kExclusivitySlack = 1e-12;   ///< slack on clique sums <= 1
inline constexpr double kProbabilityTolerance = 1e-9;  ///< distribution-level residuals

/// Vector p with p_i = P(A_i = +1), the only degrees of freedom once
/// exclusivity holds. Entries are clamped into [0,1] when within 1e-12 of the
/// bounds (products of unit vectors land there); anything further out throws.
class MarginalVector {
 public:
  explicit MarginalVector(std::vector<double> p) : p_(std::move(p)) {
    for (double& x : p_) {
      if (x < 0.0) {
        if (x < -kExclusivitySlack)
          throw std::invalid_argument("marginal probability below 0");
        x = 0.0;
      } else if (x > 1.0) {
        if (x > 1.0 + kExclusivitySlack)
          throw std::invalid_argument("marginal probability above 1");
        x = 1.0;
      }
    }
  }

  int size() const { return static_cast<int>(p_.size()); }
  double operator[](int i) const { return p_[i]; }
  const std::vector<double>& values() const { return p_; }

  double sum_over(const VertexSubset& s) const {
    double t = 0.0;
    for (int v : s) t += p_[v];
    return t;
  }

 private:
  std::vector<double> p_;
};

inline void check_lengths(const CommutationGraph& g, const MarginalVector& p) {
  if (p.size() != g.vertex_count())
    throw std::invalid_argument("marginal vector length " + std::to_string(p.size()) +
                                " does not match vertex count " +
                                std::to_string(g.vertex_count()));
}

/// Probability table over {-1,+1}^subset. Outcome tuples are indexed by a
/// bitmask: bit t set means the observable at subset position t came out +1.
class SubsetDistribution {
 public:
  SubsetDistribution(VertexSubset subset, std::vector<double> table)
      : subset_(std::move(subset)), table_(std::move(table)) {
    if (table_.size() != (std::size_t{1} << subset_.size()))
      throw std::invalid_argument("table size must be 2^|subset|");
  }

  const VertexSubset& subset() const { return subset_; }
  int arity() const { return static_cast<int>(subset_.size()); }
  const std::vector<double>& table() const { return table_; }
  double probability(std::uint32_t outcome_mask) const { return table_[outcome_mask]; }

  /// Outcome tuple (+1/-1 entries) for a table index.
  std::vector<int> outcome(std::uint32_t mask) const {
    std::vector<int> a(subset_.size());
    for (std::size_t t = 0; t < subset_.size(); ++t) a[t] = (mask >> t) & 1u ? +1 : -1;
    return a;
  }

  double total_mass() const {
    double s = 0.0;
    for (double x : table_) s += x;
    return s;
  }

 private:
  VertexSubset subset_;
  std::vector<double> table_;
};

/// Exclusivity feasibility: p_i + p_j <= 1 on every edge (within slack).
/// `worst_edge` is the edge with the largest sum (meaningful when edges exist).
struct EdgeFeasibilityReport {
  bool feasible = true;
  std::pair<int, int> worst_edge{-1, -1};
  double worst_sum = 0.0;
};

inline EdgeFeasibilityReport edge_exclusivity_feasible(const CommutationGraph& g,
                                                       const MarginalVector& p) {
  check_lengths(g, p);
  EdgeFeasibilityReport report;
  for (auto [a, b] : g.edges()) {
    const double s = p[a] + p[b];
    if (s > report.worst_sum) {
      report.worst_sum = s;
      report.worst_edge = {a, b};
    }
  }
  report.feasible = report.worst_sum <= 1.0 + kExclusivitySlack;
  return report;
}

/// Membership in the fractional vertex packing polytope: p >= 0 and
/// sum of p over every maximal clique <= 1 (within slack).
struct FvpReport {
  bool member = true;
  std::optional<VertexSubset> violated_clique;
  double worst_clique_sum = 0.0;
};

inline FvpReport fvp_membership(const CommutationGraph& g, const MarginalVector& p) {
  check_lengths(g, p);
  FvpReport report;
  for (const VertexSubset& clique : enumerate_maximal_cliques(g)) {
    const double s = p.sum_over(clique);
    if (s > report.worst_clique_sum) report.worst_clique_sum = s;
    if (s > 1.0 + kExclusivitySlack && !report.violated_clique) {
      report.member = false;
      report.violated_clique = clique;
    }
  }
  return report;
}

/// Joint table of a jointly measurable (clique) subset, determined by the
/// single-observable marginals alone: tuples with two or more +1 outcomes get
/// zero, exactly one +1 at position t gets p at that vertex, and the all -1
/// tuple absorbs the remainder 1 - sum.
inline SubsetDistribution subset_joint_from_marginals(const CommutationGraph& g,
                                                      const MarginalVector& p,
                                                      const VertexSubset& s) {
  check_lengths(g, p);
  if (s.empty()) throw std::invalid_argument("jointly measurable subset must be nonempty");
  if (!induces_clique(g, s))
    throw std::invalid_argument("subset is not jointly measurable (not a clique)");
  const double total = p.sum_over(s);
  if (total > 1.0 + kExclusivitySlack)
    throw InfeasibleMarginalsError("marginals on the subset sum to " + std::to_string(total) +
                                   " > 1; no exclusive joint exists");
  std::vector<double> table(std::size_t{1} << s.size(), 0.0);
  table[0] = std::max(0.0, 1.0 - total);
  for (std::size_t t = 0; t < s.size(); ++t) table[std::size_t{1} << t] = p[s[t]];
  return SubsetDistribution(s, std::move(table));
}

/// Sparse joint distribution over {-1,+1}^n. Support keys are bitmasks with
/// bit i set iff a_i = +1; iteration order is ascending key, which is fixed
/// and reproducible.
class JointDistribution {
 public:
  explicit JointDistribution(int n) : n_(n) {
    if (n <= 0 || n > 31) throw std::invalid_argument("joint distribution needs 1 <= n <= 31");
  }

  int dimension() const { return n_; }

  void add_mass(std::uint32_t outcome_mask, double probability) {
    if (outcome_mask >= (std::uint32_t{1} << n_))
      throw std::invalid_argument("outcome mask out of range");
    if (probability != 0.0) mass_[outcome_mask] += probability;
  }

  const std::map<std::uint32_t, double>& support() const { return mass_; }

  double total_mass() const {
    double s = 0.0;
    for (auto& [mask, prob] : mass_) s += prob;
    return s;
  }

  std::vector<int> outcome(std::uint32_t mask) const {
    std::vector<int> a(n_);
    for (int i = 0; i < n_; ++i) a[i] = (mask >> i) & 1u ? +1 : -1;
    return a;
  }

 private:
  int n_;
  std::map<std::uint32_t, double> mass_;
};

/// Marginal of F onto `s` (any ordered subset, no clique requirement):
/// sums F over the discarded coordinates. Preserves total mass.
inline SubsetDistribution marginalize(const JointDistribution& f, const VertexSubset& s) {
  if (s.empty()) throw std::invalid_argument("marginalize needs a nonempty subset");
  std::vector<bool> seen(f.dimension(), false);
  for (int v : s) {
    if (v < 0 || v >= f.dimension())
      throw std::invalid_argument("marginalize: vertex out of range");
    if (seen[v]) throw std::invalid_argument("marginalize: duplicate vertex");
    seen[v] = true;
  }
  std::vector<double> table(std::size_t{1} << s.size(), 0.0);
  for (auto& [mask, prob] : f.support()) {
    std::uint32_t sub = 0;
    for (std::size_t t = 0; t < s.size(); ++t)
      if ((mask >> s[t]) & 1u) sub |= std::uint32_t{1} << t;
    table[sub] += prob;
  }
  return SubsetDistribution(s, std::move(table));
}

/// Result of checking a candidate joint distribution F against the four
/// requirements that make it reproduce every jointly measurable subset's
/// distribution: (A) nonnegativity, (B) unit total mass, (C) zero mass
/// whenever two adjacent coordinates are both +1, (D) single-observable
/// marginals equal to p. Each check carries its worst residual.
struct JointCheckReport {
  bool nonnegative = false;
  bool normalized = false;
  bool exclusive = false;
  bool marginals_match = false;
  double worst_negative_mass = 0.0;   ///< max(0, -min mass)
  double normalization_residual = 0.0;  ///< |total - 1|
  double worst_exclusive_mass = 0.0;  ///< largest mass on a (+1,+1) edge pattern
  double worst_marginal_residual = 0.0;  ///< max_i |F(A_i=+1) - p_i|
  double tolerance = kProbabilityTolerance;

  bool verdict() const { return nonnegative && normalized && exclusive && marginals_match; }
};

inline JointCheckReport verify_joint_distribution(const CommutationGraph& g,
                                                  const JointDistribution& f,
                                                  const MarginalVector& p,
                                                  double tolerance = kProbabilityTolerance) {
  check_lengths(g, p);
  if (f.dimension() != g.vertex_count())
    throw std::invalid_argument("joint distribution dimension does not match graph");
  JointCheckReport report;
  report.tolerance = tolerance;

  std::vector<double> plus_marginal(g.vertex_count(), 0.0);
  double total = 0.0;
  for (auto& [mask, prob] : f.support()) {
    total += prob;
    if (prob < 0.0) report.worst_negative_mass = std::max(report.worst_negative_mass, -prob);
    for (int i = 0; i < g.vertex_count(); ++i)
      if ((mask >> i) & 1u) plus_marginal[i] += prob;
    for (auto [a, b] : g.edges())
      if (((mask >> a) & 1u) && ((mask >> b) & 1u))
        report.worst_exclusive_mass = std::max(report.worst_exclusive_mass, prob);
  }
  report.normalization_residual = std::abs(total - 1.0);
  for (int i = 0; i < g.vertex_count(); ++i)
    report.worst_marginal_residual =
        std::max(report.worst_marginal_residual, std::abs(plus_marginal[i] - p[i]));

  report.nonnegative = report.worst_negative_mass <= tolerance;
  report.normalized = report.normalization_residual <= tolerance;
  report.exclusive = report.worst_exclusive_mass <= tolerance;
  report.marginals_match = report.worst_marginal_residual <= tolerance;
  return report;
}

}  // namespace contextlab
