#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "contextlab/distributions.hpp"
#include "contextlab/glued_cycles.hpp"
#include "contextlab/graph.hpp"
#include "contextlab/stable_sets.hpp"

namespace contextlab {

inline constexpr double kViolationThreshold = 1e-12;

/// Cyclic marginal-sum inequality sum_i P(A_i = 1) <= alpha(cycle).
struct KcbsReport {
  double sum = 0.0;
  int bound = 0;
  double violation = 0.0;  ///< sum - bound

  bool violated() const { return violation > kViolationThreshold; }
};

inline KcbsReport kcbs_value(const CommutationGraph& g, const VertexSubset& cycle,
                             const MarginalVector& p) {
  check_lengths(g, p);
  if (!induces_chordless_cycle(g, cycle))
    throw std::invalid_argument("subset does not induce a chordless cycle");
  KcbsReport report;
  report.sum = p.sum_over(cycle);
  report.bound = independence_number(induced_subgraph(g, cycle));
  report.violation = report.sum - report.bound;
  return report;
}

namespace detail {

inline double xlg(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

}  // namespace detail

/// Shannon conditional entropy H(first | second) in bits of a two-observable
/// joint: H(A,B) - H(B), with 0 log 0 = 0.
inline double conditional_entropy(const SubsetDistribution& joint) {
  if (joint.arity() != 2)
    throw std::invalid_argument("conditional entropy needs a pair distribution");
  double joint_entropy = 0.0;
  for (double x : joint.table()) joint_entropy -= detail::xlg(x);
  const double p_second = joint.probability(0b10) + joint.probability(0b11);
  const double cond_entropy =
      joint_entropy + detail::xlg(p_second) + detail::xlg(1.0 - p_second);
  return std::max(0.0, cond_entropy);
}

/// Entropic chain value of an ordered chordless cycle (c_1, ..., c_k):
///   E = -sum_{i<k} H(A_{c_i} | A_{c_{i+1}}) + H(A_{c_1} | A_{c_k}),
/// pairwise joints taken from the exclusive single-marginal construction.
/// E <= 0 whenever a global joint distribution exists (chain rule), so a
/// positive value witnesses contextuality.
struct EntropicReport {
  VertexSubset cycle;
  std::vector<double> chain_entropies;  ///< H(A_{c_i} | A_{c_{i+1}}), i = 1..k-1
  double closing_entropy = 0.0;         ///< H(A_{c_1} | A_{c_k})
  double value = 0.0;

  bool violated() const { return value > kViolationThreshold; }
};

inline EntropicReport entropic_chain_value(const CommutationGraph& g, const VertexSubset& cycle,
                                           const MarginalVector& p) {
  check_lengths(g, p);
  if (!induces_chordless_cycle(g, cycle))
    throw std::invalid_argument("subset does not induce a chordless cycle");
  const int k = static_cast<int>(cycle.size());
  for (int i = 0; i < k; ++i) {
    const int a = cycle[i], b = cycle[(i + 1) % k];
    if (p[a] + p[b] > 1.0 + kExclusivitySlack)
      throw InfeasibleMarginalsError("cycle edge (" + std::to_string(a + 1) + "," +
                                     std::to_string(b + 1) + ") has marginal sum " +
                                     std::to_string(p[a] + p[b]) + " > 1");
  }
  EntropicReport report;
  report.cycle = cycle;
  for (int i = 0; i + 1 < k; ++i) {
    const auto joint = subset_joint_from_marginals(g, p, {cycle[i], cycle[i + 1]});
    report.chain_entropies.push_back(conditional_entropy(joint));
  }
  report.closing_entropy =
      conditional_entropy(subset_joint_from_marginals(g, p, {cycle.front(), cycle.back()}));
  double value = report.closing_entropy;
  for (double h : report.chain_entropies) value -= h;
  report.value = value;
  return report;
}

/// Monogamy verdict for the two odd-cycle chains of a glued scenario. The two
/// even-cycle chains of the decomposition certify it: their terms are a signed
/// rearrangement of the odd chains' terms, so E1 + E2 = E_even1 + E_even2 and
/// each even value is nonpositive for exclusivity-feasible marginals.
struct MonogamyReport {
  GluedCycleSpec spec;
  EntropicReport unprimed;
  EntropicReport primed;
  EntropicReport even_first;
  EntropicReport even_second;
  double pair_sum = 0.0;           ///< E1 + E2
  double identity_residual = 0.0;  ///< |(E1+E2) - (E_even1+E_even2)|
  bool monogamous = false;         ///< pair_sum <= 1e-9
};

inline MonogamyReport verify_monogamy(const GluedCycleSpec& spec, const MarginalVector& p) {
  const GluedCycles glued = build_glued_cycles(spec);
  check_lengths(glued.graph, p);
  const auto feasibility = edge_exclusivity_feasible(glued.graph, p);
  if (!feasibility.feasible)
    throw InfeasibleMarginalsError("marginals infeasible on glued-graph edge (" +
                                   std::to_string(feasibility.worst_edge.first + 1) + "," +
                                   std::to_string(feasibility.worst_edge.second + 1) + ")");
  const EvenCycleDecomposition evens = decompose_glued_into_even_cycles(spec);
  MonogamyReport report;
  report.spec = spec;
  report.unprimed = entropic_chain_value(glued.graph, glued.unprimed_cycle(), p);
  report.primed = entropic_chain_value(glued.graph, glued.primed_cycle(), p);
  report.even_first = entropic_chain_value(glued.graph, evens.first, p);
  report.even_second = entropic_chain_value(glued.graph, evens.second, p);
  report.pair_sum = report.unprimed.value + report.primed.value;
  report.identity_residual =
      std::abs(report.pair_sum - (report.even_first.value + report.even_second.value));
  report.monogamous = report.pair_sum <= kProbabilityTolerance;
  return report;
}

/// Marginals putting one odd cycle at the alternating 1/3, 2/3 assignment
/// (chain edges deterministic, closing pair free: the chain value comes out
/// at +2/3) and every vertex exclusive to the other cycle at zero.
inline MarginalVector monogamy_witness_point(const GluedCycleSpec& spec, bool on_primed) {
  const GluedCycles glued = build_glued_cycles(spec);
  std::vector<double> p(glued.graph.vertex_count(), 0.0);
  const std::vector<int>& cycle = on_primed ? glued.primed : glued.unprimed;
  for (int i = 0; i < spec.n; ++i) p[cycle[i]] = (i % 2 == 0) ? 1.0 / 3.0 : 2.0 / 3.0;
  return MarginalVector(std::move(p));
}

/// Seeded sweep over the edge-feasible region of a glued scenario. In
/// addition to `samples` uniform rejection samples it always evaluates the
/// two witness points above, so single-inequality violations show up in the
/// summary while the pair sum stays nonpositive.
struct SweepSummary {
  long long samples = 0;          ///< random samples evaluated
  long long targeted_points = 0;  ///< deterministic witness points evaluated
  long long attempts = 0;         ///< raw draws including rejections
  double max_pair_sum = 0.0;
  double max_single_value = 0.0;
  long long unprimed_violations = 0;
  long long primed_violations = 0;
  double max_identity_residual = 0.0;
  double max_even_cycle_value = 0.0;
};

inline SweepSummary monogamy_random_harness(const GluedCycleSpec& spec, long long samples,
                                            std::uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("sweep needs at least one sample");
  const GluedCycles glued = build_glued_cycles(spec);
  const EvenCycleDecomposition evens = decompose_glued_into_even_cycles(spec);
  const int n_vertices = glued.graph.vertex_count();
  const auto& edges = glued.graph.edges();

  SweepSummary summary;
  bool first = true;
  auto record = [&](const MarginalVector& p, bool targeted) {
    const EntropicReport e1 = entropic_chain_value(glued.graph, glued.unprimed_cycle(), p);
    const EntropicReport e2 = entropic_chain_value(glued.graph, glued.primed_cycle(), p);
    const EntropicReport even1 = entropic_chain_value(glued.graph, evens.first, p);
    const EntropicReport even2 = entropic_chain_value(glued.graph, evens.second, p);
    const double pair_sum = e1.value + e2.value;
    const double identity = std::abs(pair_sum - (even1.value + even2.value));
    if (first || pair_sum > summary.max_pair_sum) summary.max_pair_sum = pair_sum;
    const double single = std::max(e1.value, e2.value);
    if (first || single > summary.max_single_value) summary.max_single_value = single;
    if (first || identity > summary.max_identity_residual)
      summary.max_identity_residual = identity;
    const double even_worst = std::max(even1.value, even2.value);
    if (first || even_worst > summary.max_even_cycle_value)
      summary.max_even_cycle_value = even_worst;
    if (e1.value > kViolationThreshold) ++summary.unprimed_violations;
    if (e2.value > kViolationThreshold) ++summary.primed_violations;
    first = false;
    if (targeted)
      ++summary.targeted_points;
    else
      ++summary.samples;
  };

  record(monogamy_witness_point(spec, false), true);
  record(monogamy_witness_point(spec, true), true);

  // Sample budget is split into fixed-size streams, each with its own engine
  // derived from the seed, so results do not depend on execution interleaving.
  constexpr long long kChunk = 4096;
  std::vector<double> draw(n_vertices);
  for (long long chunk_start = 0; chunk_start < samples; chunk_start += kChunk) {
    const long long chunk_len = std::min(kChunk, samples - chunk_start);
    std::uint64_t stream = seed ^ (0x9e3779b97f4a7c15ULL * (chunk_start / kChunk + 1));
    std::mt19937_64 rng(stream);
    auto uniform01 = [&rng]() { return (rng() >> 11) * 0x1.0p-53; };
    for (long long t = 0; t < chunk_len; ++t) {
      while (true) {
        ++summary.attempts;
        for (double& x : draw) x = uniform01();
        bool feasible = true;
        for (auto [a, b] : edges)
          if (draw[a] + draw[b] > 1.0) {
            feasible = false;
            break;
          }
        if (feasible) break;
      }
      record(MarginalVector(draw), false);
    }
  }
  return summary;
}

}  // namespace contextlab
