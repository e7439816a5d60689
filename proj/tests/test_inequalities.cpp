#include <doctest.h>

#include <cmath>
#include <random>

#include "contextlab/inequalities.hpp"
#include "contextlab/quantum.hpp"

using namespace contextlab;
using doctest::Approx;

namespace {

// Reference constants computed at 25-digit precision.
constexpr double kSqrt5 = 2.2360679774997897;
constexpr double kCondEntropy04 = 0.55097750043269371;     // H(A|B) at p = q = 0.4
constexpr double kPentagonChain04 = -1.6529325012980811;   // -3 * kCondEntropy04
constexpr double kCondEntropyUmbrella = 0.38889812005367855;  // p = q = 1/sqrt(5)

MarginalVector uniform_marginals(int n, double value) {
  return MarginalVector(std::vector<double>(n, value));
}

double binary_entropy(double p) {
  auto xlg = [](double x) { return x > 0.0 ? x * std::log2(x) : 0.0; };
  return -xlg(p) - xlg(1.0 - p);
}

}  // namespace

TEST_CASE("KCBS report for the umbrella marginals on C5") {
  const auto c5 = build_cycle(5);
  const auto umbrella = umbrella_model(5);
  const auto p = model_marginals(umbrella.model, umbrella.handle);
  const auto report = kcbs_value(c5, {0, 1, 2, 3, 4}, p);
  CHECK(report.sum == Approx(kSqrt5).epsilon(1e-10));
  CHECK(report.bound == 2);
  CHECK(report.violation == Approx(kSqrt5 - 2.0).epsilon(1e-9));
  CHECK(report.violated());
}

TEST_CASE("KCBS boundary and classical points do not violate") {
  const auto c5 = build_cycle(5);
  const auto boundary = kcbs_value(c5, {0, 1, 2, 3, 4}, uniform_marginals(5, 0.4));
  CHECK(boundary.sum == Approx(2.0));
  CHECK(!boundary.violated());

  const auto labeling = kcbs_value(c5, {0, 1, 2, 3, 4}, MarginalVector({1, 0, 1, 0, 0}));
  CHECK(labeling.sum <= 2.0 + 1e-12);
}

TEST_CASE("KCBS rejects subsets that are not chordless cycles") {
  const auto c5 = build_cycle(5);
  CHECK_THROWS_AS(kcbs_value(c5, {0, 1, 2}, uniform_marginals(5, 0.1)), std::invalid_argument);
  CHECK_THROWS_AS(kcbs_value(c5, {0, 2, 4, 1, 3}, uniform_marginals(5, 0.1)),
                  std::invalid_argument);
}

TEST_CASE("conditional entropy of exclusive pairs") {
  const CommutationGraph edge(2, {{0, 1}});
  auto pair_entropy = [&](double pa, double pb) {
    return conditional_entropy(subset_joint_from_marginals(edge, MarginalVector({pa, pb}), {0, 1}));
  };
  CHECK(pair_entropy(0.5, 0.5) == Approx(0.0).scale(1.0));  // perfect anticorrelation
  CHECK(pair_entropy(0.4, 0.4) == Approx(kCondEntropy04).epsilon(1e-12));
  // partner constant: H(A | B) = H(A)
  CHECK(pair_entropy(0.3, 0.0) == Approx(binary_entropy(0.3)).epsilon(1e-12));
  CHECK(pair_entropy(1.0 / 3.0, 1.0 / 3.0) == Approx(2.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("conditional entropy needs a pair") {
  const CommutationGraph edge(2, {{0, 1}});
  const auto single = subset_joint_from_marginals(edge, MarginalVector({0.2, 0.2}), {0});
  CHECK_THROWS_AS(conditional_entropy(single), std::invalid_argument);
}

TEST_CASE("conditional entropies stay within [0, 1] and below the plain entropy") {
  const CommutationGraph edge(2, {{0, 1}});
  std::mt19937_64 rng(8);
  auto uniform01 = [&rng]() { return (rng() >> 11) * 0x1.0p-53; };
  for (int trial = 0; trial < 200; ++trial) {
    double pa = uniform01(), pb = uniform01();
    if (pa + pb > 1.0) continue;
    const double h =
        conditional_entropy(subset_joint_from_marginals(edge, MarginalVector({pa, pb}), {0, 1}));
    CHECK(h >= 0.0);
    CHECK(h <= 1.0);
    CHECK(h <= binary_entropy(pa) + 1e-12);
  }
}

TEST_CASE("entropic chain on C5 flags the alternating-thirds witness") {
  const auto c5 = build_cycle(5);
  const MarginalVector witness({1.0 / 3, 2.0 / 3, 1.0 / 3, 2.0 / 3, 1.0 / 3});
  const auto report = entropic_chain_value(c5, {0, 1, 2, 3, 4}, witness);
  for (double h : report.chain_entropies) CHECK(h == Approx(0.0).scale(1.0));
  CHECK(report.closing_entropy == Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(report.value == Approx(2.0 / 3.0).epsilon(1e-9));
  CHECK(report.violated());
}

TEST_CASE("entropic chain on C5 at the umbrella point collapses by symmetry") {
  const auto c5 = build_cycle(5);
  const auto umbrella = umbrella_model(5);
  const auto p = model_marginals(umbrella.model, umbrella.handle);
  const auto report = entropic_chain_value(c5, {0, 1, 2, 3, 4}, p);
  CHECK(report.value == Approx(-3.0 * kCondEntropyUmbrella).epsilon(1e-9));
  CHECK(report.value < 0.0);
}

TEST_CASE("entropic chain is zero at zero marginals") {
  const auto c6 = build_cycle(6);
  const auto report = entropic_chain_value(c6, {0, 1, 2, 3, 4, 5}, uniform_marginals(6, 0.0));
  CHECK(report.value == Approx(0.0).scale(1.0));
}

TEST_CASE("entropic chain rejects infeasible marginals and non-cycles") {
  const auto c5 = build_cycle(5);
  CHECK_THROWS_AS(entropic_chain_value(c5, {0, 1, 2, 3, 4}, MarginalVector({0.9, 0.9, 0, 0, 0})),
                  InfeasibleMarginalsError);
  CHECK_THROWS_AS(entropic_chain_value(c5, {0, 1, 2}, uniform_marginals(5, 0.1)),
                  std::invalid_argument);
}

TEST_CASE("even cycles never go positive over random feasible marginals") {
  std::mt19937_64 rng(1234);
  auto uniform01 = [&rng]() { return (rng() >> 11) * 0x1.0p-53; };
  for (int k : {4, 6, 8}) {
    const auto g = build_cycle(k);
    VertexSubset order(k);
    for (int i = 0; i < k; ++i) order[i] = i;
    int accepted = 0;
    while (accepted < 1000) {
      std::vector<double> p(k);
      for (double& x : p) x = uniform01();
      bool feasible = true;
      for (int i = 0; i < k; ++i)
        if (p[i] + p[(i + 1) % k] > 1.0) {
          feasible = false;
          break;
        }
      if (!feasible) continue;
      ++accepted;
      CHECK(entropic_chain_value(g, order, MarginalVector(p)).value <= 1e-9);
    }
  }
}

TEST_CASE("monogamy verdict at the all-0.4 point matches the closed form") {
  const auto report = verify_monogamy({5, 3}, uniform_marginals(8, 0.4));
  CHECK(report.unprimed.value == Approx(kPentagonChain04).epsilon(1e-10));
  CHECK(report.primed.value == Approx(kPentagonChain04).epsilon(1e-10));
  CHECK(report.pair_sum == Approx(2.0 * kPentagonChain04).epsilon(1e-10));
  CHECK(report.identity_residual <= 1e-9);
  CHECK(report.monogamous);
}

TEST_CASE("monogamy holds even when one chain is violated") {
  const auto witness = monogamy_witness_point({5, 3}, false);
  const auto report = verify_monogamy({5, 3}, witness);
  CHECK(report.unprimed.value == Approx(2.0 / 3.0).epsilon(1e-9));
  CHECK(report.unprimed.violated());
  CHECK(report.pair_sum <= 1e-9);
  CHECK(report.monogamous);

  const auto primed_witness = monogamy_witness_point({5, 3}, true);
  const auto primed_report = verify_monogamy({5, 3}, primed_witness);
  CHECK(primed_report.primed.violated());
  CHECK(primed_report.monogamous);
}

TEST_CASE("monogamy report is tight at zero marginals") {
  const auto report = verify_monogamy({5, 3}, uniform_marginals(8, 0.0));
  CHECK(report.unprimed.value == Approx(0.0).scale(1.0));
  CHECK(report.primed.value == Approx(0.0).scale(1.0));
  CHECK(report.pair_sum == Approx(0.0).scale(1.0));
  CHECK(report.monogamous);
}

TEST_CASE("monogamy rejects infeasible marginals") {
  CHECK_THROWS_AS(verify_monogamy({5, 3}, uniform_marginals(8, 0.7)), InfeasibleMarginalsError);
}

TEST_CASE("decomposition identity holds across configurations and samples") {
  std::mt19937_64 rng(555);
  auto uniform01 = [&rng]() { return (rng() >> 11) * 0x1.0p-53; };
  for (const GluedCycleSpec spec : {GluedCycleSpec{5, 3}, GluedCycleSpec{5, 4},
                                    GluedCycleSpec{7, 3}, GluedCycleSpec{7, 4},
                                    GluedCycleSpec{9, 5}}) {
    const auto glued = build_glued_cycles(spec);
    const int n = glued.graph.vertex_count();
    int accepted = 0;
    while (accepted < 100) {
      std::vector<double> p(n);
      for (double& x : p) x = uniform01();
      bool feasible = true;
      for (auto [a, b] : glued.graph.edges())
        if (p[a] + p[b] > 1.0) {
          feasible = false;
          break;
        }
      if (!feasible) continue;
      ++accepted;
      const auto report = verify_monogamy(spec, MarginalVector(p));
      CHECK(report.identity_residual <= 1e-9);
      CHECK(report.pair_sum <= 1e-9);
      CHECK(report.even_first.value <= 1e-9);
      CHECK(report.even_second.value <= 1e-9);
    }
  }
}

TEST_CASE("random harness summary is deterministic and sees single violations") {
  const auto summary = monogamy_random_harness({5, 3}, 2000, 42);
  CHECK(summary.samples == 2000);
  CHECK(summary.targeted_points == 2);
  CHECK(summary.max_pair_sum <= 1e-9);
  CHECK(summary.max_identity_residual <= 1e-9);
  CHECK(summary.max_even_cycle_value <= 1e-9);
  CHECK(summary.unprimed_violations >= 1);  // the targeted witness at least
  CHECK(summary.primed_violations >= 1);
  CHECK(summary.max_single_value >= 0.6);

  const auto again = monogamy_random_harness({5, 3}, 2000, 42);
  CHECK(again.max_pair_sum == summary.max_pair_sum);
  CHECK(again.max_single_value == summary.max_single_value);
  CHECK(again.attempts == summary.attempts);

  const auto one = monogamy_random_harness({5, 3}, 1, 7);
  CHECK(one.samples == 1);
}

TEST_CASE("KCBS non-monogamy coexists with entropic monogamy") {
  const double kappa = 0.2;
  const auto pair = build_counterexample(kappa);
  const auto base_p = model_marginals(pair.base, pair.state);
  const auto rotated_p = model_marginals(pair.rotated, pair.state);

  const auto glued = build_glued_cycles({5, 3});
  std::vector<double> p(glued.graph.vertex_count(), 0.0);
  for (int i = 0; i < 5; ++i) p[glued.unprimed[i]] = base_p[i];
  for (int j = 0; j < 5; ++j) p[glued.primed[j]] = rotated_p[j];
  // identified observables agree, so the overwrite is consistent
  CHECK(p[glued.unprimed[0]] == Approx(base_p[0]));
  CHECK(p[glued.unprimed[3]] == Approx(rotated_p[2]));
  const MarginalVector marginals(p);

  const auto kcbs_base = kcbs_value(glued.graph, glued.unprimed_cycle(), marginals);
  const auto kcbs_rotated = kcbs_value(glued.graph, glued.primed_cycle(), marginals);
  CHECK(kcbs_base.violated());
  CHECK(kcbs_rotated.violated());

  const auto entropic = verify_monogamy({5, 3}, marginals);
  CHECK(entropic.monogamous);
}
