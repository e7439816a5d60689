// contextlab: analyze commutation graphs of yes-no observables, build and
// check noncontextual joint distributions, and probe KCBS-type and entropic
// contextuality inequalities and their monogamy.
//
// Exit codes: 0 = analysis completed, asserted properties hold;
//             2 = completed with a violation/infeasibility finding;
//             1 = usage or parse error.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "contextlab/contextlab.hpp"

namespace {

using namespace contextlab;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitFinding = 2;

struct Options {
  std::string output = "text";
  bool json() const { return output == "json"; }
};

VertexSubset parse_index_list(const std::string& csv, int n) {
  VertexSubset out;
  std::istringstream in(csv);
  std::string token;
  while (std::getline(in, token, ',')) {
    try {
      const int label = std::stoi(token);
      if (label < 1 || label > n)
        throw ParseError("vertex label " + token + " out of range 1.." + std::to_string(n));
      out.push_back(label - 1);
    } catch (const std::invalid_argument&) {
      throw ParseError("bad vertex label: '" + token + "'");
    } catch (const std::out_of_range&) {
      throw ParseError("bad vertex label: '" + token + "'");
    }
  }
  if (out.empty()) throw ParseError("empty vertex list");
  return out;
}

Json labels_1based(const VertexSubset& s) {
  Json arr = Json::array();
  for (int v : s) arr.push_back(v + 1);
  return arr;
}

void emit(const Options& options, const std::string& subcommand, const Json& inputs,
          const Json& result, const std::string& text) {
  if (options.json()) {
    const Json report{{"subcommand", subcommand},
                      {"inputs", inputs},
                      {"result", result},
                      {"version", kVersion}};
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

VertexSubset default_cycle_order(const CommutationGraph& g, const std::string& flag) {
  VertexSubset order(g.vertex_count());
  for (int i = 0; i < g.vertex_count(); ++i) order[i] = i;
  if (!induces_chordless_cycle(g, order))
    throw ParseError("graph is not a chordless cycle in label order; pass " + flag);
  return order;
}

int run_graph_perfect(const Options& options, const std::string& path) {
  const auto g = parse_graph_file(path);
  const auto verdict = is_perfect(g);
  Json result{{"perfect", verdict.perfect}};
  std::ostringstream text;
  if (verdict.perfect) {
    text << path << ": perfect (no induced odd hole or antihole)\n";
  } else {
    const char* kind = verdict.kind == OddWitnessKind::Hole ? "hole" : "antihole";
    result["witness"] = Json{{"kind", kind}, {"vertices", labels_1based(verdict.witness)}};
    text << path << ": imperfect, odd " << kind << " on vertices";
    for (int v : verdict.witness) text << " " << v + 1;
    text << "\n";
  }
  emit(options, "graph perfect", Json{{"graph", path}}, result, text.str());
  return verdict.perfect ? kExitOk : kExitFinding;
}

int run_graph_alpha(const Options& options, const std::string& path) {
  const auto g = parse_graph_file(path);
  const int alpha = independence_number(g);
  std::ostringstream text;
  text << path << ": independence number " << alpha << "\n";
  emit(options, "graph alpha", Json{{"graph", path}}, Json{{"alpha", alpha}}, text.str());
  return kExitOk;
}

int run_graph_theta(const Options& options, int hole_m, int antihole_m) {
  const bool hole = hole_m > 0;
  const int m = hole ? hole_m : antihole_m;
  const double theta =
      theta_closed_form(hole ? OddWitnessKind::Hole : OddWitnessKind::Antihole, m);
  const int alpha = hole ? (m - 1) / 2 : 2;
  std::ostringstream text;
  text << "theta(" << (hole ? "C_" : "complement of C_") << m << ") = " << fmt9(theta)
       << "  (independence number " << alpha << ")\n";
  emit(options, "graph theta",
       Json{{"kind", hole ? "hole" : "antihole"}, {"m", m}},
       Json{{"theta", round9(theta)}, {"alpha", alpha}}, text.str());
  return kExitOk;
}

int run_dist_joint(const Options& options, const std::string& graph_path,
                   const std::string& marginals_path, const std::string& subset_csv) {
  const auto g = parse_graph_file(graph_path);
  const auto p = parse_marginals_file(marginals_path);
  const Json inputs{{"graph", graph_path}, {"marginals", marginals_path}};

  if (!subset_csv.empty()) {
    const auto subset = parse_index_list(subset_csv, g.vertex_count());
    const auto joint = subset_joint_from_marginals(g, p, subset);
    std::ostringstream text;
    text << "joint distribution of clique subset";
    for (int v : subset) text << " " << v + 1;
    text << ":\n";
    for (std::uint32_t mask = 0; mask < joint.table().size(); ++mask) {
      text << "  (";
      const auto outcome = joint.outcome(mask);
      for (std::size_t t = 0; t < outcome.size(); ++t)
        text << (t ? "," : "") << (outcome[t] > 0 ? "+1" : "-1");
      text << ") -> " << fmt9(joint.probability(mask)) << "\n";
    }
    Json in2 = inputs;
    in2["subset"] = labels_1based(subset);
    emit(options, "dist joint", in2, subset_distribution_to_json(joint), text.str());
    return kExitOk;
  }

  const auto decomposition = decompose_into_stable_sets(g, p);
  if (!decomposition) {
    emit(options, "dist joint", inputs,
         Json{{"feasible", false},
              {"reason", "marginals lie outside the vertex packing polytope"}},
         "no joint distribution: marginals lie outside the vertex packing polytope\n");
    return kExitFinding;
  }
  const auto joint = construct_joint_distribution(*decomposition);
  std::ostringstream text;
  text << "joint distribution with " << joint.support().size() << " support points:\n";
  for (const auto& [mask, prob] : joint.support()) {
    text << "  (";
    const auto outcome = joint.outcome(mask);
    for (std::size_t t = 0; t < outcome.size(); ++t)
      text << (t ? "," : "") << (outcome[t] > 0 ? "+1" : "-1");
    text << ") -> " << fmt9(prob) << "\n";
  }
  emit(options, "dist joint", inputs, Json{{"feasible", true}, {"joint", joint_to_json(joint)}},
       text.str());
  return kExitOk;
}

int run_dist_decompose(const Options& options, const std::string& graph_path,
                       const std::string& marginals_path) {
  const auto g = parse_graph_file(graph_path);
  const auto p = parse_marginals_file(marginals_path);
  const Json inputs{{"graph", graph_path}, {"marginals", marginals_path}};
  const auto decomposition = decompose_into_stable_sets(g, p);
  if (!decomposition) {
    emit(options, "dist decompose", inputs, Json{{"feasible", false}},
         "infeasible: marginals lie outside the vertex packing polytope\n");
    return kExitFinding;
  }
  Json terms = Json::array();
  std::ostringstream text;
  text << "stable-set decomposition (" << decomposition->weights.size() << " terms";
  if (decomposition->degenerate) text << ", numerically degenerate";
  text << "):\n";
  for (std::size_t k = 0; k < decomposition->weights.size(); ++k) {
    terms.push_back(Json{{"weight", round9(decomposition->weights[k])},
                         {"stable_set", labeling_to_json(decomposition->labelings[k])}});
    text << "  " << fmt9(decomposition->weights[k]) << " * {";
    const auto members = decomposition->labelings[k].members();
    for (std::size_t i = 0; i < members.size(); ++i)
      text << (i ? "," : "") << members[i] + 1;
    text << "}\n";
  }
  text << "residual " << fmt9(decomposition->residual) << "\n";
  emit(options, "dist decompose", inputs,
       Json{{"feasible", true},
            {"terms", terms},
            {"residual", round9(decomposition->residual)},
            {"degenerate", decomposition->degenerate}},
       text.str());
  return kExitOk;
}

int run_dist_verify(const Options& options, const std::string& graph_path,
                    const std::string& marginals_path, const std::string& joint_path) {
  const auto g = parse_graph_file(graph_path);
  const auto p = parse_marginals_file(marginals_path);
  Json inputs{{"graph", graph_path}, {"marginals", marginals_path}};

  std::optional<JointDistribution> joint;
  if (!joint_path.empty()) {
    inputs["joint"] = joint_path;
    joint = parse_joint_file(joint_path, g.vertex_count());
  } else {
    const auto decomposition = decompose_into_stable_sets(g, p);
    if (!decomposition) {
      emit(options, "dist verify", inputs, Json{{"feasible", false}},
           "infeasible: no joint distribution to verify\n");
      return kExitFinding;
    }
    joint = construct_joint_distribution(*decomposition);
  }

  const auto report = verify_joint_distribution(g, *joint, p);
  const Json result{{"nonnegative", report.nonnegative},
                    {"normalized", report.normalized},
                    {"exclusive", report.exclusive},
                    {"marginals_match", report.marginals_match},
                    {"worst_negative_mass", round9(report.worst_negative_mass)},
                    {"normalization_residual", round9(report.normalization_residual)},
                    {"worst_exclusive_mass", round9(report.worst_exclusive_mass)},
                    {"worst_marginal_residual", round9(report.worst_marginal_residual)},
                    {"verdict", report.verdict()}};
  std::ostringstream text;
  text << "nonnegativity: " << (report.nonnegative ? "pass" : "FAIL") << " (residual "
       << fmt9(report.worst_negative_mass) << ")\n"
       << "normalization: " << (report.normalized ? "pass" : "FAIL") << " (residual "
       << fmt9(report.normalization_residual) << ")\n"
       << "exclusivity:   " << (report.exclusive ? "pass" : "FAIL") << " (worst mass "
       << fmt9(report.worst_exclusive_mass) << ")\n"
       << "marginals:     " << (report.marginals_match ? "pass" : "FAIL") << " (residual "
       << fmt9(report.worst_marginal_residual) << ")\n"
       << "verdict: " << (report.verdict() ? "joint distribution verified" : "NOT a valid joint")
       << "\n";
  emit(options, "dist verify", inputs, result, text.str());
  return report.verdict() ? kExitOk : kExitFinding;
}

int run_quantum_umbrella(const Options& options, int n) {
  const auto umbrella = umbrella_model(n);
  const auto p = model_marginals(umbrella.model, umbrella.handle);
  double sum = 0.0;
  for (double x : p.values()) sum += x;
  const double theta = theta_closed_form(OddWitnessKind::Hole, n);
  std::ostringstream text;
  text << "umbrella model for C_" << n << " in dimension 3\n"
       << "marginal p_i = " << fmt9(p[0]) << " each, sum = " << fmt9(sum) << "\n"
       << "theta(C_" << n << ") = " << fmt9(theta) << ", alpha = " << (n - 1) / 2 << "\n";
  emit(options, "quantum umbrella", Json{{"n", n}},
       Json{{"model", model_to_json(umbrella.model, umbrella.handle)},
            {"marginals", marginals_to_json(p)},
            {"marginal_sum", round9(sum)},
            {"theta", round9(theta)}},
       text.str());
  return kExitOk;
}

int run_quantum_counterexample(const Options& options, double kappa) {
  const auto pair = build_counterexample(kappa);
  const auto base_p = model_marginals(pair.base, pair.state);
  const auto rotated_p = model_marginals(pair.rotated, pair.state);
  double base_sum = 0.0, rotated_sum = 0.0;
  for (double x : base_p.values()) base_sum += x;
  for (double x : rotated_p.values()) rotated_sum += x;
  const bool both_violated = base_sum > 2.0 + kViolationThreshold &&
                             rotated_sum > 2.0 + kViolationThreshold;
  std::ostringstream text;
  text << "two pentagon models sharing A'_1 = A_1 and A'_3 = A_4 at kappa = " << kappa << "\n"
       << "base sum     = " << fmt9(base_sum) << "  (bound 2)\n"
       << "rotated sum  = " << fmt9(rotated_sum) << "  (bound 2)\n"
       << (both_violated ? "both KCBS-type inequalities violated: no monogamy\n"
                         : "no simultaneous violation\n");
  emit(options, "quantum counterexample", Json{{"kappa", kappa}},
       Json{{"base", model_to_json(pair.base, pair.state)},
            {"rotated", model_to_json(pair.rotated, pair.state)},
            {"base_sum", round9(base_sum)},
            {"rotated_sum", round9(rotated_sum)},
            {"kappa_upper_bound", round9(kappa_upper_bound(base_sum))},
            {"both_violated", both_violated}},
       text.str());
  return both_violated ? kExitFinding : kExitOk;
}

int run_ineq_kcbs(const Options& options, const std::string& graph_path,
                  const std::string& marginals_path, const std::string& cycle_csv) {
  const auto g = parse_graph_file(graph_path);
  const auto p = parse_marginals_file(marginals_path);
  const auto cycle = cycle_csv.empty() ? default_cycle_order(g, "--cycle")
                                       : parse_index_list(cycle_csv, g.vertex_count());
  const auto report = kcbs_value(g, cycle, p);
  std::ostringstream text;
  text << "sum " << fmt9(report.sum) << " vs bound " << report.bound << ": "
       << (report.violated() ? "VIOLATED by " : "satisfied, slack ")
       << fmt9(std::abs(report.violation)) << "\n";
  emit(options, "ineq kcbs",
       Json{{"graph", graph_path}, {"marginals", marginals_path}, {"cycle", labels_1based(cycle)}},
       Json{{"sum", round9(report.sum)},
            {"bound", report.bound},
            {"violation", round9(report.violation)},
            {"violated", report.violated()}},
       text.str());
  return report.violated() ? kExitFinding : kExitOk;
}

int run_ineq_entropic(const Options& options, const std::string& graph_path,
                      const std::string& marginals_path, const std::string& order_csv) {
  const auto g = parse_graph_file(graph_path);
  const auto p = parse_marginals_file(marginals_path);
  const auto order = order_csv.empty() ? default_cycle_order(g, "--order")
                                       : parse_index_list(order_csv, g.vertex_count());
  const auto report = entropic_chain_value(g, order, p);
  Json chain = Json::array();
  for (double h : report.chain_entropies) chain.push_back(round9(h));
  std::ostringstream text;
  text << "entropic chain value " << fmt9(report.value) << " bits: "
       << (report.violated() ? "VIOLATED (positive)" : "satisfied (nonpositive)") << "\n"
       << "closing term " << fmt9(report.closing_entropy) << " bits\n";
  emit(options, "ineq entropic",
       Json{{"graph", graph_path}, {"marginals", marginals_path}, {"order", labels_1based(order)}},
       Json{{"value", round9(report.value)},
            {"chain_entropies", chain},
            {"closing_entropy", round9(report.closing_entropy)},
            {"violated", report.violated()}},
       text.str());
  return report.violated() ? kExitFinding : kExitOk;
}

Json entropic_to_json(const EntropicReport& report) {
  Json chain = Json::array();
  for (double h : report.chain_entropies) chain.push_back(round9(h));
  return Json{{"cycle", labels_1based(report.cycle)},
              {"chain_entropies", chain},
              {"closing_entropy", round9(report.closing_entropy)},
              {"value", round9(report.value)}};
}

int run_monogamy_verify(const Options& options, int n, int m, const std::string& p_path) {
  const GluedCycleSpec spec{n, m};
  MarginalVector p = p_path.empty() ? monogamy_witness_point(spec, false)
                                    : parse_marginals_file(p_path);
  const auto report = verify_monogamy(spec, p);
  Json certificates = Json::array();
  certificates.push_back(round9(report.even_first.value));
  certificates.push_back(round9(report.even_second.value));
  std::ostringstream text;
  text << "glued C_" << n << " cycles spliced at m = " << m << "\n"
       << "E1 (unprimed) = " << fmt9(report.unprimed.value) << " bits"
       << (report.unprimed.violated() ? "  [single inequality VIOLATED]" : "") << "\n"
       << "E2 (primed)   = " << fmt9(report.primed.value) << " bits"
       << (report.primed.violated() ? "  [single inequality VIOLATED]" : "") << "\n"
       << "E1 + E2 = " << fmt9(report.pair_sum) << " <= 0: "
       << (report.monogamous ? "monogamy holds" : "MONOGAMY FAILED") << "\n"
       << "even-cycle certificates " << fmt9(report.even_first.value) << " and "
       << fmt9(report.even_second.value) << ", identity residual "
       << fmt9(report.identity_residual) << "\n";
  emit(options, "monogamy verify",
       Json{{"n", n}, {"m", m}, {"marginals", p_path.empty() ? "witness-default" : p_path}},
       Json{{"E1", round9(report.unprimed.value)},
            {"E2", round9(report.primed.value)},
            {"sum", round9(report.pair_sum)},
            {"certificates", certificates},
            {"identity_residual", round9(report.identity_residual)},
            {"unprimed", entropic_to_json(report.unprimed)},
            {"primed", entropic_to_json(report.primed)},
            {"verdict", report.monogamous}},
       text.str());
  return report.monogamous ? kExitOk : kExitFinding;
}

int run_monogamy_sweep(const Options& options, int n, int m, long long samples,
                       std::uint64_t seed) {
  const GluedCycleSpec spec{n, m};
  const auto summary = monogamy_random_harness(spec, samples, seed);
  const bool holds = summary.max_pair_sum <= kProbabilityTolerance;
  std::ostringstream text;
  text << "sweep over " << summary.samples << " random + " << summary.targeted_points
       << " targeted marginal vectors (seed " << seed << ")\n"
       << "max E1 + E2            = " << fmt9(summary.max_pair_sum) << "\n"
       << "max single chain value = " << fmt9(summary.max_single_value) << "\n"
       << "single-chain violations: unprimed " << summary.unprimed_violations << ", primed "
       << summary.primed_violations << "\n"
       << "max decomposition-identity residual = " << fmt9(summary.max_identity_residual)
       << "\n"
       << "max even-cycle value   = " << fmt9(summary.max_even_cycle_value) << "\n"
       << (holds ? "monogamy holds on every sample\n" : "MONOGAMY FAILED on some sample\n");
  emit(options, "monogamy sweep",
       Json{{"n", n}, {"m", m}, {"samples", samples}, {"seed", seed}},
       Json{{"samples", summary.samples},
            {"targeted_points", summary.targeted_points},
            {"attempts", summary.attempts},
            {"max_sum", round9(summary.max_pair_sum)},
            {"max_single", round9(summary.max_single_value)},
            {"unprimed_violations", summary.unprimed_violations},
            {"primed_violations", summary.primed_violations},
            {"max_identity_residual", round9(summary.max_identity_residual)},
            {"max_even_cycle_value", round9(summary.max_even_cycle_value)},
            {"verdict", holds}},
       text.str());
  return holds ? kExitOk : kExitFinding;
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("CONTEXTLAB_SEED")) {
    try {
      return std::stoull(env);
    } catch (...) {
      throw ParseError("CONTEXTLAB_SEED is not an unsigned integer");
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graph-theoretic analysis of quantum contextuality scenarios"};
  app.set_version_flag("--version", std::string("contextlab ") + kVersion);
  app.require_subcommand(1);

  Options options;
  app.add_option("--output", options.output, "report format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();

  std::string graph_path, marginals_path, joint_path, subset_csv, cycle_csv, order_csv, p_path;
  int theta_hole_m = 0, theta_antihole_m = 0, umbrella_n = 5;
  int glued_n = 5, glued_m = 3;
  double kappa = 0.0;
  long long samples = 100000;
  std::optional<std::uint64_t> seed;

  auto* graph_cmd = app.add_subcommand("graph", "commutation-graph analysis");
  graph_cmd->require_subcommand(1);
  auto* graph_perfect = graph_cmd->add_subcommand("perfect", "perfectness test with witness");
  graph_perfect->add_option("graph", graph_path, "graph file (JSON or edge list)")->required();
  auto* graph_alpha = graph_cmd->add_subcommand("alpha", "independence number");
  graph_alpha->add_option("graph", graph_path)->required();
  auto* graph_theta = graph_cmd->add_subcommand("theta", "Lovász number closed form");
  graph_theta->add_option("--hole", theta_hole_m, "odd hole size m >= 5");
  graph_theta->add_option("--antihole", theta_antihole_m, "odd antihole size m >= 5");

  auto* dist_cmd = app.add_subcommand("dist", "probability distributions from marginals");
  dist_cmd->require_subcommand(1);
  auto* dist_joint = dist_cmd->add_subcommand("joint", "construct a joint distribution");
  dist_joint->add_option("graph", graph_path)->required();
  dist_joint->add_option("marginals", marginals_path)->required();
  dist_joint->add_option("--subset", subset_csv, "clique subset, e.g. 1,2");
  auto* dist_decompose = dist_cmd->add_subcommand("decompose", "stable-set decomposition");
  dist_decompose->add_option("graph", graph_path)->required();
  dist_decompose->add_option("marginals", marginals_path)->required();
  auto* dist_verify = dist_cmd->add_subcommand("verify", "check joint-distribution conditions");
  dist_verify->add_option("graph", graph_path)->required();
  dist_verify->add_option("marginals", marginals_path)->required();
  dist_verify->add_option("--joint", joint_path, "joint distribution JSON to verify");

  auto* quantum_cmd = app.add_subcommand("quantum", "projective models and states");
  quantum_cmd->require_subcommand(1);
  auto* quantum_umbrella = quantum_cmd->add_subcommand("umbrella", "Lovász umbrella for C_n");
  quantum_umbrella->add_option("n", umbrella_n, "odd cycle length >= 5")->required();
  auto* quantum_counter =
      quantum_cmd->add_subcommand("counterexample", "two pentagons violating both bounds");
  quantum_counter->add_option("--kappa", kappa, "rotation angle in radians")->required();

  auto* ineq_cmd = app.add_subcommand("ineq", "contextuality inequalities");
  ineq_cmd->require_subcommand(1);
  auto* ineq_kcbs = ineq_cmd->add_subcommand("kcbs", "cyclic marginal-sum inequality");
  ineq_kcbs->add_option("graph", graph_path)->required();
  ineq_kcbs->add_option("marginals", marginals_path)->required();
  ineq_kcbs->add_option("--cycle", cycle_csv, "cycle vertices, e.g. 1,2,3,4,5");
  auto* ineq_entropic = ineq_cmd->add_subcommand("entropic", "conditional-entropy chain");
  ineq_entropic->add_option("graph", graph_path)->required();
  ineq_entropic->add_option("marginals", marginals_path)->required();
  ineq_entropic->add_option("--order", order_csv, "cycle order, e.g. 1,2,3,4,5");

  auto* monogamy_cmd = app.add_subcommand("monogamy", "two glued odd-cycle scenarios");
  monogamy_cmd->require_subcommand(1);
  auto* monogamy_verify = monogamy_cmd->add_subcommand("verify", "check E1 + E2 <= 0");
  monogamy_verify->add_option("--n", glued_n, "odd cycle length")->required();
  monogamy_verify->add_option("--m", glued_m, "splice index")->required();
  monogamy_verify->add_option("--p", p_path, "marginals file over the glued graph");
  auto* monogamy_sweep = monogamy_cmd->add_subcommand("sweep", "seeded random sweep");
  monogamy_sweep->add_option("--n", glued_n, "odd cycle length")->required();
  monogamy_sweep->add_option("--m", glued_m, "splice index")->required();
  monogamy_sweep->add_option("--samples", samples, "random samples")->capture_default_str();
  monogamy_sweep->add_option("--seed", seed, "RNG seed (default: CONTEXTLAB_SEED or 0)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (graph_perfect->parsed()) return run_graph_perfect(options, graph_path);
    if (graph_alpha->parsed()) return run_graph_alpha(options, graph_path);
    if (graph_theta->parsed()) {
      if ((theta_hole_m > 0) == (theta_antihole_m > 0))
        throw ParseError("pass exactly one of --hole M or --antihole M");
      return run_graph_theta(options, theta_hole_m, theta_antihole_m);
    }
    if (dist_joint->parsed())
      return run_dist_joint(options, graph_path, marginals_path, subset_csv);
    if (dist_decompose->parsed())
      return run_dist_decompose(options, graph_path, marginals_path);
    if (dist_verify->parsed())
      return run_dist_verify(options, graph_path, marginals_path, joint_path);
    if (quantum_umbrella->parsed()) return run_quantum_umbrella(options, umbrella_n);
    if (quantum_counter->parsed()) return run_quantum_counterexample(options, kappa);
    if (ineq_kcbs->parsed()) return run_ineq_kcbs(options, graph_path, marginals_path, cycle_csv);
    if (ineq_entropic->parsed())
      return run_ineq_entropic(options, graph_path, marginals_path, order_csv);
    if (monogamy_verify->parsed())
      return run_monogamy_verify(options, glued_n, glued_m, p_path);
    if (monogamy_sweep->parsed())
      return run_monogamy_sweep(options, glued_n, glued_m, samples,
                                seed ? *seed : default_seed());
    std::cerr << "no subcommand selected\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ResourceLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InfeasibleMarginalsError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitUsage;
  }
}
