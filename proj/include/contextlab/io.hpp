#pragma once

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "contextlab/decomposition.hpp"
#include "contextlab/distributions.hpp"
#include "contextlab/graph.hpp"
#include "contextlab/quantum.hpp"

namespace contextlab {

using Json = nlohmann::json;

/// Rounds to 9 significant digits; reports carry no more precision than the
/// library's working tolerance anyway.
inline double round9(double x) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.9g", x);
  return std::strtod(buffer, nullptr);
}

/// Same rounding as a string, for text-mode reports.
inline std::string fmt9(double x) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.9g", x);
  return buffer;
}

namespace io_detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

inline Json parse_json(const std::string& path, const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

}  // namespace io_detail

/// Graph JSON: {"n": <int>, "edges": [[i,j], ...]} with 1-based labels.
inline CommutationGraph graph_from_json(const Json& j, const std::string& context = "graph") {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw ParseError(context + ": expected an object with \"n\" and \"edges\"");
  if (!j["n"].is_number_integer()) throw ParseError(context + ": \"n\" must be an integer");
  const int n = j["n"].get<int>();
  std::vector<std::pair<int, int>> edges;
  for (const Json& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      throw ParseError(context + ": each edge must be a pair of integers");
    edges.emplace_back(e[0].get<int>() - 1, e[1].get<int>() - 1);
  }
  try {
    return CommutationGraph(n, edges);
  } catch (const std::invalid_argument& e) {
    throw ParseError(context + ": " + e.what());
  }
}

inline Json graph_to_json(const CommutationGraph& g) {
  Json edges = Json::array();
  for (auto [a, b] : g.edges()) edges.push_back({a + 1, b + 1});
  return Json{{"n", g.vertex_count()}, {"edges", edges}};
}

/// Edge-list text: one "i j" pair per line, 1-based, '#' starts a comment;
/// the vertex count is the largest label seen.
inline CommutationGraph graph_from_edge_list(const std::string& path, const std::string& text) {
  std::vector<std::pair<int, int>> edges;
  int max_label = 0;
  std::istringstream in(text);
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream fields(line);
    int a, b;
    if (!(fields >> a)) continue;  // blank or comment-only line
    if (!(fields >> b))
      throw ParseError(path + ":" + std::to_string(line_number) + ": expected \"i j\"");
    std::string rest;
    if (fields >> rest)
      throw ParseError(path + ":" + std::to_string(line_number) + ": trailing tokens");
    if (a < 1 || b < 1)
      throw ParseError(path + ":" + std::to_string(line_number) + ": labels are 1-based");
    edges.emplace_back(a - 1, b - 1);
    max_label = std::max({max_label, a, b});
  }
  if (edges.empty()) throw ParseError(path + ": no edges found");
  try {
    return CommutationGraph(max_label, edges);
  } catch (const std::invalid_argument& e) {
    throw ParseError(path + ": " + e.what());
  }
}

/// Reads either format, sniffing JSON by the first non-space character.
inline CommutationGraph parse_graph_file(const std::string& path) {
  const std::string text = io_detail::read_file(path);
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '{') return graph_from_json(io_detail::parse_json(path, text), path);
    break;
  }
  return graph_from_edge_list(path, text);
}

/// Marginal JSON: {"p": [..]} in graph label order.
inline MarginalVector parse_marginals_file(const std::string& path) {
  const Json j = io_detail::parse_json(path, io_detail::read_file(path));
  if (!j.is_object() || !j.contains("p") || !j["p"].is_array())
    throw ParseError(path + ": expected {\"p\": [..]}");
  std::vector<double> p;
  for (const Json& x : j["p"]) {
    if (!x.is_number()) throw ParseError(path + ": marginals must be numbers");
    p.push_back(x.get<double>());
  }
  try {
    return MarginalVector(std::move(p));
  } catch (const std::invalid_argument& e) {
    throw ParseError(path + ": " + e.what());
  }
}

inline Json marginals_to_json(const MarginalVector& p) {
  Json arr = Json::array();
  for (double x : p.values()) arr.push_back(round9(x));
  return Json{{"p", arr}};
}

/// Joint distribution JSON: a list of {"outcome": [-1,1,...], "prob": x},
/// sorted by outcome tuple.
inline Json joint_to_json(const JointDistribution& f) {
  Json arr = Json::array();
  for (auto& [mask, prob] : f.support()) {
    Json outcome = Json::array();
    for (int a : f.outcome(mask)) outcome.push_back(a);
    arr.push_back({{"outcome", outcome}, {"prob", round9(prob)}});
  }
  return arr;
}

inline JointDistribution joint_from_json(const Json& j, int n, const std::string& context) {
  if (!j.is_array()) throw ParseError(context + ": expected a list of outcome/prob entries");
  JointDistribution f(n);
  for (const Json& entry : j) {
    if (!entry.is_object() || !entry.contains("outcome") || !entry.contains("prob"))
      throw ParseError(context + ": each entry needs \"outcome\" and \"prob\"");
    const Json& outcome = entry["outcome"];
    if (!outcome.is_array() || static_cast<int>(outcome.size()) != n)
      throw ParseError(context + ": outcome length must equal the vertex count");
    std::uint32_t mask = 0;
    for (int i = 0; i < n; ++i) {
      const int a = outcome[i].get<int>();
      if (a != 1 && a != -1) throw ParseError(context + ": outcomes must be +1 or -1");
      if (a == 1) mask |= std::uint32_t{1} << i;
    }
    f.add_mass(mask, entry["prob"].get<double>());
  }
  return f;
}

inline JointDistribution parse_joint_file(const std::string& path, int n) {
  return joint_from_json(io_detail::parse_json(path, io_detail::read_file(path)), n, path);
}

/// Model JSON: {"dim": d, "vectors": [[[re,im],...d], ...n], "state": [[re,im],...d]}.
/// Amplitudes keep full round-trip precision: rounding them would break the
/// unit-norm invariant on re-parse. The 9-digit policy applies to report
/// scalars, not model data.
inline Json complex_vector_to_json(const std::vector<Complex>& v) {
  Json arr = Json::array();
  for (const Complex& z : v) arr.push_back({z.real(), z.imag()});
  return arr;
}

inline std::vector<Complex> complex_vector_from_json(const Json& j, const std::string& context) {
  if (!j.is_array()) throw ParseError(context + ": expected a list of [re, im] pairs");
  std::vector<Complex> v;
  for (const Json& z : j) {
    if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number())
      throw ParseError(context + ": each amplitude must be [re, im]");
    v.emplace_back(z[0].get<double>(), z[1].get<double>());
  }
  return v;
}

inline Json model_to_json(const ProjectiveModel& model, const StateVector& state) {
  Json vectors = Json::array();
  for (const auto& v : model.vectors()) vectors.push_back(complex_vector_to_json(v));
  return Json{{"dim", model.dimension()},
              {"vectors", vectors},
              {"state", complex_vector_to_json(state.amplitudes())}};
}

inline std::pair<ProjectiveModel, StateVector> parse_model_file(const std::string& path) {
  const Json j = io_detail::parse_json(path, io_detail::read_file(path));
  if (!j.is_object() || !j.contains("dim") || !j.contains("vectors") || !j.contains("state"))
    throw ParseError(path + ": expected {\"dim\", \"vectors\", \"state\"}");
  const int dim = j["dim"].get<int>();
  std::vector<std::vector<Complex>> vectors;
  for (const Json& v : j["vectors"]) vectors.push_back(complex_vector_from_json(v, path));
  try {
    return {ProjectiveModel(dim, std::move(vectors)),
            StateVector(complex_vector_from_json(j["state"], path))};
  } catch (const std::invalid_argument& e) {
    throw ParseError(path + ": " + e.what());
  }
}

inline Json subset_distribution_to_json(const SubsetDistribution& d) {
  Json vertices = Json::array();
  for (int v : d.subset()) vertices.push_back(v + 1);
  Json table = Json::array();
  for (std::uint32_t mask = 0; mask < d.table().size(); ++mask) {
    Json outcome = Json::array();
    for (int a : d.outcome(mask)) outcome.push_back(a);
    table.push_back({{"outcome", outcome}, {"prob", round9(d.probability(mask))}});
  }
  return Json{{"subset", vertices}, {"table", table}};
}

inline Json labeling_to_json(const StableLabeling& q) {
  Json members = Json::array();
  for (int v : q.members()) members.push_back(v + 1);
  return members;
}

}  // namespace contextlab
