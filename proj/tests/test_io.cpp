#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>

#include "contextlab/glued_cycles.hpp"
#include "contextlab/io.hpp"
#include "contextlab/perfection.hpp"

using namespace contextlab;
using doctest::Approx;

namespace {

const std::string kDataDir = CONTEXTLAB_DATA_DIR;

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& contents) {
    static int counter = 0;
    path = "contextlab_io_test_" + std::to_string(counter++) + ".tmp";
    std::ofstream out(path);
    out << contents;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("graph JSON round trip with 1-based labels") {
  const auto g = build_cycle(5);
  const auto j = graph_to_json(g);
  CHECK(j["n"] == 5);
  CHECK(j["edges"][0] == Json::array({1, 2}));
  CHECK(graph_from_json(j) == g);
}

TEST_CASE("edge-list parsing merges duplicates and skips comments") {
  TempFile file("# a triangle\n1 2\n2 3 # inline comment\n3 1\n\n2 1\n");
  const auto g = parse_graph_file(file.path);
  CHECK(g.vertex_count() == 3);
  CHECK(g.edges().size() == 3);
}

TEST_CASE("parse failures carry context") {
  TempFile selfloop("{\"n\": 3, \"edges\": [[1, 1]]}");
  CHECK_THROWS_AS(parse_graph_file(selfloop.path), ParseError);

  TempFile malformed("{\"n\": 3, \"edges\": [[1]]}");
  CHECK_THROWS_AS(parse_graph_file(malformed.path), ParseError);

  TempFile truncated("{\"n\": 3");
  CHECK_THROWS_AS(parse_graph_file(truncated.path), ParseError);

  TempFile badline("1 2\n3\n");
  CHECK_THROWS_AS(parse_graph_file(badline.path), ParseError);

  TempFile zerolabel("0 1\n");
  CHECK_THROWS_AS(parse_graph_file(zerolabel.path), ParseError);

  CHECK_THROWS_AS(parse_graph_file("does_not_exist.json"), ParseError);
}

TEST_CASE("marginal files parse and validate") {
  TempFile file("{\"p\": [0.1, 0.9, 0.5]}");
  const auto p = parse_marginals_file(file.path);
  CHECK(p.size() == 3);
  CHECK(p[1] == Approx(0.9));

  TempFile bad("{\"p\": [1.5]}");
  CHECK_THROWS_AS(parse_marginals_file(bad.path), ParseError);
}

TEST_CASE("joint distribution JSON round trip") {
  JointDistribution f(3);
  f.add_mass(0b101, 0.25);
  f.add_mass(0b000, 0.75);
  const Json j = joint_to_json(f);
  REQUIRE(j.size() == 2);
  CHECK(j[0]["outcome"] == Json::array({-1, -1, -1}));
  CHECK(j[0]["prob"] == Approx(0.75));

  const auto parsed = joint_from_json(j, 3, "test");
  CHECK(parsed.support().at(0b101) == Approx(0.25));
  CHECK(parsed.support().at(0b000) == Approx(0.75));
}

TEST_CASE("model JSON round trip preserves vectors and state") {
  const auto umbrella = umbrella_model(5);
  const Json j = model_to_json(umbrella.model, umbrella.handle);
  TempFile file(j.dump());
  const auto [model, state] = parse_model_file(file.path);
  CHECK(model.dimension() == 3);
  CHECK(model.observable_count() == 5);
  for (int i = 0; i < 5; ++i)
    for (int d = 0; d < 3; ++d)
      CHECK(model.vectors()[i][d].real() ==
            Approx(umbrella.model.vectors()[i][d].real()).epsilon(1e-8));
  CHECK(state.amplitudes()[2].real() == Approx(1.0));
}

TEST_CASE("round9 keeps nine significant digits") {
  CHECK(round9(2.2360679774997896) == Approx(2.23606798).epsilon(1e-12));
  CHECK(round9(0.4472135954999579) == Approx(0.447213595).epsilon(1e-12));
  CHECK(round9(0.0) == 0.0);
  CHECK(round9(-1.23456789012345e-7) == Approx(-1.23456789e-7).epsilon(1e-12));
}

TEST_CASE("shipped pentagon data parses to an imperfect C5") {
  const auto g = parse_graph_file(kDataDir + "/pentagon.json");
  CHECK(g == build_cycle(5));
  const auto verdict = is_perfect(g);
  CHECK(!verdict.perfect);
  CHECK(verdict.kind == OddWitnessKind::Hole);
}

TEST_CASE("shipped scenario graphs contain induced pentagons") {
  const auto qutrit = parse_graph_file(kDataDir + "/fig1b.edges");
  CHECK(qutrit.vertex_count() == 13);
  CHECK(qutrit.edges().size() == 24);
  const auto hole_b = find_odd_hole(qutrit);
  REQUIRE(hole_b.has_value());
  CHECK(hole_b->size() == 5);

  const auto qudit = parse_graph_file(kDataDir + "/fig1c.edges");
  CHECK(qudit.vertex_count() == 18);
  CHECK(qudit.edges().size() == 54);
  const auto hole_c = find_odd_hole(qudit);
  REQUIRE(hole_c.has_value());
  CHECK(hole_c->size() == 5);
}

TEST_CASE("shipped glued graph matches the builder") {
  const auto g = parse_graph_file(kDataDir + "/glued_5_3.json");
  const auto glued = build_glued_cycles({5, 3});
  CHECK(g == glued.graph);
}
