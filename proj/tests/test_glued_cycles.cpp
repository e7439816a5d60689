#include <doctest.h>

#include <set>

#include "contextlab/glued_cycles.hpp"
#include "contextlab/perfection.hpp"

using namespace contextlab;

namespace {

std::set<std::pair<int, int>> cycle_edges(const VertexSubset& order) {
  std::set<std::pair<int, int>> out;
  const int k = static_cast<int>(order.size());
  for (int i = 0; i < k; ++i)
    out.insert(std::minmax(order[i], order[(i + 1) % k]));
  return out;
}

}  // namespace

TEST_CASE("glued(5,3) matches the two-pentagon picture") {
  const auto glued = build_glued_cycles({5, 3});
  CHECK(glued.graph.vertex_count() == 8);
  CHECK(glued.graph.edges().size() == 10);
  CHECK(glued.primed[0] == glued.unprimed[0]);  // A'_1 = A_1
  CHECK(glued.primed[2] == glued.unprimed[3]);  // A'_3 = A_4
  CHECK(glued.vertex_names[glued.unprimed[3]] == "A4=A'3");
  CHECK(induces_chordless_cycle(glued.graph, glued.unprimed_cycle()));
  CHECK(induces_chordless_cycle(glued.graph, glued.primed_cycle()));
}

TEST_CASE("glued(7,4) shares A'_4 = A_5 and has 12 vertices") {
  const auto glued = build_glued_cycles({7, 4});
  CHECK(glued.graph.vertex_count() == 12);
  CHECK(glued.primed[3] == glued.unprimed[4]);
}

TEST_CASE("the selected six vertices of glued(5,3) induce a hexagon") {
  const auto glued = build_glued_cycles({5, 3});
  // A_1, A_2, A_3, A_4, A'_4, A'_5
  const VertexSubset six{glued.unprimed[0], glued.unprimed[1], glued.unprimed[2],
                         glued.unprimed[3], glued.primed[3],   glued.primed[4]};
  CHECK(induced_subgraph(glued.graph, six) == build_cycle(6));
}

TEST_CASE("glued graphs contain both pentagons as induced odd holes") {
  const auto glued = build_glued_cycles({5, 3});
  CHECK(find_odd_hole(glued.graph).has_value());
  CHECK(induces_chordless_cycle(glued.graph, glued.unprimed_cycle()));
  CHECK(induces_chordless_cycle(glued.graph, glued.primed_cycle()));
}

TEST_CASE("even-cycle decomposition partitions edges into chordless even cycles") {
  for (const GluedCycleSpec spec : {GluedCycleSpec{5, 3}, GluedCycleSpec{5, 4},
                                    GluedCycleSpec{7, 3}, GluedCycleSpec{7, 4},
                                    GluedCycleSpec{9, 5}}) {
    CAPTURE(spec.n);
    CAPTURE(spec.m);
    const auto glued = build_glued_cycles(spec);
    const auto evens = decompose_glued_into_even_cycles(spec);
    CHECK(static_cast<int>(evens.first.size()) == 2 * spec.n + 2 - 2 * spec.m);
    CHECK(static_cast<int>(evens.second.size()) == 2 * spec.m - 2);
    CHECK(induces_chordless_cycle(glued.graph, evens.first));
    CHECK(induces_chordless_cycle(glued.graph, evens.second));

    auto first_edges = cycle_edges(evens.first);
    auto second_edges = cycle_edges(evens.second);
    std::set<std::pair<int, int>> all(glued.graph.edges().begin(), glued.graph.edges().end());
    std::set<std::pair<int, int>> together = first_edges;
    together.insert(second_edges.begin(), second_edges.end());
    CHECK(together == all);
    CHECK(first_edges.size() + second_edges.size() == all.size());  // disjoint
  }
}

TEST_CASE("glued(5,3) even cycles name the paper's hexagon and square") {
  const auto glued = build_glued_cycles({5, 3});
  const auto evens = decompose_glued_into_even_cycles({5, 3});
  const VertexSubset hexagon{glued.unprimed[0], glued.unprimed[1], glued.unprimed[2],
                             glued.unprimed[3], glued.primed[3],   glued.primed[4]};
  const VertexSubset square{glued.unprimed[0], glued.primed[1], glued.unprimed[3],
                            glued.unprimed[4]};
  CHECK(evens.first == hexagon);
  CHECK(evens.second == square);
}

TEST_CASE("both even parts pass the perfectness test") {
  for (const GluedCycleSpec spec : {GluedCycleSpec{5, 3}, GluedCycleSpec{7, 4}}) {
    const auto glued = build_glued_cycles(spec);
    const auto evens = decompose_glued_into_even_cycles(spec);
    CHECK(is_perfect(induced_subgraph(glued.graph, evens.first)).perfect);
    CHECK(is_perfect(induced_subgraph(glued.graph, evens.second)).perfect);
  }
}

TEST_CASE("glued-cycle specs are validated") {
  CHECK_THROWS_AS(build_glued_cycles({4, 3}), std::invalid_argument);   // even n
  CHECK_THROWS_AS(build_glued_cycles({3, 3}), std::invalid_argument);   // n too small
  CHECK_THROWS_AS(build_glued_cycles({5, 2}), std::invalid_argument);   // m too small
  CHECK_THROWS_AS(build_glued_cycles({5, 5}), std::invalid_argument);   // m too large
  CHECK_THROWS_AS(build_glued_cycles({7, 7}), std::invalid_argument);
}
