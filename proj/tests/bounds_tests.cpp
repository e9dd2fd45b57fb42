#include <catch2/catch_amalgamated.hpp>

#include "oneplanar/bounds.hpp"
#include "oneplanar/construct.hpp"
#include "oneplanar/drawing_ops.hpp"
#include "oneplanar/planarity.hpp"

using namespace oneplanar;

namespace {
OnePlaneDrawing planar_drawing(const SimpleGraph& g) {
  auto r = is_planar(g);
  REQUIRE(r.planar);
  OnePlaneDrawing d;
  d.rs = *r.embedding;
  d.kind.assign(g.n, VertexKind::True);
  return d;
}
}  // namespace

TEST_CASE("dominating vertices") {
  CHECK(has_dominating_vertex(star(5)));
  CHECK(dominating_vertex(star(5)).value() == 0);
  CHECK_FALSE(has_dominating_vertex(cycle(4)));
  CHECK_FALSE(has_dominating_vertex(underlying_graph(gen_k2222())));
}

TEST_CASE("edge-count window") {
  auto w14 = pro1_window(14);
  CHECK(w14.first == Rational(47));
  CHECK(w14.second == Rational(48));
  auto w8 = pro1_window(8);
  CHECK(w8.first == Rational(24));
  CHECK(w8.second == Rational(24));
  auto w20 = pro1_window(20);
  CHECK(w20.first == Rational(70));
  CHECK(w20.second == Rational(72));
  CHECK_THROWS_AS(pro1_window(7), Error);
}

TEST_CASE("crossing bound certificates") {
  SECTION("small drawings always drop to n-3") {
    OnePlaneDrawing tri = planar_drawing(cycle(3));
    BoundReport r = crossing_upper_bound_report(tri);
    CHECK(r.bound == 0);
    REQUIRE_FALSE(r.rules.empty());
    CHECK(r.rules[0] == "small");
  }
  SECTION("no certificate fires on crossing-maximal drawings") {
    OnePlaneDrawing d = gen_odd_pair(14);
    BoundReport r = crossing_upper_bound_report(d);
    CHECK(r.bound == 12);
    CHECK(r.rules.empty());
    CHECK(crossing_count(d) == r.bound);
  }
  SECTION("dominating vertex certificate") {
    // wheel: hub 0 adjacent to a 5-cycle
    SimpleGraph w(6);
    w.edges = {Edge(0, 1), Edge(0, 2), Edge(0, 3), Edge(0, 4), Edge(0, 5),
               Edge(1, 2), Edge(2, 3), Edge(3, 4), Edge(4, 5), Edge(1, 5)};
    OnePlaneDrawing d = saturate(planar_drawing(w));
    BoundReport r = crossing_upper_bound_report(d);
    bool dom = false;
    for (const auto& rule : r.rules)
      if (rule == "dom") dom = true;
    CHECK(dom);
    CHECK(r.bound == 3);
    CHECK(crossing_count(d) <= r.bound);
  }
  SECTION("sparse certificate on a maximal drawing") {
    // saturating the cube's embedding stays below the 23n/6 - 20/3 threshold
    RotationSystem cube = RotationSystem::from_neighbor_lists({
        {1, 3, 4}, {2, 0, 5}, {3, 1, 6}, {0, 2, 7},
        {0, 7, 5}, {1, 4, 6}, {2, 5, 7}, {3, 6, 4}});
    OnePlaneDrawing d;
    d.rs = cube;
    d.kind.assign(8, VertexKind::True);
    OnePlaneDrawing sat = saturate(d);
    REQUIRE(is_maximal(sat));
    SimpleGraph g = underlying_graph(sat);
    BoundReport r = crossing_upper_bound_report(sat);
    bool sparse_fired = false;
    for (const auto& rule : r.rules)
      if (rule == "sparse") sparse_fired = true;
    CHECK(sparse_fired == (Rational(g.m()) < Rational(23 * g.n, 6) - Rational(20, 3)));
    CHECK(crossing_count(sat) <= r.bound);
  }
}

TEST_CASE("a fired certificate implies the drawing is not crossing-maximal") {
  // dominating-vertex case: saturated wheel
  SimpleGraph w(6);
  w.edges = {Edge(0, 1), Edge(0, 2), Edge(0, 3), Edge(0, 4), Edge(0, 5),
             Edge(1, 2), Edge(2, 3), Edge(3, 4), Edge(4, 5), Edge(1, 5)};
  OnePlaneDrawing d = saturate(planar_drawing(w));
  REQUIRE(is_maximal(d));
  BoundReport r = crossing_upper_bound_report(d);
  REQUIRE_FALSE(r.rules.empty());
  QuasiVerdict v = is_quasi_optimal(d);
  CHECK_FALSE(v.quasi);
}
