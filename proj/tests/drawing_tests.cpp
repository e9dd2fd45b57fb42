#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <sstream>

#include "oneplanar/drawing.hpp"
#include "oneplanar/drawing_io.hpp"
#include "oneplanar/drawing_ops.hpp"
#include "oneplanar/graph.hpp"
#include "oneplanar/planarity.hpp"

using namespace oneplanar;

namespace {

// K4 drawn as a square with both diagonals crossing at one point.
OnePlaneDrawing k4_crossed() {
  OnePlaneDrawing d;
  d.rs = RotationSystem::from_neighbor_lists(
      {{1, 4, 3}, {2, 4, 0}, {3, 4, 1}, {2, 0, 4}, {2, 3, 0, 1}});
  d.kind = {VertexKind::True, VertexKind::True, VertexKind::True, VertexKind::True,
            VertexKind::Fake};
  return d;
}

OnePlaneDrawing planar_drawing(const SimpleGraph& g) {
  auto r = is_planar(g);
  REQUIRE(r.planar);
  OnePlaneDrawing d;
  d.rs = *r.embedding;
  d.kind.assign(g.n, VertexKind::True);
  return d;
}

bool has_violation(const OnePlaneDrawing& d, ViolationCode code) {
  for (const Violation& v : validate(d))
    if (v.code == code) return true;
  return false;
}

}  // namespace

TEST_CASE("the crossed K4 fixture is a valid drawing of K4") {
  OnePlaneDrawing d = k4_crossed();
  CHECK(is_valid(d));
  CHECK(crossing_count(d) == 1);
  CHECK(underlying_graph(d) == complete(4));
  auto [e1, e2] = crossing_pair(d, 4);
  CHECK(e1 == Edge(0, 2));
  CHECK(e2 == Edge(1, 3));
}

TEST_CASE("face census and the crossing identity") {
  OnePlaneDrawing d = k4_crossed();
  auto census = face_census(d);
  REQUIRE(census.size() == 5);
  std::vector<int> sizes, eps;
  for (const FaceInfo& f : census) {
    sizes.push_back(f.size);
    eps.push_back(f.eps);
  }
  std::sort(sizes.begin(), sizes.end());
  std::sort(eps.begin(), eps.end());
  CHECK(sizes == std::vector<int>{3, 3, 3, 3, 4});
  CHECK(eps == std::vector<int>{2, 2, 2, 2, 4});
  CHECK(crossings_from_face_census(d) == 1);
  CHECK(odd_face_count(d) == 0);

  OnePlaneDrawing triangle = planar_drawing(cycle(3));
  auto tc = face_census(triangle);
  REQUIRE(tc.size() == 2);
  CHECK(tc[0].eps == 3);
  CHECK(tc[1].eps == 3);
  CHECK(crossings_from_face_census(triangle) == 0);
  CHECK(odd_face_count(triangle) == 2);

  OnePlaneDrawing k4flat = planar_drawing(complete(4));
  CHECK(odd_face_count(k4flat) == 4);
  CHECK(crossings_from_face_census(k4flat) == 0);
}

TEST_CASE("validation codes") {
  SECTION("fake degree and fake-fake adjacency") {
    OnePlaneDrawing d = k4_crossed();
    d.kind[0] = VertexKind::Fake;  // degree-3 fake adjacent to the crossing
    CHECK(has_violation(d, ViolationCode::FakeDegree));
    CHECK(has_violation(d, ViolationCode::FakeFakeAdjacency));
  }
  SECTION("crossing of adjacent edges") {
    OnePlaneDrawing d;
    d.rs = RotationSystem::from_neighbor_lists({{3, 3}, {3}, {3}, {0, 1, 2, 0}});
    d.kind = {VertexKind::True, VertexKind::True, VertexKind::True, VertexKind::Fake};
    CHECK(has_violation(d, ViolationCode::SharedEndpointCrossing));
  }
  SECTION("two crossings between the same edge pair") {
    OnePlaneDrawing d;
    d.rs = RotationSystem::from_neighbor_lists(
        {{4, 5}, {4, 5}, {4, 5}, {4, 5}, {0, 1, 2, 3}, {0, 3, 2, 1}});
    d.kind.assign(6, VertexKind::True);
    d.kind[4] = d.kind[5] = VertexKind::Fake;
    CHECK(has_violation(d, ViolationCode::DoubleCrossing));
  }
  SECTION("disconnected") {
    OnePlaneDrawing d;
    d.rs = RotationSystem::from_neighbor_lists({{1, 2}, {2, 0}, {0, 1}, {4, 5}, {5, 3}, {3, 4}});
    d.kind.assign(6, VertexKind::True);
    CHECK(has_violation(d, ViolationCode::NotConnected));
  }
  SECTION("parallel edges") {
    OnePlaneDrawing d;
    d.rs = RotationSystem::from_neighbor_lists({{1, 1}, {0, 0}});
    d.kind.assign(2, VertexKind::True);
    CHECK(has_violation(d, ViolationCode::NotSimple));
  }
  SECTION("nonzero genus") {
    OnePlaneDrawing d;
    d.rs = RotationSystem::from_neighbor_lists(
        {{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}});
    d.kind.assign(4, VertexKind::True);
    CHECK(has_violation(d, ViolationCode::GenusNonZero));
  }
}

TEST_CASE("addable edges: plain and crossing candidates") {
  OnePlaneDrawing p3 = planar_drawing(path(3));
  auto cands = addable_edges(p3);
  REQUIRE(cands.size() == 1);
  CHECK(cands[0].u == 0);
  CHECK(cands[0].v == 2);
  CHECK(cands[0].mode == AddMode::Plain);
  CHECK_FALSE(is_maximal(p3));

  // C4 saturates to the planar K4: one plain diagonal inside, one outside
  OnePlaneDrawing c4 = planar_drawing(cycle(4));
  OnePlaneDrawing sat = saturate(c4);
  CHECK(is_maximal(sat));
  CHECK(underlying_graph(sat) == complete(4));
  CHECK(crossing_count(sat) == 0);
}

TEST_CASE("adding an edge across an uncrossed edge creates a crossing") {
  // planar K4 has no candidates; drop one edge of C4-with-diagonals instead
  OnePlaneDrawing d = planar_drawing(cycle(4));
  auto plain = addable_edges(d);
  REQUIRE_FALSE(plain.empty());
  OnePlaneDrawing with_diag = add_edge(d, plain.front());  // 0-2 inside
  REQUIRE(is_valid(with_diag));
  // now 1-3 can cross 0-2
  std::vector<AddableEdge> cands = addable_edges(with_diag);
  bool found_cross = false;
  for (const AddableEdge& c : cands)
    if (c.mode == AddMode::CrossEdge && c.u == 1 && c.v == 3 && c.crossed == Edge(0, 2)) {
      OnePlaneDrawing crossed = add_edge(with_diag, c);
      REQUIRE(is_valid(crossed));
      CHECK(crossing_count(crossed) == 1);
      CHECK(underlying_graph(crossed) == complete(4));
      found_cross = true;
      break;
    }
  CHECK(found_cross);
}

TEST_CASE("underlying edge removal from drawings") {
  OnePlaneDrawing d = k4_crossed();
  SECTION("removing a crossing edge removes its crossing and smooths the partner") {
    OnePlaneDrawing r = remove_edge(d, 0, 2);
    REQUIRE(is_valid(r));
    CHECK(crossing_count(r) == 0);
    CHECK(underlying_graph(r).m() == 5);
    CHECK(underlying_graph(r).has_edge(1, 3));
  }
  SECTION("removing an uncrossed edge keeps the crossing") {
    OnePlaneDrawing r = remove_edge(d, 0, 1);
    REQUIRE(is_valid(r));
    CHECK(crossing_count(r) == 1);
    CHECK(underlying_graph(r).m() == 5);
    // the deleted edge becomes addable again
    auto cands = addable_edges(r);
    bool again = false;
    for (const AddableEdge& c : cands)
      if (c.u == 0 && c.v == 1) again = true;
    CHECK(again);
  }
  SECTION("absent edge") { CHECK_THROWS_AS(remove_edge(d, 0, 0), Error); }
}

TEST_CASE("drawing format round trip and canonical form") {
  OnePlaneDrawing tri = planar_drawing(cycle(3));
  std::string text = drawing_to_string(tri);
  CHECK(text ==
        "oneplane 1\n"
        "vertices 3\n"
        "v 0 T\n"
        "v 1 T\n"
        "v 2 T\n"
        "rot 0: 1 2\n"
        "rot 1: 0 2\n"
        "rot 2: 0 1\n"
        "end\n");
  OnePlaneDrawing back = drawing_from_string(text);
  CHECK(drawing_to_string(back) == text);

  OnePlaneDrawing d = k4_crossed();
  std::string once = drawing_to_string(d);
  CHECK(drawing_to_string(drawing_from_string(once)) == once);
}

TEST_CASE("drawing parser rejects malformed and invalid input") {
  auto parse = [](const std::string& s) {
    std::istringstream in(s);
    return read_drawing(in);
  };
  CHECK_THROWS_AS(parse("vertices 1\nv 0 T\nrot 0:\nend\n"), Error);         // no header
  CHECK_THROWS_AS(parse("oneplane 2\nvertices 0\nend\n"), Error);            // bad version
  CHECK_THROWS_AS(parse("oneplane 1\nvertices 1\nend\n"), Error);            // missing v line
  CHECK_THROWS_AS(parse("oneplane 1\nvertices 1\nv 0 X\nend\n"), Error);     // bad tag
  CHECK_THROWS_AS(parse("oneplane 1\nvertices 2\nv 0 T\nv 1 T\nrot 0: 1\nrot 1: 0\n"),
                  Error);  // missing end
  // structurally fine but invalid (disconnected): loader must refuse
  std::string disconnected =
      "oneplane 1\nvertices 6\nv 0 T\nv 1 T\nv 2 T\nv 3 T\nv 4 T\nv 5 T\n"
      "rot 0: 1 2\nrot 1: 2 0\nrot 2: 0 1\nrot 3: 4 5\nrot 4: 5 3\nrot 5: 3 4\nend\n";
  try {
    parse(disconnected);
    FAIL("expected rejection");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("NotConnected") != std::string::npos);
  }
}

TEST_CASE("rotation canonicalization ignores the stored anchor") {
  // the same map with rotation lists cycled to arbitrary anchors loads and
  // re-serializes to the canonical form
  std::string canonical = drawing_to_string(k4_crossed());
  std::string cycled =
      "oneplane 1\nvertices 5\nv 0 T\nv 1 T\nv 2 T\nv 3 T\nv 4 F\n"
      "rot 0: 4 3 1\nrot 1: 0 2 4\nrot 2: 1 3 4\nrot 3: 4 2 0\nrot 4: 0 1 2 3\nend\n";
  CHECK(drawing_to_string(drawing_from_string(cycled)) == canonical);
}

TEST_CASE("vertex ids may interleave true and crossing vertices") {
  // the crossed-K4 fixture with the crossing vertex renumbered to id 0
  OnePlaneDrawing d;
  d.rs = RotationSystem::from_neighbor_lists(
      {{3, 4, 1, 2}, {2, 0, 4}, {3, 0, 1}, {4, 0, 2}, {3, 1, 0}});
  d.kind = {VertexKind::Fake, VertexKind::True, VertexKind::True, VertexKind::True,
            VertexKind::True};
  REQUIRE(is_valid(d));
  CHECK(crossing_count(d) == 1);
  SimpleGraph g = underlying_graph(d);
  CHECK(g.n == 4);
  CHECK(g == complete(4));
  CHECK(true_ids(d) == std::vector<int>{1, 2, 3, 4});
}
