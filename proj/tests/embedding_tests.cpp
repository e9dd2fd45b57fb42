#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "oneplanar/graph.hpp"
#include "oneplanar/planarity.hpp"
#include "oneplanar/rotation.hpp"

using namespace oneplanar;

TEST_CASE("rotation systems pair darts into an involution") {
  // triangle: the unique embedding, two faces of length 3
  RotationSystem rs = RotationSystem::from_neighbor_lists({{1, 2}, {2, 0}, {0, 1}});
  auto fs = faces(rs);
  REQUIRE(fs.size() == 2);
  CHECK(fs[0].length() == 3);
  CHECK(fs[1].length() == 3);
  CHECK(euler_ok(rs));

  // u lists v but v does not list u
  CHECK_THROWS_AS(RotationSystem::from_neighbor_lists({{1}, {}}), Error);
  // count mismatch
  CHECK_THROWS_AS(RotationSystem::from_neighbor_lists({{1, 1}, {0}}), Error);
  // loop
  CHECK_THROWS_AS(RotationSystem::from_neighbor_lists({{0}}), Error);
}

TEST_CASE("face walks cover every dart once") {
  RotationSystem rs =
      RotationSystem::from_neighbor_lists({{1, 3, 2}, {2, 3, 0}, {0, 3, 1}, {0, 1, 2}});
  auto fs = faces(rs);
  int total = 0;
  for (const FaceWalk& w : fs) total += w.length();
  CHECK(total == rs.dart_count());
}

TEST_CASE("planarity with witnesses") {
  auto k4 = is_planar(complete(4));
  REQUIRE(k4.planar);
  CHECK(faces(*k4.embedding).size() == 4);

  CHECK_FALSE(is_planar(complete(5)).planar);
  CHECK_FALSE(is_planar(complete_multipartite({3, 3})).planar);

  SimpleGraph k33_minus = complete_multipartite({3, 3});
  k33_minus.edges.erase(k33_minus.edges.begin());
  auto r = is_planar(k33_minus);
  CHECK(r.planar);
  CHECK(euler_ok(*r.embedding));
}

TEST_CASE("planarity of disconnected input is per component") {
  SimpleGraph two_triangles(6);
  two_triangles.edges = {Edge(0, 1), Edge(1, 2), Edge(0, 2),
                         Edge(3, 4), Edge(4, 5), Edge(3, 5)};
  auto r = is_planar(two_triangles);
  REQUIRE(r.planar);
  CHECK(euler_ok(*r.embedding));
  CHECK_FALSE(r.embedding->connected());
}

TEST_CASE("random graphs: verdicts respect the Euler bound, witnesses validate") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 1000; trial++) {
    int n = std::uniform_int_distribution<int>(3, 10)(rng);
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < n; u++)
      for (int v = u + 1; v < n; v++)
        if (std::uniform_int_distribution<int>(0, 2)(rng) == 0) es.emplace_back(u, v);
    SimpleGraph g = SimpleGraph::from_edges(n, es);
    auto r = is_planar(g);
    if (g.m() > 3 * g.n - 6) CHECK_FALSE(r.planar);
    if (r.planar) {
      CHECK(g.m() <= 3 * g.n - 6);
      CHECK(euler_ok(*r.embedding));
      int total = 0;
      for (const FaceWalk& w : faces(*r.embedding)) total += w.length();
      CHECK(total == 2 * g.m());
    }
    CHECK(r.planar == is_planar_quick(g));
  }
}
