#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <sstream>

#include "oneplanar/canonical.hpp"
#include "oneplanar/connectivity.hpp"
#include "oneplanar/drawing.hpp"
#include "oneplanar/graph.hpp"
#include "oneplanar/rational.hpp"

using namespace oneplanar;

TEST_CASE("standard constructions") {
  CHECK(complete(6).m() == 15);
  CHECK(complete(7).m() == 21);
  CHECK(path(5).m() == 4);
  CHECK(cycle(5).m() == 5);
  CHECK(matching(2).m() == 2);
  CHECK(star(3).m() == 3);
  CHECK(complete_multipartite({2, 2, 2, 2}).m() == 24);
  CHECK(complete_multipartite({1, 1, 1, 1, 3}).m() == 18);
  CHECK_THROWS_AS(cycle(2), Error);
}

TEST_CASE("edge removal") {
  SimpleGraph k7 = complete(7);
  SimpleGraph c3(7);
  c3.edges = {Edge(0, 1), Edge(0, 2), Edge(1, 2)};
  SimpleGraph g = remove_edges(k7, c3);
  CHECK(g.m() == 18);
  CHECK(isomorphic(g, complete_multipartite({1, 1, 1, 1, 3})));

  SimpleGraph two_k2(7);
  two_k2.edges = {Edge(0, 1), Edge(2, 3)};
  CHECK(remove_edges(k7, two_k2).m() == 19);

  SimpleGraph absent(7);
  absent.edges = {Edge(0, 1)};
  SimpleGraph host = remove_edges(k7, absent);
  CHECK_THROWS_AS(remove_edges(host, absent), Error);
}

TEST_CASE("graph text format") {
  std::istringstream in("# comment\ngraph 4\ne 0 1\ne 1 2 # trailing\ne 2 3\nend\n");
  SimpleGraph g = read_graph(in);
  CHECK(g.n == 4);
  CHECK(g.m() == 3);

  std::ostringstream out;
  write_graph(out, g);
  std::istringstream back(out.str());
  CHECK(read_graph(back) == g);

  std::istringstream dup("graph 3\ne 0 1\ne 1 0\nend\n");
  CHECK_THROWS_AS(read_graph(dup), Error);
  std::istringstream loop("graph 3\ne 1 1\nend\n");
  CHECK_THROWS_AS(read_graph(loop), Error);
  std::istringstream range("graph 3\ne 0 5\nend\n");
  CHECK_THROWS_AS(read_graph(range), Error);
  std::istringstream noend("graph 3\ne 0 1\n");
  CHECK_THROWS_AS(read_graph(noend), Error);
}

TEST_CASE("rationals") {
  CHECK(Rational(35, 3).str() == "35/3");
  CHECK(Rational(4, 2).str() == "2");
  CHECK(Rational(-6, -4) == Rational(3, 2));
  CHECK(Rational(1, -2).str() == "-1/2");
  CHECK(Rational(14) - Rational(2) - Rational(2, 6) == Rational(35, 3));
  CHECK(Rational(35, 3) < Rational(12));
  CHECK(Rational(23 * 14, 6) - Rational(20, 3) == Rational(47));
  CHECK_THROWS_AS(Rational(1, 0), Error);
}

TEST_CASE("degree statistics and the degree-based bound") {
  DegreeStats c5 = degree_stats(cycle(5));
  CHECK(c5.lambda1 == 5);
  CHECK(c5.lambda2 == 0);
  CHECK(c5.lambda3 == 0);
  DegreeStats k4 = degree_stats(complete(4));
  CHECK(k4.lambda1 == 0);
  CHECK(k4.lambda2 == 0);
  CHECK(k4.lambda3 == 4);
  CHECK(degree_based_crossing_bound(cycle(5)) == Rational(4, 3));
  // all degrees 6: every lambda vanishes, bound is n-2
  CHECK(degree_based_crossing_bound(complete(7)) == Rational(5));
}

TEST_CASE("connectivity") {
  CHECK(connectivity(cycle(5)) == 2);
  CHECK(connectivity(complete(5)) == 4);
  CHECK(connectivity(path(6)) == 1);
  CHECK(connectivity(complete_multipartite({2, 2, 2, 2})) == 6);
  SimpleGraph disconnected(4);
  disconnected.edges = {Edge(0, 1), Edge(2, 3)};
  CHECK(connectivity(disconnected) == 0);
  CHECK(connectivity(star(4)) == 1);
}

TEST_CASE("connectivity is at most the minimum degree") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; trial++) {
    int n = std::uniform_int_distribution<int>(2, 9)(rng);
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < n; u++)
      for (int v = u + 1; v < n; v++)
        if (std::uniform_int_distribution<int>(0, 2)(rng)) es.emplace_back(u, v);
    SimpleGraph g = SimpleGraph::from_edges(n, es);
    int mindeg = g.n;
    for (int d : g.degrees()) mindeg = std::min(mindeg, d);
    CHECK(connectivity(g) <= mindeg);
  }
}

TEST_CASE("canonical forms distinguish and identify") {
  SimpleGraph c6 = cycle(6);
  SimpleGraph two_triangles(6);
  two_triangles.edges = {Edge(0, 1), Edge(1, 2), Edge(0, 2),
                         Edge(3, 4), Edge(4, 5), Edge(3, 5)};
  CHECK_FALSE(isomorphic(c6, two_triangles));  // same degree sequence

  // relabeled cycle
  SimpleGraph shuffled(6);
  int perm[6] = {3, 0, 4, 1, 5, 2};
  for (const Edge& e : c6.edges) shuffled.edges.emplace_back(perm[e.u], perm[e.v]);
  std::sort(shuffled.edges.begin(), shuffled.edges.end());
  CHECK(isomorphic(c6, shuffled));

  CHECK(isomorphic(complete(7), complete(7)));
  CHECK_FALSE(isomorphic(path(4), star(3)));
}
