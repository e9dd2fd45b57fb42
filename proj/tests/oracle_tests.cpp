#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "oneplanar/acceptance.hpp"
#include "oneplanar/construct.hpp"
#include "oneplanar/graph.hpp"
#include "oneplanar/oracle.hpp"

using namespace oneplanar;

namespace {
SimpleGraph k7_minus_triangle() {
  SimpleGraph c3(7);
  c3.edges = {Edge(4, 5), Edge(4, 6), Edge(5, 6)};
  return remove_edges(complete(7), c3);
}
}  // namespace

TEST_CASE("euler lower bound") {
  CHECK(euler_lower_bound(complete(5)) == 1);
  CHECK(euler_lower_bound(complete(6)) == 3);
  CHECK(euler_lower_bound(k7_minus_triangle()) == 3);
  CHECK(euler_lower_bound(path(5)) == 0);
  CHECK(euler_lower_bound(complete(3)) == 0);
}

TEST_CASE("gadget planarization") {
  SECTION("empty plan is the identity") {
    SimpleGraph k4 = complete(4);
    CrossingPlan empty;
    CHECK(gadget_planarization(k4, empty) == k4);
  }
  SECTION("one crossing in K5") {
    SimpleGraph k5 = complete(5);
    CrossingPlan plan;
    int i = k5.edge_index(0, 1), j = k5.edge_index(2, 3);
    plan.pairs = {{std::min(i, j), std::max(i, j)}};
    SimpleGraph g = gadget_planarization(k5, plan);
    CHECK(g.n == 7);
    CHECK(g.m() == 13);
    CHECK(is_planar_quick(g));
    // the two crossing nodes are adjacent and split the two edges' chains
    CHECK(g.has_edge(5, 6));
    CHECK(g.has_edge(0, 5));
    CHECK(g.has_edge(2, 5));
    CHECK(g.has_edge(1, 6));
    CHECK(g.has_edge(3, 6));
    CHECK_FALSE(g.has_edge(0, 1));
    CHECK_FALSE(g.has_edge(2, 3));
  }
  SECTION("an edge in two pairs follows the given order") {
    SimpleGraph g(6);
    g.edges = {Edge(0, 1), Edge(2, 3), Edge(4, 5)};
    CrossingPlan plan;
    plan.pairs = {{0, 1}, {0, 2}};  // edge 0 crossed by edges 1 and 2
    plan.edge_orders[0] = {0, 1};
    SimpleGraph h = gadget_planarization(g, plan);
    CHECK(h.n == 10);
    CHECK(h.m() == 9);
    // chain from vertex 0: a0=6, b0=7, a1=8, b1=9
    CHECK(h.has_edge(0, 6));
    CHECK(h.has_edge(7, 8));
    CHECK(h.has_edge(9, 1));
    CrossingPlan reversed = plan;
    reversed.edge_orders[0] = {1, 0};
    SimpleGraph h2 = gadget_planarization(g, reversed);
    CHECK(h2.has_edge(0, 8));
    CHECK(h2.has_edge(9, 6));
    CHECK(h2.has_edge(7, 1));
    // plans must order multiply-crossed edges
    CrossingPlan missing;
    missing.pairs = plan.pairs;
    CHECK_THROWS_AS(gadget_planarization(g, missing), Error);
  }
  SECTION("adjacent edges may not cross") {
    SimpleGraph k4 = complete(4);
    CrossingPlan bad;
    bad.pairs = {{0, 1}};  // (0,1) and (0,2) share vertex 0
    CHECK_THROWS_AS(gadget_planarization(k4, bad), Error);
  }
}

TEST_CASE("cr_at_most decisions") {
  SimpleGraph k5 = complete(5);
  CHECK(cr_at_most(k5, 0).status == OracleStatus::Refuted);
  auto r1 = cr_at_most(k5, 1);
  REQUIRE(r1.status == OracleStatus::Found);
  REQUIRE(r1.plan.has_value());
  CHECK(r1.plan->size() == 1);
  CHECK(realized_crossings(k5, *r1.plan) <= 1);
  // monotone: success persists for larger k
  CHECK(cr_at_most(k5, 2).status == OracleStatus::Found);
  CHECK(cr_at_most(k5, 3).status == OracleStatus::Found);

  SimpleGraph k6 = complete(6);
  CHECK(cr_at_most(k6, 2).status == OracleStatus::Refuted);
  auto r6 = cr_at_most(k6, 3);
  REQUIRE(r6.status == OracleStatus::Found);
  CHECK(realized_crossings(k6, *r6.plan) <= 3);

  OracleOptions tiny;
  tiny.budget = 2;
  CHECK(cr_at_most(k6, 3, tiny).status == OracleStatus::Undecided);
}

TEST_CASE("crossing numbers of small graphs") {
  auto r5 = crossing_number(complete(5), 4);
  CHECK(r5.status == OracleStatus::Found);
  CHECK(r5.value == 1);
  CHECK(r5.refutations.empty());  // the Euler bound already starts at 1

  auto r33 = crossing_number(complete_multipartite({3, 3}), 4);
  CHECK(r33.value == 1);

  auto rp = crossing_number(path(6), 2);
  CHECK(rp.value == 0);

  // bounded search reports a refutation-backed lower bound
  auto capped = crossing_number(complete(6), 2);
  CHECK(capped.status == OracleStatus::Refuted);
  CHECK(capped.lower_bound == 3);
}

TEST_CASE("drawings close the search as upper-bound hints") {
  for (int k : {3, 4}) {
    OnePlaneDrawing d = gen_pdw_optimal(k);
    SimpleGraph g = underlying_graph(d);
    CrossingPlan hint = plan_from_drawing(d);
    CHECK(static_cast<int>(hint.pairs.size()) == crossing_count(d));
    CHECK(euler_lower_bound(g) == crossing_count(d));
    auto r = crossing_number(g, crossing_count(d), {}, hint);
    CHECK(r.status == OracleStatus::Found);
    CHECK(r.value == g.n - 2);
    CHECK(r.stats.nodes == 0);  // closed without search
  }
}

TEST_CASE("one-planarity decisions") {
  SECTION("planar graphs get crossing-free witnesses") {
    auto r = is_one_planar(complete(4));
    REQUIRE(r.status == OracleStatus::Found);
    CHECK(crossing_count(*r.witness) == 0);
    CHECK(underlying_graph(*r.witness) == complete(4));
  }
  SECTION("K5 and K6") {
    auto r5 = is_one_planar(complete(5));
    REQUIRE(r5.status == OracleStatus::Found);
    CHECK(is_valid(*r5.witness));
    CHECK(crossing_count(*r5.witness) == 1);
    CHECK(underlying_graph(*r5.witness) == complete(5));

    auto r6 = is_one_planar(complete(6));
    REQUIRE(r6.status == OracleStatus::Found);
    CHECK(is_valid(*r6.witness));
    CHECK(crossing_count(*r6.witness) == 3);
    CHECK(underlying_graph(*r6.witness) == complete(6));
  }
  SECTION("the edge bound rejects instantly") {
    CHECK(is_one_planar(complete(9)).status == OracleStatus::Refuted);  // 36 > 28
    CHECK(is_one_planar(complete(9)).stats.nodes == 0);
  }
}

TEST_CASE("census of the seven-vertex complements") {
  CensusReport rep = seven_vertex_census();
  CHECK(rep.complete);
  CHECK(rep.exceptional_empty == 1);
  CHECK(rep.exceptional_edge == 21);
  CHECK(rep.exceptional_two_path == 105);
  CHECK(rep.exceptional_triangle == 35);
  CHECK(rep.total() == (std::uint64_t{1} << 21));
}

TEST_CASE("random small graphs agree with the unpruned reference") {
  std::mt19937 rng(555);
  for (int trial = 0; trial < 10; trial++) {
    int n = std::uniform_int_distribution<int>(4, 6)(rng);
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < n; u++)
      for (int v = u + 1; v < n; v++)
        if (std::uniform_int_distribution<int>(0, 2)(rng) > 0) es.emplace_back(u, v);
    SimpleGraph g = SimpleGraph::from_edges(n, es);
    auto reference = oneplanar::detail::unpruned_crossing_number(g, 3);
    auto oracle = crossing_number(g, 3);
    if (reference.has_value()) {
      REQUIRE(oracle.status == OracleStatus::Found);
      CHECK(oracle.value == *reference);
    } else {
      CHECK(oracle.status == OracleStatus::Refuted);
    }
  }
}

TEST_CASE("the 1-planarity oracle requires connected input") {
  SimpleGraph two_triangles(6);
  two_triangles.edges = {Edge(0, 1), Edge(1, 2), Edge(0, 2),
                         Edge(3, 4), Edge(4, 5), Edge(3, 5)};
  CHECK_THROWS_AS(is_one_planar(two_triangles), Error);
}
