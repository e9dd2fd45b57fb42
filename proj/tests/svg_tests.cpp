#include <catch2/catch_amalgamated.hpp>

#include <string>

#include "oneplanar/construct.hpp"
#include "oneplanar/planarity.hpp"
#include "oneplanar/svg.hpp"

using namespace oneplanar;

namespace {
int count_occurrences(const std::string& hay, const std::string& needle) {
  int n = 0;
  for (std::size_t pos = hay.find(needle); pos != std::string::npos;
       pos = hay.find(needle, pos + 1))
    n++;
  return n;
}
}  // namespace

TEST_CASE("crossing marks match the fake count") {
  OnePlaneDrawing w = gen_k2222();
  std::string svg = svg_render(w);
  CHECK(count_occurrences(svg, "class=\"crossing-mark\"") == 6);
  CHECK(count_occurrences(svg, "class=\"seg\"") == w.rs.edge_count());
  CHECK(count_occurrences(svg_render(gen_odd_pair(14)), "class=\"crossing-mark\"") == 12);

  auto r = is_planar(complete(4));
  OnePlaneDrawing flat;
  flat.rs = *r.embedding;
  flat.kind.assign(4, VertexKind::True);
  CHECK(count_occurrences(svg_render(flat), "class=\"crossing-mark\"") == 0);
}

TEST_CASE("layouts realize the rotation system") {
  // layout_drawing verifies angular order against the stored rotations and
  // refuses degenerate output, so succeeding here is the guarantee
  for (int k : {3, 4, 5}) CHECK_NOTHROW(layout_drawing(gen_pdw_optimal(k)));
  CHECK_NOTHROW(layout_drawing(gen_odd_pair(16)));  // needs the stellated solve
}

TEST_CASE("layouts that cannot be realized are reported") {
  // a path has one face whose walk repeats its middle vertex: no simple
  // outer polygon exists
  auto r = is_planar(path(3));
  OnePlaneDrawing d;
  d.rs = *r.embedding;
  d.kind.assign(3, VertexKind::True);
  try {
    layout_drawing(d);
    FAIL("expected LayoutDegenerate");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::LayoutDegenerate);
  }
}
