#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "oneplanar/drawing.hpp"
#include "oneplanar/drawing_ops.hpp"
#include "oneplanar/graph.hpp"
#include "oneplanar/rational.hpp"

namespace oneplanar {

/// A vertex adjacent to all others, when one exists.
inline std::optional<int> dominating_vertex(const SimpleGraph& g) {
  std::vector<int> deg = g.degrees();
  for (int v = 0; v < g.n; v++)
    if (deg[v] == g.n - 1) return v;
  return std::nullopt;
}

inline bool has_dominating_vertex(const SimpleGraph& g) {
  return dominating_vertex(g).has_value();
}

/// Edge-count window of crossing-maximal drawings on n >= 8 vertices:
/// 23n/6 - 20/3 <= m <= 4n - 8 (exact rationals).
inline std::pair<Rational, Rational> pro1_window(int n) {
  require(n >= 8, Errc::BadParameter, "window defined for n >= 8");
  return {Rational(23 * n, 6) - Rational(20, 3), Rational(4 * n - 8)};
}

/// Certified upper bound on the crossings of a valid drawing. Every valid
/// drawing satisfies crossings <= n - 2; the bound tightens to n - 3 when any
/// of the exclusion certificates fires:
///   small  3 <= n <= 7
///   dom    the drawn graph has a dominating vertex
///   sparse the drawing is maximal with m < 23n/6 - 20/3
/// The report never claims more than these certificates establish.
struct BoundReport {
  int bound = 0;
  std::vector<std::string> rules;  // fired certificates, in the order above
};

inline BoundReport crossing_upper_bound_report(const OnePlaneDrawing& d) {
  SimpleGraph g = underlying_graph(d);
  require(g.n >= 3, Errc::BadParameter, "needs at least 3 vertices");
  BoundReport rep;
  rep.bound = g.n - 2;
  if (g.n <= 7) rep.rules.push_back("small");
  if (has_dominating_vertex(g)) rep.rules.push_back("dom");
  Rational sparse_threshold = Rational(23 * g.n, 6) - Rational(20, 3);
  if (Rational(g.m()) < sparse_threshold && is_maximal(d)) rep.rules.push_back("sparse");
  if (!rep.rules.empty()) rep.bound = g.n - 3;
  return rep;
}

}  // namespace oneplanar
