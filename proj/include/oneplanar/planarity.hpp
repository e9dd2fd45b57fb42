#pragma once

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/properties.hpp>
#include <optional>
#include <utility>
#include <vector>

#include "oneplanar/graph.hpp"
#include "oneplanar/rotation.hpp"

namespace oneplanar {

struct PlanarityResult {
  bool planar = false;
  std::optional<RotationSystem> embedding;  // present iff planar
};

namespace detail {

using BoostGraph =
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                          boost::property<boost::vertex_index_t, int>,
                          boost::property<boost::edge_index_t, int>>;
using BoostQuickGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;

}  // namespace detail

/// Boolean planarity, no witness. Fast path for search loops.
inline bool is_planar_quick(int n, const std::vector<std::pair<int, int>>& edges) {
  int m = static_cast<int>(edges.size());
  if (n <= 4 || m <= 2) return true;
  if (m > 3 * n - 6) return false;
  detail::BoostQuickGraph g(n);
  for (auto [u, v] : edges) boost::add_edge(u, v, g);
  return boost::boyer_myrvold_planarity_test(g);
}

inline bool is_planar_quick(const SimpleGraph& g) {
  std::vector<std::pair<int, int>> es;
  es.reserve(g.edges.size());
  for (const Edge& e : g.edges) es.emplace_back(e.u, e.v);
  return is_planar_quick(g.n, es);
}

/// Planarity with an embedding witness. Disconnected inputs are embedded per
/// component; the witness always satisfies the face/Euler validation.
inline PlanarityResult is_planar(const SimpleGraph& g) {
  PlanarityResult res;
  if (g.n == 0) {
    res.planar = true;
    res.embedding = RotationSystem::from_neighbor_lists({});
    return res;
  }
  detail::BoostGraph bg(g.n);
  for (const Edge& e : g.edges) boost::add_edge(e.u, e.v, bg);
  // edge indices required by the embedding property map
  int idx = 0;
  for (auto [ei, eend] = boost::edges(bg); ei != eend; ++ei)
    boost::put(boost::edge_index, bg, *ei, idx++);

  using EdgeDesc = boost::graph_traits<detail::BoostGraph>::edge_descriptor;
  std::vector<std::vector<EdgeDesc>> emb(g.n);
  bool planar = boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = bg,
      boost::boyer_myrvold_params::embedding =
          boost::make_iterator_property_map(emb.begin(), boost::get(boost::vertex_index, bg)));
  res.planar = planar;
  if (!planar) return res;

  std::vector<std::vector<int>> nbrs(g.n);
  for (int v = 0; v < g.n; v++) {
    nbrs[v].reserve(emb[v].size());
    for (const EdgeDesc& ed : emb[v]) {
      int a = static_cast<int>(boost::source(ed, bg));
      int b = static_cast<int>(boost::target(ed, bg));
      nbrs[v].push_back(a == v ? b : a);
    }
  }
  RotationSystem rs = RotationSystem::from_neighbor_lists(nbrs);
  require(euler_ok(rs), Errc::MalformedRotation, "embedding failed Euler validation");
  res.embedding = std::move(rs);
  return res;
}

}  // namespace oneplanar
