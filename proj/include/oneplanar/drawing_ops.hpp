#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "oneplanar/drawing.hpp"

namespace oneplanar {

// Fixed-drawing augmentation. An absent edge {u,v} of true vertices can be
// added to the drawing exactly two ways:
//   Plain      u and v lie on the boundary of a common face; route inside it.
//   CrossEdge  some uncrossed edge e = xy disjoint from {u,v} has u on one of
//              its two incident faces and v on the other; route across e.
// Both keep the drawing good and 1-planar: a new edge may not cross an
// already-crossed edge nor an edge sharing one of its endpoints, so these two
// shapes exhaust the valid single-edge augmentations. Edges whose two sides
// are the same face (bridges) admit no CrossEdge candidates.

enum class AddMode { Plain, CrossEdge };

struct AddableEdge {
  int u = -1, v = -1;      // true vertices, drawing ids, u < v
  AddMode mode = AddMode::Plain;
  Edge crossed;            // CrossEdge only: the edge to cross
  int corner_u = -1;       // walk out-dart anchoring u's corner on its face
  int corner_v = -1;       // walk out-dart anchoring v's corner
};

inline std::vector<AddableEdge> addable_edges(const OnePlaneDrawing& d) {
  const RotationSystem& rs = d.rs;
  std::vector<FaceWalk> fs = faces(rs);
  std::vector<int> fo = face_of_dart(rs, fs);

  // first corner out-dart of each vertex on each face
  std::vector<std::vector<std::pair<int, int>>> corner(fs.size());  // face -> (vertex, out-dart)
  for (std::size_t f = 0; f < fs.size(); f++) {
    std::set<int> seen;
    for (int dart : fs[f].darts) {
      int v = rs.tail(dart);
      if (seen.insert(v).second) corner[f].emplace_back(v, dart);
    }
  }
  std::set<Edge> present;
  for (const DrawnEdge& de : drawn_edges(d)) present.insert(de.e);

  std::vector<AddableEdge> plain, crossing;

  // Plain: non-adjacent true pairs sharing a face.
  std::set<std::pair<int, int>> plain_seen;
  for (std::size_t f = 0; f < fs.size(); f++) {
    for (std::size_t i = 0; i < corner[f].size(); i++) {
      auto [u, du] = corner[f][i];
      if (d.is_fake(u)) continue;
      for (std::size_t j = i + 1; j < corner[f].size(); j++) {
        auto [v, dv] = corner[f][j];
        if (d.is_fake(v)) continue;
        Edge e(u, v);
        if (present.count(e) || plain_seen.count({e.u, e.v})) continue;
        plain_seen.insert({e.u, e.v});
        AddableEdge a;
        a.u = e.u;
        a.v = e.v;
        a.mode = AddMode::Plain;
        a.corner_u = (e.u == u) ? du : dv;
        a.corner_v = (e.u == u) ? dv : du;
        plain.push_back(a);
      }
    }
  }

  // CrossEdge: route across an uncrossed, non-bridge edge.
  for (const DrawnEdge& de : drawn_edges(d)) {
    if (de.crossed) continue;
    int dart_a = 2 * de.rs_edge, dart_b = dart_a + 1;
    int f1 = fo[dart_a], f2 = fo[dart_b];
    if (f1 == f2) continue;  // bridge
    for (auto [u, du] : corner[f1]) {
      if (d.is_fake(u) || de.e.touches(u)) continue;
      for (auto [v, dv] : corner[f2]) {
        if (d.is_fake(v) || de.e.touches(v) || u == v) continue;
        Edge e(u, v);
        if (present.count(e)) continue;
        AddableEdge a;
        a.u = e.u;
        a.v = e.v;
        a.mode = AddMode::CrossEdge;
        a.crossed = de.e;
        a.corner_u = (e.u == u) ? du : dv;
        a.corner_v = (e.u == u) ? dv : du;
        crossing.push_back(a);
      }
    }
  }

  auto key = [](const AddableEdge& a) {
    return std::make_tuple(a.u, a.v, a.crossed.u, a.crossed.v);
  };
  std::sort(crossing.begin(), crossing.end(),
            [&](const AddableEdge& a, const AddableEdge& b) { return key(a) < key(b); });
  crossing.erase(std::unique(crossing.begin(), crossing.end(),
                             [&](const AddableEdge& a, const AddableEdge& b) {
                               return key(a) == key(b);
                             }),
                 crossing.end());
  std::sort(plain.begin(), plain.end(),
            [&](const AddableEdge& a, const AddableEdge& b) { return key(a) < key(b); });

  std::vector<AddableEdge> out = std::move(plain);
  out.insert(out.end(), crossing.begin(), crossing.end());
  return out;
}

/// A drawing is maximal when no edge can be added to it.
inline bool is_maximal(const OnePlaneDrawing& d) { return addable_edges(d).empty(); }

namespace detail {

inline std::vector<std::vector<int>> neighbor_lists(const RotationSystem& rs) {
  std::vector<std::vector<int>> nl(rs.vertex_count);
  for (int v = 0; v < rs.vertex_count; v++) nl[v] = rs.neighbors(v);
  return nl;
}

}  // namespace detail

/// Realizes one addable-edge candidate (from addable_edges of the same
/// drawing). The result is valid by construction.
inline OnePlaneDrawing add_edge(const OnePlaneDrawing& d, const AddableEdge& cand) {
  std::vector<std::vector<int>> nl = detail::neighbor_lists(d.rs);
  std::vector<VertexKind> kinds = d.kind;
  int u = cand.u, v = cand.v;
  int pos_u = d.rs.dart_pos[cand.corner_u];
  int pos_v = d.rs.dart_pos[cand.corner_v];

  if (cand.mode == AddMode::Plain) {
    nl[u].insert(nl[u].begin() + pos_u, v);
    nl[v].insert(nl[v].begin() + pos_v, u);
  } else {
    int w = static_cast<int>(nl.size());  // the new crossing vertex
    // which dart of the crossed edge borders u's face decides the rotation at w
    int ce = -1;
    for (const DrawnEdge& de : drawn_edges(d))
      if (!de.crossed && de.e == cand.crossed) ce = de.rs_edge;
    require(ce >= 0, Errc::BadParameter, "crossed edge not found or already crossed");
    std::vector<FaceWalk> fs = faces(d.rs);
    std::vector<int> fo = face_of_dart(d.rs, fs);
    int du = 2 * ce;  // dart p->q with p = edge_ends.first
    int p = d.rs.tail(du), q = d.rs.head(du);
    if (fo[du] != fo[cand.corner_u]) {
      std::swap(p, q);
      du = du ^ 1;
    }
    require(fo[du] == fo[cand.corner_u] && fo[du ^ 1] == fo[cand.corner_v],
            Errc::BadParameter, "candidate corners do not flank the crossed edge");
    // subdivide pq at w; u sits right of p->q, v left, so counterclockwise
    // around w the order is u, q, v, p
    for (std::size_t i = 0; i < nl[p].size(); i++)
      if (nl[p][i] == q) nl[p][i] = w;
    for (std::size_t i = 0; i < nl[q].size(); i++)
      if (nl[q][i] == p) nl[q][i] = w;
    nl[u].insert(nl[u].begin() + pos_u, w);
    nl[v].insert(nl[v].begin() + pos_v, w);
    nl.push_back({u, q, v, p});
    kinds.push_back(VertexKind::Fake);
  }

  OnePlaneDrawing out;
  out.rs = RotationSystem::from_neighbor_lists(nl);
  out.kind = std::move(kinds);
  return out;
}

/// Removes an underlying edge {a,b} (drawing ids of true vertices). Removing
/// a crossed edge also removes its crossing vertex and smooths the partner
/// edge back into one arc. Throws when the edge is absent or removal would
/// disconnect the drawing.
inline OnePlaneDrawing remove_edge(const OnePlaneDrawing& d, int a, int b) {
  Edge target(a, b);
  std::optional<DrawnEdge> found;
  for (const DrawnEdge& de : drawn_edges(d))
    if (de.e == target) found = de;
  require(found.has_value(), Errc::EdgeAbsent, "no such underlying edge");

  std::vector<std::vector<int>> nl = detail::neighbor_lists(d.rs);
  std::vector<VertexKind> kinds = d.kind;
  auto erase_nb = [&](int x, int y) {
    auto it = std::find(nl[x].begin(), nl[x].end(), y);
    nl[x].erase(it);
  };

  if (!found->crossed) {
    erase_nb(a, b);
    erase_nb(b, a);
  } else {
    int w = found->fake;
    auto [e1, e2] = crossing_pair(d, w);
    Edge partner = (e1 == target) ? e2 : e1;
    erase_nb(a, w);
    erase_nb(b, w);
    // smooth the partner edge through w
    for (std::size_t i = 0; i < nl[partner.u].size(); i++)
      if (nl[partner.u][i] == w) nl[partner.u][i] = partner.v;
    for (std::size_t i = 0; i < nl[partner.v].size(); i++)
      if (nl[partner.v][i] == w) nl[partner.v][i] = partner.u;
    // drop w, compacting ids above it
    nl.erase(nl.begin() + w);
    kinds.erase(kinds.begin() + w);
    for (auto& list : nl)
      for (int& x : list)
        if (x > w) x--;
  }

  OnePlaneDrawing out;
  out.rs = RotationSystem::from_neighbor_lists(nl);
  out.kind = std::move(kinds);
  require(out.rs.connected(), Errc::BadParameter, "removal disconnects the drawing");
  return out;
}

/// Greedy maximalization: repeatedly applies the first addable candidate
/// (plain candidates first), until the drawing is maximal. Deterministic.
inline OnePlaneDrawing saturate(OnePlaneDrawing d) {
  while (true) {
    std::vector<AddableEdge> cands = addable_edges(d);
    if (cands.empty()) return d;
    d = add_edge(d, cands.front());
  }
}

}  // namespace oneplanar
