#pragma once

#include <algorithm>
#include <queue>
#include <utility>
#include <vector>

#include "oneplanar/errors.hpp"
#include "oneplanar/graph.hpp"

namespace oneplanar {

// A combinatorial map: per-vertex counterclockwise cyclic orders of darts.
// Edge i owns darts 2i (u->v) and 2i+1 (v->u); twin(d) = d^1. Face walks use
// successor(d) = rotation-next of twin(d); with counterclockwise rotations
// this traverses each face with the face on the RIGHT of its darts (walks
// run clockwise around bounded faces). Parallel edges are representable
// (darts are explicit), loops are not.
struct RotationSystem {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edge_ends;   // edge -> (tail of even dart, head)
  std::vector<std::vector<int>> rotation;       // vertex -> darts in ccw order
  std::vector<int> dart_pos;                    // dart -> index in rotation[tail(dart)]

  int edge_count() const { return static_cast<int>(edge_ends.size()); }
  int dart_count() const { return 2 * edge_count(); }

  int tail(int d) const { return (d & 1) ? edge_ends[d >> 1].second : edge_ends[d >> 1].first; }
  int head(int d) const { return tail(d ^ 1); }
  static int twin(int d) { return d ^ 1; }
  int degree(int v) const { return static_cast<int>(rotation[v].size()); }

  int rotation_next(int d) const {
    const auto& r = rotation[tail(d)];
    std::size_t i = dart_pos[d] + 1;
    return r[i == r.size() ? 0 : i];
  }
  int rotation_prev(int d) const {
    const auto& r = rotation[tail(d)];
    std::size_t i = dart_pos[d];
    return r[i == 0 ? r.size() - 1 : i - 1];
  }
  /// Next dart along the face walk (face kept on the right).
  int face_successor(int d) const { return rotation_next(twin(d)); }

  std::vector<int> neighbors(int v) const {
    std::vector<int> out;
    out.reserve(rotation[v].size());
    for (int d : rotation[v]) out.push_back(head(d));
    return out;
  }

  void rebuild_positions() {
    dart_pos.assign(dart_count(), -1);
    for (int v = 0; v < vertex_count; v++)
      for (std::size_t i = 0; i < rotation[v].size(); i++) dart_pos[rotation[v][i]] = static_cast<int>(i);
  }

  /// Builds a map from per-vertex neighbor lists (ccw order). The k-th
  /// occurrence of v in u's list pairs with the k-th occurrence of u in v's
  /// list. Throws MalformedRotation when the lists are not an involution.
  static RotationSystem from_neighbor_lists(const std::vector<std::vector<int>>& nbrs) {
    RotationSystem rs;
    rs.vertex_count = static_cast<int>(nbrs.size());
    rs.rotation.assign(rs.vertex_count, {});
    for (int u = 0; u < rs.vertex_count; u++) {
      rs.rotation[u].assign(nbrs[u].size(), -1);
      for (int v : nbrs[u])
        require(v >= 0 && v < rs.vertex_count && v != u, Errc::MalformedRotation,
                "neighbor " + std::to_string(v) + " of " + std::to_string(u) + " out of range");
    }
    // occurrence positions of u within nbrs[v]
    auto occurrences = [&](int v, int u) {
      std::vector<int> pos;
      for (std::size_t i = 0; i < nbrs[v].size(); i++)
        if (nbrs[v][i] == u) pos.push_back(static_cast<int>(i));
      return pos;
    };
    for (int u = 0; u < rs.vertex_count; u++) {
      for (int v = u + 1; v < rs.vertex_count; v++) {
        std::vector<int> pu = occurrences(u, v);
        std::vector<int> pv = occurrences(v, u);
        require(pu.size() == pv.size(), Errc::MalformedRotation,
                "dart counts between " + std::to_string(u) + " and " + std::to_string(v) +
                    " disagree");
        for (std::size_t k = 0; k < pu.size(); k++) {
          int e = rs.edge_count();
          rs.edge_ends.emplace_back(u, v);
          rs.rotation[u][pu[k]] = 2 * e;
          rs.rotation[v][pv[k]] = 2 * e + 1;
        }
      }
    }
    rs.rebuild_positions();
    return rs;
  }

  /// True when no two darts at a vertex share a head and there are no loops.
  bool simple() const {
    for (int v = 0; v < vertex_count; v++) {
      std::vector<int> hs = neighbors(v);
      std::sort(hs.begin(), hs.end());
      if (std::adjacent_find(hs.begin(), hs.end()) != hs.end()) return false;
    }
    return true;
  }

  bool connected() const {
    if (vertex_count <= 1) return true;
    std::vector<char> seen(vertex_count, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int d : rotation[v]) {
        int u = head(d);
        if (!seen[u]) {
          seen[u] = 1;
          reached++;
          q.push(u);
        }
      }
    }
    return reached == vertex_count;
  }

  /// Underlying abstract graph (requires simple()).
  SimpleGraph graph() const {
    SimpleGraph g(vertex_count);
    for (auto [u, v] : edge_ends) g.edges.emplace_back(u, v);
    std::sort(g.edges.begin(), g.edges.end());
    return g;
  }
};

struct FaceWalk {
  std::vector<int> darts;
  int length() const { return static_cast<int>(darts.size()); }
};

/// Face walks of the map, one per orbit of the face successor, in canonical
/// order (each walk starts at its smallest dart; walks sorted by that dart).
inline std::vector<FaceWalk> faces(const RotationSystem& rs) {
  std::vector<char> visited(rs.dart_count(), 0);
  std::vector<FaceWalk> out;
  for (int d0 = 0; d0 < rs.dart_count(); d0++) {
    if (visited[d0]) continue;
    FaceWalk w;
    int d = d0;
    do {
      visited[d] = 1;
      w.darts.push_back(d);
      d = rs.face_successor(d);
    } while (d != d0);
    out.push_back(std::move(w));
  }
  return out;
}

/// dart -> index of its face in faces(rs).
inline std::vector<int> face_of_dart(const RotationSystem& rs, const std::vector<FaceWalk>& fs) {
  std::vector<int> fo(rs.dart_count(), -1);
  for (std::size_t f = 0; f < fs.size(); f++)
    for (int d : fs[f].darts) fo[d] = static_cast<int>(f);
  return fo;
}

/// Euler check per connected component: V - E + F = 2 (edge-free components
/// are trivially embeddable). True iff the map has genus 0 throughout.
inline bool euler_ok(const RotationSystem& rs) {
  int n = rs.vertex_count;
  if (n == 0) return true;
  std::vector<int> comp(n, -1);
  int comps = 0;
  for (int s = 0; s < n; s++) {
    if (comp[s] >= 0) continue;
    std::queue<int> q;
    q.push(s);
    comp[s] = comps;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int d : rs.rotation[v]) {
        int u = rs.head(d);
        if (comp[u] < 0) {
          comp[u] = comps;
          q.push(u);
        }
      }
    }
    comps++;
  }
  std::vector<int> V(comps, 0), E(comps, 0), F(comps, 0);
  for (int v = 0; v < n; v++) V[comp[v]]++;
  for (auto [u, v] : rs.edge_ends) E[comp[u]]++;
  for (const FaceWalk& w : faces(rs)) F[comp[rs.tail(w.darts[0])]]++;
  for (int c = 0; c < comps; c++) {
    if (E[c] == 0) continue;
    if (V[c] - E[c] + F[c] != 2) return false;
  }
  return true;
}

}  // namespace oneplanar
