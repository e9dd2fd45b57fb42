#pragma once

#include <algorithm>
#include <queue>
#include <utility>
#include <vector>

#include "oneplanar/construct.hpp"
#include "oneplanar/drawing.hpp"
#include "oneplanar/graph.hpp"

namespace oneplanar {

/// A quasi-optimal drawing decomposed into its generating pieces: every piece
/// is an optimal drawing, pieces pairwise share at most one edge, and the
/// piece-sharing relation forms a tree with piece_count-1 links.
struct Decomposition {
  struct SharedEdge {
    int piece_a = -1, piece_b = -1;
    int orig_u = -1, orig_v = -1;  // endpoints in the original drawing's ids
  };

  std::vector<OnePlaneDrawing> pieces;
  std::vector<std::vector<int>> piece_to_orig;  // piece-local vertex -> original id
  std::vector<SharedEdge> shared_edges;

  int piece_count() const { return static_cast<int>(pieces.size()); }

  /// The associated graph on piece indices (one vertex per piece, one edge
  /// per shared merge edge).
  SimpleGraph tree() const {
    SimpleGraph t(piece_count());
    for (const SharedEdge& s : shared_edges) t.edges.emplace_back(s.piece_a, s.piece_b);
    std::sort(t.edges.begin(), t.edges.end());
    return t;
  }
};

namespace detail {

// Components of the planarization with {u,v} removed.
inline std::vector<std::vector<int>> split_components(const RotationSystem& rs, int u, int v) {
  std::vector<int> comp(rs.vertex_count, -1);
  comp[u] = comp[v] = -2;
  std::vector<std::vector<int>> out;
  for (int s = 0; s < rs.vertex_count; s++) {
    if (comp[s] != -1) continue;
    out.emplace_back();
    std::queue<int> q;
    q.push(s);
    comp[s] = static_cast<int>(out.size()) - 1;
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      out.back().push_back(x);
      for (int d : rs.rotation[x]) {
        int y = rs.head(d);
        if (comp[y] == -1) {
          comp[y] = comp[x];
          q.push(y);
        }
      }
    }
  }
  return out;
}

// Restriction of the drawing to side + {u,v}, keeping the uv edge. Vertex ids
// are compacted in increasing original order; orig_map receives the mapping.
inline OnePlaneDrawing restrict_side(const OnePlaneDrawing& d, const std::vector<int>& side,
                                     int u, int v, std::vector<int>& orig_map) {
  std::vector<int> verts = side;
  verts.push_back(u);
  verts.push_back(v);
  std::sort(verts.begin(), verts.end());
  std::vector<int> local(d.vertex_count(), -1);
  for (std::size_t i = 0; i < verts.size(); i++) local[verts[i]] = static_cast<int>(i);

  std::vector<std::vector<int>> nl(verts.size());
  std::vector<VertexKind> kinds(verts.size());
  for (std::size_t i = 0; i < verts.size(); i++) {
    int w = verts[i];
    kinds[i] = d.kind[w];
    for (int nb : d.rs.neighbors(w)) {
      if (local[nb] < 0) continue;                    // other side
      if ((w == u && nb == v) || (w == v && nb == u))  // the shared edge stays
        nl[i].push_back(local[nb]);
      else if (w != u && w != v)
        nl[i].push_back(local[nb]);
      else if (nb != u && nb != v)
        nl[i].push_back(local[nb]);
    }
  }
  // at u and v only darts into this side (or each other) survived; elsewhere
  // rotations are untouched
  OnePlaneDrawing out;
  out.rs = RotationSystem::from_neighbor_lists(nl);
  out.kind = std::move(kinds);
  orig_map = verts;
  return out;
}

struct DecomposeWorker {
  Decomposition result;

  // Returns the indices of the pieces the sub-drawing decomposed into.
  std::vector<int> run(const OnePlaneDrawing& d, const std::vector<int>& orig_map) {
    if (is_optimal(d)) {
      result.pieces.push_back(d);
      result.piece_to_orig.push_back(orig_map);
      return {result.piece_count() - 1};
    }
    // search uncrossed edges for one whose endpoints split the planarization
    for (const DrawnEdge& de : drawn_edges(d)) {
      if (de.crossed) continue;
      auto comps = split_components(d.rs, de.e.u, de.e.v);
      if (comps.size() < 2) continue;

      int orig_u = orig_map[de.e.u], orig_v = orig_map[de.e.v];
      std::vector<std::vector<int>> side_pieces;
      for (const auto& side : comps) {
        std::vector<int> sub_orig;
        OnePlaneDrawing piece = restrict_side(d, side, de.e.u, de.e.v, sub_orig);
        require(is_valid(piece), Errc::DecompositionFailure,
                "splitting at (" + std::to_string(orig_u) + "," + std::to_string(orig_v) +
                    ") does not produce clean sub-drawings");
        for (int& x : sub_orig) x = orig_map[x];
        side_pieces.push_back(run(piece, sub_orig));
      }
      // link the sides through the pieces that retained the shared edge
      auto carrier = [&](const std::vector<int>& pieces_of_side) {
        for (int p : pieces_of_side) {
          const auto& om = result.piece_to_orig[p];
          for (const DrawnEdge& pe : drawn_edges(result.pieces[p])) {
            Edge oe(om[pe.e.u], om[pe.e.v]);
            if (oe == Edge(orig_u, orig_v)) return p;
          }
        }
        fail(Errc::DecompositionFailure, "no piece retained the shared edge");
      };
      int hub = carrier(side_pieces[0]);
      std::vector<int> all = side_pieces[0];
      for (std::size_t s = 1; s < side_pieces.size(); s++) {
        result.shared_edges.push_back({hub, carrier(side_pieces[s]), orig_u, orig_v});
        all.insert(all.end(), side_pieces[s].begin(), side_pieces[s].end());
      }
      return all;
    }
    fail(Errc::DecompositionFailure, "no splitting edge and the drawing is not optimal");
  }
};

}  // namespace detail

/// Splits a quasi-optimal drawing along its uncrossed separating edges until
/// every piece is optimal. Throws DecompositionFailure when the input is not
/// quasi-optimal: exactly the inputs whose splitting stalls on a non-optimal
/// piece.
inline Decomposition decompose(const OnePlaneDrawing& d) {
  require(is_quasi_optimal(d).quasi, Errc::DecompositionFailure,
          "input drawing is not quasi-optimal");
  std::vector<int> identity(d.vertex_count());
  for (int i = 0; i < d.vertex_count(); i++) identity[i] = i;
  detail::DecomposeWorker w;
  w.run(d, identity);
  return std::move(w.result);
}

/// Folds a decomposition back into one drawing with edge_merge over the tree.
/// The result preserves n, m, the crossing count, and the drawn graph's
/// isomorphism class; the drawing itself may differ in host-face choices.
inline OnePlaneDrawing recompose(const Decomposition& dec) {
  require(dec.piece_count() >= 1, Errc::BadParameter, "empty decomposition");
  if (dec.piece_count() == 1) return dec.pieces[0];

  std::vector<std::vector<std::pair<int, int>>> adj(dec.piece_count());  // (other, shared idx)
  for (std::size_t i = 0; i < dec.shared_edges.size(); i++) {
    const auto& s = dec.shared_edges[i];
    adj[s.piece_a].emplace_back(s.piece_b, static_cast<int>(i));
    adj[s.piece_b].emplace_back(s.piece_a, static_cast<int>(i));
  }

  OnePlaneDrawing acc = dec.pieces[0];
  std::vector<int> orig_to_acc;  // original id -> id in acc (true vertices suffice)
  {
    int maxid = 0;
    for (const auto& om : dec.piece_to_orig)
      for (int x : om) maxid = std::max(maxid, x);
    orig_to_acc.assign(maxid + 1, -1);
  }
  for (std::size_t i = 0; i < dec.piece_to_orig[0].size(); i++)
    orig_to_acc[dec.piece_to_orig[0][i]] = static_cast<int>(i);

  std::vector<char> done(dec.piece_count(), 0);
  done[0] = 1;
  std::queue<int> q;
  q.push(0);
  while (!q.empty()) {
    int p = q.front();
    q.pop();
    for (auto [other, sidx] : adj[p]) {
      if (done[other]) continue;
      const auto& s = dec.shared_edges[sidx];
      const auto& om = dec.piece_to_orig[other];
      int hu = orig_to_acc[s.orig_u], hv = orig_to_acc[s.orig_v];
      int gu = -1, gv = -1;
      for (std::size_t i = 0; i < om.size(); i++) {
        if (om[i] == s.orig_u) gu = static_cast<int>(i);
        if (om[i] == s.orig_v) gv = static_cast<int>(i);
      }
      require(hu >= 0 && hv >= 0 && gu >= 0 && gv >= 0, Errc::DecompositionFailure,
              "shared edge endpoints missing from pieces");
      MergeSpec spec;
      spec.host_edge = Edge(hu, hv);
      spec.guest_edge = Edge(gu, gv);
      // identify original identities, not raw id order
      spec.identify_lower_with_lower = ((gu < gv) == (hu < hv));
      MergeResult mr = edge_merge(acc, dec.pieces[other], spec);
      acc = std::move(mr.drawing);
      for (std::size_t i = 0; i < om.size(); i++) orig_to_acc[om[i]] = mr.guest_to_merged[i];
      done[other] = 1;
      q.push(other);
    }
  }
  return acc;
}

}  // namespace oneplanar
