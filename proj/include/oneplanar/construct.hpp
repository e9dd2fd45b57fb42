#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "oneplanar/canonical.hpp"
#include "oneplanar/connectivity.hpp"
#include "oneplanar/drawing.hpp"
#include "oneplanar/drawing_ops.hpp"
#include "oneplanar/graph.hpp"

namespace oneplanar {

// ---------------------------------------------------------------------------
// Generators
// ---------------------------------------------------------------------------

/// Crossing-maximal drawing on n = 2k+2 vertices built from the pseudo double
/// wheel quadrangulation: an even cycle c0..c_{2k-1}, an inner hub adjacent to
/// even cycle vertices, an outer hub adjacent to odd ones, and both diagonals
/// of every quadrilateral face inserted as a crossing pair. The result has
/// m = 8k = 4n-8 edges, 2k crossings, and all degrees even.
///
/// Vertex ids: cycle 0..2k-1, inner hub 2k, outer hub 2k+1, then the k inner
/// crossing vertices and the k outer ones.
inline OnePlaneDrawing gen_pdw_optimal(int k) {
  require(k >= 3, Errc::BadParameter, "pseudo double wheel needs k >= 3");
  const int a = 2 * k;      // inner hub
  const int b = 2 * k + 1;  // outer hub
  auto cyc = [&](int i) { return ((i % (2 * k)) + 2 * k) % (2 * k); };
  auto fin = [&](int i) { return 2 * k + 2 + ((i % k) + k) % k; };      // inner fake i
  auto fout = [&](int i) { return 3 * k + 2 + ((i % k) + k) % k; };     // outer fake i

  std::vector<std::vector<int>> nl(4 * k + 2);
  // inner hub: spokes to even cycle vertices interleaved with inner fakes
  for (int i = 0; i < k; i++) {
    nl[a].push_back(cyc(2 * i));
    nl[a].push_back(fin(i));
  }
  // outer hub: viewed from outside, the cyclic order reverses
  nl[b].push_back(cyc(1));
  nl[b].push_back(fout(0));
  for (int j = k - 1; j >= 1; j--) {
    nl[b].push_back(cyc(2 * j + 1));
    nl[b].push_back(fout(j));
  }
  for (int i = 0; i < k; i++) {
    nl[cyc(2 * i)] = {fout(i), cyc(2 * i + 1), fin(i), a, fin(i - 1), cyc(2 * i - 1)};
    nl[cyc(2 * i + 1)] = {b, fout(i + 1), cyc(2 * i + 2), fin(i), cyc(2 * i), fout(i)};
    nl[fin(i)] = {cyc(2 * i + 1), cyc(2 * i + 2), a, cyc(2 * i)};
    nl[fout(i)] = {b, cyc(2 * i + 1), cyc(2 * i), cyc(2 * i - 1)};
  }

  OnePlaneDrawing d;
  d.rs = RotationSystem::from_neighbor_lists(nl);
  d.kind.assign(4 * k + 2, VertexKind::True);
  for (int i = 2 * k + 2; i < 4 * k + 2; i++) d.kind[i] = VertexKind::Fake;
  require_valid(d);
  return d;
}

/// The smallest crossing-maximal drawing: gen_pdw_optimal(3), whose drawn
/// graph is (and is checked to be) K_{2,2,2,2}.
inline OnePlaneDrawing gen_k2222() {
  OnePlaneDrawing d = gen_pdw_optimal(3);
  require(isomorphic(underlying_graph(d), complete_multipartite({2, 2, 2, 2})),
          Errc::InvalidDrawing, "k=3 wheel is not K_{2,2,2,2}");
  return d;
}

/// Inserts a crossing diagonal pair into every quadrilateral face of a
/// simple 3-connected genus-0 quadrangulation. Input path for optimal
/// drawings the built-in family does not reach (odd orders in particular).
inline OnePlaneDrawing from_quadrangulation(const RotationSystem& rs) {
  require(rs.simple() && rs.connected() && euler_ok(rs), Errc::NotQuadrangulation,
          "input is not a connected genus-0 simple embedding");
  std::vector<FaceWalk> fs = faces(rs);
  for (const FaceWalk& w : fs)
    require(w.length() == 4, Errc::NotQuadrangulation,
            "face of length " + std::to_string(w.length()));
  require(connectivity(rs.graph()) >= 3, Errc::NotThreeConnected,
          "quadrangulation must be 3-connected");

  std::vector<std::vector<int>> nl(rs.vertex_count);
  for (int v = 0; v < rs.vertex_count; v++) nl[v] = rs.neighbors(v);
  // collect corner insertions first; positions refer to the original lists
  std::vector<std::vector<std::pair<int, int>>> inserts(rs.vertex_count);  // (pos, new nbr)
  int next = rs.vertex_count;
  for (const FaceWalk& w : fs) {
    int c = next++;
    std::vector<int> around;
    for (int dart : w.darts) {
      around.push_back(rs.tail(dart));
      inserts[rs.tail(dart)].emplace_back(rs.dart_pos[dart], c);
    }
    // face walks run clockwise around the face, so the crossing vertex sees
    // the boundary counterclockwise in reverse walk order
    std::reverse(around.begin(), around.end());
    nl.push_back(around);
  }
  for (int v = 0; v < rs.vertex_count; v++) {
    auto& ins = inserts[v];
    std::sort(ins.begin(), ins.end(), [](auto& x, auto& y) { return x.first > y.first; });
    for (auto [pos, c] : ins) nl[v].insert(nl[v].begin() + pos, c);
  }

  OnePlaneDrawing d;
  d.rs = RotationSystem::from_neighbor_lists(nl);
  d.kind.assign(next, VertexKind::True);
  for (int v = rs.vertex_count; v < next; v++) d.kind[v] = VertexKind::Fake;
  require_valid(d);
  return d;
}

/// The plane quadrangulation underlying gen_pdw_optimal(k), exposed for
/// feeding from_quadrangulation and for tests.
inline RotationSystem pdw_quadrangulation(int k) {
  require(k >= 3, Errc::BadParameter, "pseudo double wheel needs k >= 3");
  const int a = 2 * k, b = 2 * k + 1;
  auto cyc = [&](int i) { return ((i % (2 * k)) + 2 * k) % (2 * k); };
  std::vector<std::vector<int>> nl(2 * k + 2);
  for (int i = 0; i < k; i++) nl[a].push_back(cyc(2 * i));
  nl[b].push_back(cyc(1));
  for (int j = k - 1; j >= 1; j--) nl[b].push_back(cyc(2 * j + 1));
  for (int i = 0; i < k; i++) {
    nl[cyc(2 * i)] = {cyc(2 * i + 1), a, cyc(2 * i - 1)};
    nl[cyc(2 * i + 1)] = {b, cyc(2 * i + 2), cyc(2 * i)};
  }
  return RotationSystem::from_neighbor_lists(nl);
}

// ---------------------------------------------------------------------------
// Edge merging
// ---------------------------------------------------------------------------

/// Parameters of an edge merge. Both edges must be uncrossed in their
/// drawings. host_face picks which of the <= 2 faces of the host drawing
/// incident to host_edge receives the guest (-1 = the lowest face id);
/// the orientation flag says which guest endpoint lands on which host
/// endpoint (endpoints compared by id).
struct MergeSpec {
  Edge host_edge;
  Edge guest_edge;
  int host_face = -1;
  bool identify_lower_with_lower = true;
};

struct MergeResult {
  OnePlaneDrawing drawing;
  std::vector<int> guest_to_merged;  // guest drawing id -> merged drawing id
};

namespace detail {

inline DrawnEdge find_uncrossed(const OnePlaneDrawing& d, Edge e, const char* role) {
  for (const DrawnEdge& de : drawn_edges(d)) {
    if (!(de.e == e)) continue;
    require(!de.crossed, Errc::CrossingEdgeChosen,
            std::string(role) + " edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                ") is a crossing edge");
    return de;
  }
  fail(Errc::EdgeAbsent, std::string(role) + " edge (" + std::to_string(e.u) + "," +
                             std::to_string(e.v) + ") not present");
}

}  // namespace detail

/// Glues the guest drawing into a face of the host along a shared edge: the
/// guest is inserted inside the chosen host face and guest_edge is identified
/// with host_edge. Sizes compose as n = n1+n2-2, m = m1+m2-1, and crossings
/// add; the identified endpoints get degree d1+d2-1.
inline MergeResult edge_merge(const OnePlaneDrawing& host, const OnePlaneDrawing& guest,
                              const MergeSpec& spec) {
  DrawnEdge he = detail::find_uncrossed(host, spec.host_edge, "host");
  detail::find_uncrossed(guest, spec.guest_edge, "guest");  // rejects crossing/absent edges

  std::vector<FaceWalk> hf = faces(host.rs);
  std::vector<int> hfo = face_of_dart(host.rs, hf);
  int d0 = 2 * he.rs_edge, d1 = d0 + 1;
  int host_face = spec.host_face;
  if (host_face < 0) host_face = std::min(hfo[d0], hfo[d1]);
  require(hfo[d0] == host_face || hfo[d1] == host_face, Errc::FaceNotIncident,
          "host face " + std::to_string(host_face) + " is not incident to the host edge");
  int DH = (hfo[d0] == host_face) ? d0 : d1;
  int uh = host.rs.tail(DH), vh = host.rs.head(DH);

  // guest endpoints mapped onto (uh, vh) per the orientation flag
  int gu = spec.guest_edge.u, gv = spec.guest_edge.v;  // gu < gv
  int hu = spec.host_edge.u;                           // hu < hv
  int map_to_uh, map_to_vh;
  bool uh_is_lower_host = (uh == hu);
  bool guest_lower_to_uh = (spec.identify_lower_with_lower == uh_is_lower_host);
  if (guest_lower_to_uh) {
    map_to_uh = gu;
    map_to_vh = gv;
  } else {
    map_to_uh = gv;
    map_to_vh = gu;
  }

  // id map for guest vertices
  int n1 = host.vertex_count();
  std::vector<int> gmap(guest.vertex_count(), -1);
  gmap[map_to_uh] = uh;
  gmap[map_to_vh] = vh;
  int next = n1;
  for (int v = 0; v < guest.vertex_count(); v++)
    if (gmap[v] < 0) gmap[v] = next++;

  std::vector<std::vector<int>> nl(next);
  std::vector<VertexKind> kinds(next, VertexKind::True);
  for (int v = 0; v < n1; v++) {
    nl[v] = host.rs.neighbors(v);
    kinds[v] = host.kind[v];
  }
  for (int v = 0; v < guest.vertex_count(); v++) {
    if (v == map_to_uh || v == map_to_vh) continue;
    std::vector<int> nb = guest.rs.neighbors(v);
    for (int& x : nb) x = gmap[x];
    nl[gmap[v]] = std::move(nb);
    kinds[gmap[v]] = guest.kind[v];
  }

  // Splice the guest rotations at the identified endpoints. The chosen host
  // face lies to the right of DH = (uh -> vh); the guest lands inside it when
  // its remainder rotations go immediately BEFORE DH at uh and immediately
  // AFTER the twin dart at vh (counterclockwise positions).
  auto remainder_after_edge = [&](int gvertex, int other) {
    std::vector<int> nb = guest.rs.neighbors(gvertex);
    auto it = std::find(nb.begin(), nb.end(), other);
    std::rotate(nb.begin(), it, nb.end());
    nb.erase(nb.begin());  // drop the guest edge itself; the host edge replaces it
    for (int& x : nb) x = gmap[x];
    return nb;
  };
  std::vector<int> at_u = remainder_after_edge(map_to_uh, map_to_vh);
  std::vector<int> at_v = remainder_after_edge(map_to_vh, map_to_uh);
  int pos_u = host.rs.dart_pos[DH];
  int pos_v = host.rs.dart_pos[RotationSystem::twin(DH)];
  nl[uh].insert(nl[uh].begin() + pos_u, at_u.begin(), at_u.end());
  nl[vh].insert(nl[vh].begin() + pos_v + 1, at_v.begin(), at_v.end());

  MergeResult res;
  res.drawing.rs = RotationSystem::from_neighbor_lists(nl);
  res.drawing.kind = std::move(kinds);
  res.guest_to_merged = std::move(gmap);
  require_valid(res.drawing);
  return res;
}

/// Deterministic default: lowest uncrossed edge on each side, lowest host
/// face, lower endpoints identified.
inline MergeSpec default_merge_spec(const OnePlaneDrawing& host, const OnePlaneDrawing& guest) {
  MergeSpec spec;
  auto first_uncrossed = [](const OnePlaneDrawing& d) {
    for (const DrawnEdge& de : drawn_edges(d))
      if (!de.crossed) return de.e;
    fail(Errc::EdgeAbsent, "drawing has no uncrossed edge");
  };
  spec.host_edge = first_uncrossed(host);
  spec.guest_edge = first_uncrossed(guest);
  return spec;
}

/// Quasi-optimal drawing on n vertices with exactly two odd-degree vertices:
/// the edge merge of two pseudo-double-wheel drawings with n1 + n2 - 2 = n.
/// The built-in family reaches n = 14 and all even n >= 16.
inline OnePlaneDrawing gen_odd_pair(int n) {
  require(n % 2 == 0 && n >= 14, Errc::BadParameter,
          "built-in family needs even n >= 14 (got " + std::to_string(n) + ")");
  OnePlaneDrawing g1 = gen_pdw_optimal(3);
  OnePlaneDrawing g2 = gen_pdw_optimal((n - 8) / 2);
  return edge_merge(g1, g2, default_merge_spec(g1, g2)).drawing;
}

// ---------------------------------------------------------------------------
// Recognition
// ---------------------------------------------------------------------------

/// Maximal with m = 4n-8 (n >= 8): the edge-count-extremal drawings.
inline bool is_optimal(const OnePlaneDrawing& d) {
  SimpleGraph g = underlying_graph(d);
  return g.n >= 8 && g.m() == 4 * g.n - 8 && is_maximal(d);
}

enum class QuasiReason { None, NotMaximal, CrossingDeficit };

struct QuasiVerdict {
  bool quasi = false;
  QuasiReason reason = QuasiReason::None;
  int deficit = 0;  // n - 2 - crossings when reason == CrossingDeficit
  explicit operator bool() const { return quasi; }
};

/// Recognition by the crossing count: a maximal drawing is quasi-optimal
/// exactly when its crossings reach n - 2. decompose() provides the
/// independent structural certificate.
inline QuasiVerdict is_quasi_optimal(const OnePlaneDrawing& d) {
  QuasiVerdict v;
  int n = d.true_count();
  require(n >= 3, Errc::BadParameter, "needs at least 3 vertices");
  if (!is_maximal(d)) {
    v.reason = QuasiReason::NotMaximal;
    return v;
  }
  int cr = crossing_count(d);
  if (cr != n - 2) {
    v.reason = QuasiReason::CrossingDeficit;
    v.deficit = n - 2 - cr;
    return v;
  }
  v.quasi = true;
  return v;
}

}  // namespace oneplanar
