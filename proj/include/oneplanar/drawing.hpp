#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "oneplanar/graph.hpp"
#include "oneplanar/rational.hpp"
#include "oneplanar/rotation.hpp"

namespace oneplanar {

enum class VertexKind : char { True, Fake };

/// A 1-planar drawing, stored as its planarization: a plane map whose
/// vertices are tagged true (original) or fake (crossing). At a fake vertex
/// with rotation (s0,s1,s2,s3) the two crossing edges are recovered from
/// opposite darts: {s0,s2} and {s1,s3}. This is the single source of truth
/// for a drawing; everything else is derived.
struct OnePlaneDrawing {
  RotationSystem rs;
  std::vector<VertexKind> kind;

  int vertex_count() const { return rs.vertex_count; }
  bool is_fake(int v) const { return kind[v] == VertexKind::Fake; }
  bool is_true(int v) const { return kind[v] == VertexKind::True; }
  int fake_count() const {
    int c = 0;
    for (VertexKind k : kind)
      if (k == VertexKind::Fake) c++;
    return c;
  }
  int true_count() const { return vertex_count() - fake_count(); }
};

enum class ViolationCode {
  FakeDegree,
  FakeFakeAdjacency,
  SharedEndpointCrossing,
  DoubleCrossing,
  NotSimple,
  NotConnected,
  GenusNonZero,
};

inline const char* violation_name(ViolationCode c) {
  switch (c) {
    case ViolationCode::FakeDegree: return "FakeDegree";
    case ViolationCode::FakeFakeAdjacency: return "FakeFakeAdjacency";
    case ViolationCode::SharedEndpointCrossing: return "SharedEndpointCrossing";
    case ViolationCode::DoubleCrossing: return "DoubleCrossing";
    case ViolationCode::NotSimple: return "NotSimple";
    case ViolationCode::NotConnected: return "NotConnected";
    case ViolationCode::GenusNonZero: return "GenusNonZero";
  }
  return "Unknown";
}

struct Violation {
  ViolationCode code;
  std::string detail;
};

/// The crossing realized by fake vertex c, as a pair of recovered edges in
/// drawing-vertex ids. Requires degree 4 at c.
inline std::pair<Edge, Edge> crossing_pair(const OnePlaneDrawing& d, int c) {
  const auto& rot = d.rs.rotation[c];
  int a0 = d.rs.head(rot[0]), a1 = d.rs.head(rot[1]);
  int a2 = d.rs.head(rot[2]), a3 = d.rs.head(rot[3]);
  Edge e1(a0, a2), e2(a1, a3);
  return e1 < e2 ? std::make_pair(e1, e2) : std::make_pair(e2, e1);
}

/// Full invariant check. Returns an empty list iff the drawing is a valid
/// planarization of a good 1-planar drawing of a connected simple graph.
inline std::vector<Violation> validate(const OnePlaneDrawing& d) {
  std::vector<Violation> out;
  const RotationSystem& rs = d.rs;

  if (!rs.connected())
    out.push_back({ViolationCode::NotConnected, "planarization is not connected"});
  else if (!euler_ok(rs))
    out.push_back({ViolationCode::GenusNonZero, "V - E + F != 2"});

  if (!rs.simple())
    out.push_back({ViolationCode::NotSimple, "planarization has parallel edges"});

  bool fakes_ok = true;
  for (int v = 0; v < d.vertex_count(); v++) {
    if (!d.is_fake(v)) continue;
    if (rs.degree(v) != 4) {
      out.push_back({ViolationCode::FakeDegree,
                     "fake vertex " + std::to_string(v) + " has degree " +
                         std::to_string(rs.degree(v))});
      fakes_ok = false;
      continue;
    }
    for (int u : rs.neighbors(v))
      if (d.is_fake(u)) {
        out.push_back({ViolationCode::FakeFakeAdjacency,
                       "fake vertices " + std::to_string(v) + " and " + std::to_string(u) +
                           " are adjacent"});
        fakes_ok = false;
      }
  }

  if (fakes_ok) {
    std::vector<Edge> multiset;
    std::map<std::pair<Edge, Edge>, int> pair_seen;
    for (int v = 0; v < d.vertex_count(); v++) {
      if (d.is_fake(v)) {
        auto [e1, e2] = crossing_pair(d, v);
        if (e1.u == e1.v || e2.u == e2.v) {
          out.push_back({ViolationCode::NotSimple,
                         "fake vertex " + std::to_string(v) + " recovers a loop"});
          continue;
        }
        if (!e1.independent_of(e2))
          out.push_back({ViolationCode::SharedEndpointCrossing,
                         "crossing at " + std::to_string(v) + " joins adjacent edges"});
        auto key = std::make_pair(e1, e2);
        if (pair_seen.count(key))
          out.push_back({ViolationCode::DoubleCrossing,
                         "edges (" + std::to_string(e1.u) + "," + std::to_string(e1.v) +
                             ") and (" + std::to_string(e2.u) + "," + std::to_string(e2.v) +
                             ") cross at " + std::to_string(pair_seen[key]) + " and " +
                             std::to_string(v)});
        else {
          pair_seen[key] = v;
          multiset.push_back(e1);
          multiset.push_back(e2);
        }
      } else {
        for (int d2 : rs.rotation[v]) {
          int u = rs.head(d2);
          if (!d.is_fake(u) && v < u) multiset.emplace_back(v, u);
        }
      }
    }
    std::sort(multiset.begin(), multiset.end());
    for (std::size_t i = 0; i + 1 < multiset.size(); i++)
      if (multiset[i] == multiset[i + 1])
        out.push_back({ViolationCode::NotSimple,
                       "recovered graph repeats edge (" + std::to_string(multiset[i].u) + "," +
                           std::to_string(multiset[i].v) + ")"});
  }

  return out;
}

inline bool is_valid(const OnePlaneDrawing& d) { return validate(d).empty(); }

inline void require_valid(const OnePlaneDrawing& d) {
  auto v = validate(d);
  if (!v.empty()) fail(Errc::InvalidDrawing, std::string(violation_name(v[0].code)) + " - " + v[0].detail);
}

/// Number of crossings in the drawing (= fake vertices).
inline int crossing_count(const OnePlaneDrawing& d) { return d.fake_count(); }

/// True vertex ids in increasing order; position = compact id in the
/// underlying graph.
inline std::vector<int> true_ids(const OnePlaneDrawing& d) {
  std::vector<int> out;
  for (int v = 0; v < d.vertex_count(); v++)
    if (d.is_true(v)) out.push_back(v);
  return out;
}

/// drawing id -> compact underlying id (-1 for fakes).
inline std::vector<int> true_index_map(const OnePlaneDrawing& d) {
  std::vector<int> map(d.vertex_count(), -1);
  int next = 0;
  for (int v = 0; v < d.vertex_count(); v++)
    if (d.is_true(v)) map[v] = next++;
  return map;
}

/// One underlying edge of the drawn graph, in drawing-vertex ids.
struct DrawnEdge {
  Edge e;             // endpoints (drawing ids, both true)
  bool crossed;       // crossed by another edge?
  int fake = -1;      // the crossing vertex when crossed
  int rs_edge = -1;   // rotation-system edge index when uncrossed
};

/// All underlying edges with their realization, sorted by endpoints.
/// Requires a valid drawing.
inline std::vector<DrawnEdge> drawn_edges(const OnePlaneDrawing& d) {
  std::vector<DrawnEdge> out;
  for (int v = 0; v < d.vertex_count(); v++) {
    if (d.is_fake(v)) {
      auto [e1, e2] = crossing_pair(d, v);
      out.push_back({e1, true, v, -1});
      out.push_back({e2, true, v, -1});
    }
  }
  for (int e = 0; e < d.rs.edge_count(); e++) {
    auto [u, v] = d.rs.edge_ends[e];
    if (d.is_true(u) && d.is_true(v)) out.push_back({Edge(u, v), false, -1, e});
  }
  std::sort(out.begin(), out.end(), [](const DrawnEdge& a, const DrawnEdge& b) { return a.e < b.e; });
  return out;
}

/// The drawn graph: true vertices (compacted) plus recovered edges.
inline SimpleGraph underlying_graph(const OnePlaneDrawing& d) {
  std::vector<int> map = true_index_map(d);
  SimpleGraph g(d.true_count());
  for (const DrawnEdge& de : drawn_edges(d)) g.edges.emplace_back(map[de.e.u], map[de.e.v]);
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

// ---------------------------------------------------------------------------
// Face census
// ---------------------------------------------------------------------------

struct FaceInfo {
  std::vector<int> boundary;  // vertex walk (drawing ids, with repetitions)
  int size = 0;               // distinct boundary vertices
  int eps = 0;                // distinct true vertices on the boundary
  bool is_odd = false;        // eps parity
};

inline std::vector<FaceInfo> face_census(const OnePlaneDrawing& d) {
  std::vector<FaceInfo> out;
  for (const FaceWalk& w : faces(d.rs)) {
    FaceInfo info;
    for (int dart : w.darts) info.boundary.push_back(d.rs.tail(dart));
    std::set<int> distinct(info.boundary.begin(), info.boundary.end());
    info.size = static_cast<int>(distinct.size());
    for (int v : distinct)
      if (d.is_true(v)) info.eps++;
    info.is_odd = info.eps % 2 == 1;
    out.push_back(std::move(info));
  }
  return out;
}

/// Crossing count recomputed from the face census alone:
/// n - 2 - (1/2) * sum over faces of (eps(F) - 2). Independent of
/// crossing_count; the two agree exactly on valid drawings. Throws
/// NonIntegerSum when the face sum is odd (an invalid drawing).
inline int crossings_from_face_census(const OnePlaneDrawing& d) {
  int sum = 0;
  for (const FaceInfo& f : face_census(d)) sum += f.eps - 2;
  require(sum % 2 == 0, Errc::NonIntegerSum, "face census sum is odd");
  return d.true_count() - 2 - sum / 2;
}

/// Number of faces with odd eps; even for every valid drawing.
inline int odd_face_count(const OnePlaneDrawing& d) {
  int c = 0;
  for (const FaceInfo& f : face_census(d))
    if (f.is_odd) c++;
  return c;
}

// ---------------------------------------------------------------------------
// Degree statistics and the degree-based crossing bound
// ---------------------------------------------------------------------------

struct DegreeStats {
  int lambda1 = 0;  // vertices of degree 2
  int lambda2 = 0;  // vertices of degree 4
  int lambda3 = 0;  // vertices of odd degree
  std::vector<int> histogram;  // histogram[d] = number of vertices of degree d
};

inline DegreeStats degree_stats(const SimpleGraph& g) {
  DegreeStats s;
  std::vector<int> deg = g.degrees();
  int maxdeg = 0;
  for (int d : deg) maxdeg = std::max(maxdeg, d);
  s.histogram.assign(maxdeg + 1, 0);
  for (int d : deg) {
    s.histogram[d]++;
    if (d == 2) s.lambda1++;
    if (d == 4) s.lambda2++;
    if (d % 2 == 1) s.lambda3++;
  }
  return s;
}

/// n - 2 - (2*lambda1 + 2*lambda2 + lambda3)/6, as an exact rational.
inline Rational degree_based_crossing_bound(const SimpleGraph& g) {
  DegreeStats s = degree_stats(g);
  return Rational(g.n - 2) - Rational(2 * s.lambda1 + 2 * s.lambda2 + s.lambda3, 6);
}

}  // namespace oneplanar
