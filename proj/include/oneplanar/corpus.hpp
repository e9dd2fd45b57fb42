#pragma once

#include <optional>
#include <random>
#include <vector>

#include "oneplanar/construct.hpp"
#include "oneplanar/drawing.hpp"
#include "oneplanar/drawing_ops.hpp"
#include "oneplanar/planarity.hpp"

namespace oneplanar {

// Seeded generators for test corpora: random edge-merge trees of wheel
// drawings and random small valid drawings. Deterministic for a fixed seed.

struct MergeTreeSample {
  OnePlaneDrawing drawing;
  int piece_count = 0;
  std::vector<int> wheel_sizes;  // parameter k of each merged wheel
};

/// Merges `pieces` pseudo-double-wheel drawings (k in [3, max_wheel]) at
/// uniformly chosen uncrossed edges, faces and orientations.
inline MergeTreeSample random_merge_tree(std::mt19937& rng, int pieces, int max_wheel = 6) {
  auto wheel_k = [&]() { return std::uniform_int_distribution<int>(3, max_wheel)(rng); };
  MergeTreeSample s;
  s.piece_count = pieces;
  int k0 = wheel_k();
  s.wheel_sizes.push_back(k0);
  s.drawing = gen_pdw_optimal(k0);
  for (int i = 1; i < pieces; i++) {
    int k = wheel_k();
    s.wheel_sizes.push_back(k);
    OnePlaneDrawing guest = gen_pdw_optimal(k);

    std::vector<Edge> host_edges;
    for (const DrawnEdge& de : drawn_edges(s.drawing))
      if (!de.crossed) host_edges.push_back(de.e);
    std::vector<Edge> guest_edges;
    for (const DrawnEdge& de : drawn_edges(guest))
      if (!de.crossed) guest_edges.push_back(de.e);

    MergeSpec spec;
    spec.host_edge = host_edges[std::uniform_int_distribution<std::size_t>(
        0, host_edges.size() - 1)(rng)];
    spec.guest_edge = guest_edges[std::uniform_int_distribution<std::size_t>(
        0, guest_edges.size() - 1)(rng)];
    spec.identify_lower_with_lower = std::uniform_int_distribution<int>(0, 1)(rng) == 1;
    // pick one of the two faces flanking the host edge
    int idx = -1;
    for (const DrawnEdge& de : drawn_edges(s.drawing))
      if (de.e == spec.host_edge) idx = de.rs_edge;
    std::vector<int> fo = face_of_dart(s.drawing.rs, faces(s.drawing.rs));
    spec.host_face = std::uniform_int_distribution<int>(0, 1)(rng) ? fo[2 * idx] : fo[2 * idx + 1];

    s.drawing = edge_merge(s.drawing, guest, spec).drawing;
  }
  return s;
}

/// Random connected planar embedding on up to max_n vertices: a random tree
/// plus as many shuffled chords as stay planar.
inline OnePlaneDrawing random_planar_drawing(std::mt19937& rng, int max_n, int min_n = 3) {
  int n = std::uniform_int_distribution<int>(min_n, max_n)(rng);
  std::vector<std::pair<int, int>> chosen;
  for (int v = 1; v < n; v++)
    chosen.emplace_back(std::uniform_int_distribution<int>(0, v - 1)(rng), v);
  std::vector<std::pair<int, int>> rest;
  for (int u = 0; u < n; u++)
    for (int v = u + 1; v < n; v++) {
      bool tree_edge = false;
      for (auto [a, b] : chosen)
        if ((a == u && b == v) || (a == v && b == u)) tree_edge = true;
      if (!tree_edge) rest.emplace_back(u, v);
    }
  std::shuffle(rest.begin(), rest.end(), rng);
  double keep = std::uniform_real_distribution<double>(0.3, 1.0)(rng);
  for (auto [u, v] : rest) {
    if (std::uniform_real_distribution<double>(0.0, 1.0)(rng) > keep) continue;
    chosen.emplace_back(u, v);
    if (!is_planar_quick(n, chosen)) chosen.pop_back();
  }
  PlanarityResult pr = is_planar(SimpleGraph::from_edges(n, chosen));
  OnePlaneDrawing d;
  d.rs = *pr.embedding;
  d.kind.assign(n, VertexKind::True);
  return d;
}

/// Random valid drawing with crossings: a random planar embedding plus a few
/// random crossing-mode augmentations (and an occasional full saturation).
inline OnePlaneDrawing random_drawing(std::mt19937& rng, int max_n, int min_n = 3) {
  OnePlaneDrawing d = random_planar_drawing(rng, max_n, min_n);
  int want = std::uniform_int_distribution<int>(0, 4)(rng);
  for (int i = 0; i < want; i++) {
    std::vector<AddableEdge> cands = addable_edges(d);
    std::vector<AddableEdge> crossing;
    for (const AddableEdge& a : cands)
      if (a.mode == AddMode::CrossEdge) crossing.push_back(a);
    if (crossing.empty()) break;
    d = add_edge(d, crossing[std::uniform_int_distribution<std::size_t>(
                        0, crossing.size() - 1)(rng)]);
  }
  if (std::uniform_int_distribution<int>(0, 3)(rng) == 0) d = saturate(d);
  return d;
}

/// Deletes one uniformly chosen uncrossed edge (merged drawings are
/// 2-connected, so the result stays connected and valid).
inline std::optional<OnePlaneDrawing> delete_random_uncrossed_edge(std::mt19937& rng,
                                                                   const OnePlaneDrawing& d) {
  std::vector<Edge> uncrossed;
  for (const DrawnEdge& de : drawn_edges(d))
    if (!de.crossed) uncrossed.push_back(de.e);
  if (uncrossed.empty()) return std::nullopt;
  Edge pick = uncrossed[std::uniform_int_distribution<std::size_t>(0, uncrossed.size() - 1)(rng)];
  return remove_edge(d, pick.u, pick.v);
}

}  // namespace oneplanar
