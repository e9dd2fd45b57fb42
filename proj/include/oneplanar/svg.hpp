#pragma once

#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "oneplanar/drawing.hpp"
#include "oneplanar/errors.hpp"
#include "oneplanar/rotation.hpp"

namespace oneplanar {

// Best-effort straight-line rendering of the planarization. The one hard
// guarantee: in the emitted coordinates, sorting each vertex's neighbors by
// angle (atan2 convention) reproduces the drawing's rotation system. Layout
// is barycentric with the largest face pinned as the outer polygon; when the
// plain solve degenerates (merged drawings collapse one side onto the shared
// edge), every interior face is first stellated with a helper apex, which
// turns the graph into a triangulated disk and makes the solve an embedding.

struct Layout {
  std::vector<double> x, y;
};

namespace detail {

// Dense Gaussian elimination with partial pivoting; two right-hand sides.
inline bool solve_linear(std::vector<std::vector<double>>& a, std::vector<double>& bx,
                         std::vector<double>& by) {
  int n = static_cast<int>(a.size());
  for (int col = 0; col < n; col++) {
    int piv = col;
    for (int r = col + 1; r < n; r++)
      if (std::fabs(a[r][col]) > std::fabs(a[piv][col])) piv = r;
    if (std::fabs(a[piv][col]) < 1e-12) return false;
    std::swap(a[piv], a[col]);
    std::swap(bx[piv], bx[col]);
    std::swap(by[piv], by[col]);
    for (int r = 0; r < n; r++) {
      if (r == col) continue;
      double f = a[r][col] / a[col][col];
      if (f == 0.0) continue;
      for (int c = col; c < n; c++) a[r][c] -= f * a[col][c];
      bx[r] -= f * bx[col];
      by[r] -= f * by[col];
    }
  }
  for (int i = 0; i < n; i++) {
    bx[i] /= a[i][i];
    by[i] /= a[i][i];
  }
  return true;
}

enum class ChiralityCheck { Match, Reversed, Fail };

inline ChiralityCheck rotations_match(const RotationSystem& rs, const Layout& pos) {
  bool all_fwd = true, all_rev = true;
  for (int v = 0; v < rs.vertex_count; v++) {
    int deg = rs.degree(v);
    if (deg <= 2) continue;
    std::vector<std::pair<double, int>> ang;
    for (int d : rs.rotation[v]) {
      int u = rs.head(d);
      ang.emplace_back(std::atan2(pos.y[u] - pos.y[v], pos.x[u] - pos.x[v]), u);
    }
    std::sort(ang.begin(), ang.end());
    for (std::size_t i = 0; i + 1 < ang.size(); i++)
      if (ang[i + 1].first - ang[i].first < 1e-9) return ChiralityCheck::Fail;
    std::vector<int> by_angle;
    for (auto& [a, u] : ang) by_angle.push_back(u);
    std::vector<int> stored = rs.neighbors(v);
    auto cyclic_equal = [](const std::vector<int>& a, const std::vector<int>& b) {
      if (a.size() != b.size()) return false;
      for (std::size_t off = 0; off < a.size(); off++) {
        bool ok = true;
        for (std::size_t i = 0; i < a.size() && ok; i++)
          if (a[(i + off) % a.size()] != b[i]) ok = false;
        if (ok) return true;
      }
      return false;
    };
    if (!cyclic_equal(by_angle, stored)) all_fwd = false;
    std::reverse(by_angle.begin(), by_angle.end());
    if (!cyclic_equal(by_angle, stored)) all_rev = false;
    if (!all_fwd && !all_rev) return ChiralityCheck::Fail;
  }
  if (all_fwd) return ChiralityCheck::Match;
  if (all_rev) return ChiralityCheck::Reversed;
  return ChiralityCheck::Fail;
}

inline std::optional<Layout> try_barycentric(const RotationSystem& original, bool stellate) {
  std::vector<FaceWalk> fs = faces(original);
  if (fs.empty()) return std::nullopt;
  // outer face: most distinct vertices, lowest index on ties; must be simple
  int outer = -1, best = -1;
  for (std::size_t f = 0; f < fs.size(); f++) {
    std::vector<int> vs;
    for (int d : fs[f].darts) vs.push_back(original.tail(d));
    std::sort(vs.begin(), vs.end());
    bool simple_walk = std::adjacent_find(vs.begin(), vs.end()) == vs.end();
    if (simple_walk && static_cast<int>(vs.size()) > best) {
      best = static_cast<int>(vs.size());
      outer = static_cast<int>(f);
    }
  }
  if (outer < 0) return std::nullopt;

  std::vector<std::vector<int>> nl(original.vertex_count);
  for (int v = 0; v < original.vertex_count; v++) nl[v] = original.neighbors(v);
  if (stellate) {
    std::vector<std::vector<std::pair<int, int>>> inserts(original.vertex_count);
    for (std::size_t f = 0; f < fs.size(); f++) {
      if (static_cast<int>(f) == outer) continue;
      int apex = static_cast<int>(nl.size());
      std::vector<int> around;
      for (int d : fs[f].darts) {
        around.push_back(original.tail(d));
        inserts[original.tail(d)].emplace_back(original.dart_pos[d], apex);
      }
      std::reverse(around.begin(), around.end());  // apex sees the walk ccw
      nl.push_back(around);
    }
    for (int v = 0; v < original.vertex_count; v++) {
      auto& ins = inserts[v];
      std::sort(ins.begin(), ins.end(), [](auto& a, auto& b) { return a.first > b.first; });
      for (auto [p, apex] : ins) nl[v].insert(nl[v].begin() + p, apex);
    }
  }
  int total = static_cast<int>(nl.size());

  // the outer orbit walks counterclockwise around the hull; pin it that way
  std::vector<int> ring;
  for (int d : fs[outer].darts) ring.push_back(original.tail(d));
  std::vector<char> pinned(total, 0);
  Layout pos;
  pos.x.assign(total, 0.0);
  pos.y.assign(total, 0.0);
  for (std::size_t i = 0; i < ring.size(); i++) {
    double th = 2.0 * M_PI * static_cast<double>(i) / static_cast<double>(ring.size());
    pos.x[ring[i]] = std::cos(th);
    pos.y[ring[i]] = std::sin(th);
    pinned[ring[i]] = 1;
  }

  std::vector<int> unknown_of(total, -1);
  std::vector<int> unknowns;
  for (int v = 0; v < total; v++)
    if (!pinned[v]) {
      unknown_of[v] = static_cast<int>(unknowns.size());
      unknowns.push_back(v);
    }
  if (!unknowns.empty()) {
    int k = static_cast<int>(unknowns.size());
    std::vector<std::vector<double>> a(k, std::vector<double>(k, 0.0));
    std::vector<double> bx(k, 0.0), by(k, 0.0);
    for (int r = 0; r < k; r++) {
      int v = unknowns[r];
      a[r][r] = static_cast<double>(nl[v].size());
      for (int u : nl[v]) {
        if (pinned[u]) {
          bx[r] += pos.x[u];
          by[r] += pos.y[u];
        } else {
          a[r][unknown_of[u]] -= 1.0;
        }
      }
    }
    if (!solve_linear(a, bx, by)) return std::nullopt;
    for (int r = 0; r < k; r++) {
      pos.x[unknowns[r]] = bx[r];
      pos.y[unknowns[r]] = by[r];
    }
  }

  pos.x.resize(original.vertex_count);
  pos.y.resize(original.vertex_count);
  for (int v = 0; v < original.vertex_count; v++)
    for (int u = 0; u < v; u++) {
      double dx = pos.x[v] - pos.x[u], dy = pos.y[v] - pos.y[u];
      if (dx * dx + dy * dy < 1e-14) return std::nullopt;
    }
  switch (rotations_match(original, pos)) {
    case ChiralityCheck::Match: break;
    case ChiralityCheck::Reversed:
      for (double& y : pos.y) y = -y;
      break;
    case ChiralityCheck::Fail: return std::nullopt;
  }
  return pos;
}

}  // namespace detail

/// Straight-line layout realizing the drawing's rotation system. Throws
/// LayoutDegenerate when neither the plain nor the stellated solve yields a
/// usable embedding.
inline Layout layout_drawing(const OnePlaneDrawing& d) {
  if (auto plain = detail::try_barycentric(d.rs, false)) return *plain;
  if (auto stellated = detail::try_barycentric(d.rs, true)) return *stellated;
  fail(Errc::LayoutDegenerate, "no non-degenerate layout found");
}

struct SvgOptions {
  double size = 720.0;
  double margin = 48.0;
  bool labels = true;
};

inline std::string svg_render(const OnePlaneDrawing& d, const SvgOptions& opts = {}) {
  Layout pos = layout_drawing(d);
  double lo_x = pos.x[0], hi_x = pos.x[0], lo_y = pos.y[0], hi_y = pos.y[0];
  for (int v = 0; v < d.vertex_count(); v++) {
    lo_x = std::min(lo_x, pos.x[v]);
    hi_x = std::max(hi_x, pos.x[v]);
    lo_y = std::min(lo_y, pos.y[v]);
    hi_y = std::max(hi_y, pos.y[v]);
  }
  double span = std::max(std::max(hi_x - lo_x, hi_y - lo_y), 1e-9);
  double scale = (opts.size - 2 * opts.margin) / span;
  auto X = [&](int v) { return opts.margin + (pos.x[v] - lo_x) * scale; };
  auto Y = [&](int v) { return opts.margin + (pos.y[v] - lo_y) * scale; };

  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(2);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << opts.size << " "
     << opts.size << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (int e = 0; e < d.rs.edge_count(); e++) {
    auto [u, v] = d.rs.edge_ends[e];
    os << "<line class=\"seg\" x1=\"" << X(u) << "\" y1=\"" << Y(u) << "\" x2=\"" << X(v)
       << "\" y2=\"" << Y(v) << "\" stroke=\"black\" stroke-width=\"1.2\"/>\n";
  }
  double r = 4.0;
  for (int v = 0; v < d.vertex_count(); v++) {
    if (d.is_fake(v)) {
      os << "<g class=\"crossing-mark\">"
         << "<line x1=\"" << X(v) - r << "\" y1=\"" << Y(v) - r << "\" x2=\"" << X(v) + r
         << "\" y2=\"" << Y(v) + r << "\" stroke=\"crimson\" stroke-width=\"1.4\"/>"
         << "<line x1=\"" << X(v) - r << "\" y1=\"" << Y(v) + r << "\" x2=\"" << X(v) + r
         << "\" y2=\"" << Y(v) - r << "\" stroke=\"crimson\" stroke-width=\"1.4\"/></g>\n";
    } else {
      os << "<circle class=\"vertex\" cx=\"" << X(v) << "\" cy=\"" << Y(v) << "\" r=\"" << r
         << "\" fill=\"steelblue\"/>\n";
      if (opts.labels)
        os << "<text x=\"" << X(v) + 6 << "\" y=\"" << Y(v) - 6 << "\" font-size=\"11\">" << v
           << "</text>\n";
    }
  }
  os << "</svg>\n";
  return os.str();
}

inline void svg_export(const OnePlaneDrawing& d, const std::string& path,
                       const SvgOptions& opts = {}) {
  std::ofstream out(path);
  require(out.good(), Errc::BadParameter, "cannot open " + path);
  out << svg_render(d, opts);
}

}  // namespace oneplanar
