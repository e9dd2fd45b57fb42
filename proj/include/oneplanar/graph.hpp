#pragma once

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "oneplanar/errors.hpp"

namespace oneplanar {

/// Undirected edge with normalized endpoints (u < v).
struct Edge {
  int u = 0;
  int v = 0;
  Edge() = default;
  Edge(int a, int b) : u(std::min(a, b)), v(std::max(a, b)) {}
  friend bool operator==(const Edge& a, const Edge& b) { return a.u == b.u && a.v == b.v; }
  friend bool operator<(const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  }
  bool touches(int w) const { return u == w || v == w; }
  bool independent_of(const Edge& o) const {
    return u != o.u && u != o.v && v != o.u && v != o.v;
  }
  int other(int w) const { return w == u ? v : u; }
};

/// Abstract simple graph on vertex ids 0..n-1. Edges are kept sorted and
/// deduplicated; loops are rejected.
struct SimpleGraph {
  int n = 0;
  std::vector<Edge> edges;

  SimpleGraph() = default;
  explicit SimpleGraph(int vertices) : n(vertices) {
    require(vertices >= 0, Errc::BadParameter, "negative vertex count");
  }

  static SimpleGraph from_edges(int n, const std::vector<std::pair<int, int>>& raw) {
    SimpleGraph g(n);
    g.edges.reserve(raw.size());
    for (auto [a, b] : raw) {
      require(a != b, Errc::BadParameter, "loop edge " + std::to_string(a));
      require(a >= 0 && b >= 0 && a < n && b < n, Errc::BadParameter,
              "edge endpoint out of range");
      g.edges.emplace_back(a, b);
    }
    std::sort(g.edges.begin(), g.edges.end());
    require(std::adjacent_find(g.edges.begin(), g.edges.end()) == g.edges.end(),
            Errc::BadParameter, "duplicate edge");
    return g;
  }

  int m() const { return static_cast<int>(edges.size()); }

  bool has_edge(int a, int b) const {
    Edge e(a, b);
    return std::binary_search(edges.begin(), edges.end(), e);
  }

  int edge_index(int a, int b) const {
    Edge e(a, b);
    auto it = std::lower_bound(edges.begin(), edges.end(), e);
    if (it == edges.end() || !(*it == e)) return -1;
    return static_cast<int>(it - edges.begin());
  }

  std::vector<int> degrees() const {
    std::vector<int> deg(n, 0);
    for (const Edge& e : edges) {
      deg[e.u]++;
      deg[e.v]++;
    }
    return deg;
  }

  std::vector<std::vector<int>> adjacency() const {
    std::vector<std::vector<int>> adj(n);
    for (const Edge& e : edges) {
      adj[e.u].push_back(e.v);
      adj[e.v].push_back(e.u);
    }
    return adj;
  }

  friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
    return a.n == b.n && a.edges == b.edges;
  }
};

// ---------------------------------------------------------------------------
// Standard constructions
// ---------------------------------------------------------------------------

inline SimpleGraph complete(int n) {
  require(n >= 0, Errc::BadParameter, "complete(n) with n < 0");
  SimpleGraph g(n);
  for (int i = 0; i < n; i++)
    for (int j = i + 1; j < n; j++) g.edges.emplace_back(i, j);
  return g;
}

inline SimpleGraph complete_multipartite(const std::vector<int>& parts) {
  int n = 0;
  std::vector<int> part_of;
  for (std::size_t p = 0; p < parts.size(); p++) {
    require(parts[p] >= 1, Errc::BadParameter, "empty part");
    for (int i = 0; i < parts[p]; i++) part_of.push_back(static_cast<int>(p));
    n += parts[p];
  }
  SimpleGraph g(n);
  for (int i = 0; i < n; i++)
    for (int j = i + 1; j < n; j++)
      if (part_of[i] != part_of[j]) g.edges.emplace_back(i, j);
  return g;
}

inline SimpleGraph path(int n) {
  require(n >= 1, Errc::BadParameter, "path(n) with n < 1");
  SimpleGraph g(n);
  for (int i = 0; i + 1 < n; i++) g.edges.emplace_back(i, i + 1);
  return g;
}

inline SimpleGraph cycle(int n) {
  require(n >= 3, Errc::BadParameter, "cycle(n) with n < 3");
  SimpleGraph g = path(n);
  g.edges.emplace_back(n - 1, 0);
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

/// k pairwise disjoint edges (kK2) on 2k vertices.
inline SimpleGraph matching(int k) {
  require(k >= 1, Errc::BadParameter, "matching(k) with k < 1");
  SimpleGraph g(2 * k);
  for (int i = 0; i < k; i++) g.edges.emplace_back(2 * i, 2 * i + 1);
  return g;
}

/// Star K_{1,k}: center 0, leaves 1..k.
inline SimpleGraph star(int k) {
  require(k >= 1, Errc::BadParameter, "star(k) with k < 1");
  SimpleGraph g(k + 1);
  for (int i = 1; i <= k; i++) g.edges.emplace_back(0, i);
  return g;
}

/// G - H: removes exactly the edges of `sub` (vertex ids shared with g).
/// Throws EdgeAbsent when an edge of `sub` is not present in g.
inline SimpleGraph remove_edges(const SimpleGraph& g, const SimpleGraph& sub) {
  require(sub.n <= g.n, Errc::BadParameter, "subgraph has more vertices than host");
  SimpleGraph out(g.n);
  out.edges = g.edges;
  for (const Edge& e : sub.edges) {
    auto it = std::lower_bound(out.edges.begin(), out.edges.end(), e);
    require(it != out.edges.end() && *it == e, Errc::EdgeAbsent,
            "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") not in graph");
    out.edges.erase(it);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Graph text format: `graph <n>` / `e <u> <v>` per edge / `end`.
// `#` starts a comment; parsers reject duplicate edges and loops.
// ---------------------------------------------------------------------------

namespace detail {
inline std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}
}  // namespace detail

inline SimpleGraph read_graph(std::istream& in) {
  std::string line;
  int lineno = 0;
  int n = -1;
  std::vector<std::pair<int, int>> raw;
  bool ended = false;
  while (std::getline(in, line)) {
    lineno++;
    std::istringstream ls(detail::strip_comment(line));
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "graph") {
      require(n < 0, Errc::ParseError, "line " + std::to_string(lineno) + ": repeated header");
      require(static_cast<bool>(ls >> n) && n >= 0, Errc::ParseError,
              "line " + std::to_string(lineno) + ": bad vertex count");
    } else if (tok == "e") {
      require(n >= 0, Errc::ParseError, "line " + std::to_string(lineno) + ": edge before header");
      int u, v;
      require(static_cast<bool>(ls >> u >> v), Errc::ParseError,
              "line " + std::to_string(lineno) + ": bad edge line");
      require(u != v, Errc::ParseError, "line " + std::to_string(lineno) + ": loop edge");
      require(u >= 0 && v >= 0 && u < n && v < n, Errc::ParseError,
              "line " + std::to_string(lineno) + ": endpoint out of range");
      raw.emplace_back(u, v);
    } else if (tok == "end") {
      ended = true;
      break;
    } else {
      fail(Errc::ParseError, "line " + std::to_string(lineno) + ": unknown token '" + tok + "'");
    }
  }
  require(n >= 0, Errc::ParseError, "missing 'graph <n>' header");
  require(ended, Errc::ParseError, "missing 'end'");
  std::vector<Edge> check;
  check.reserve(raw.size());
  for (auto [a, b] : raw) check.emplace_back(a, b);
  std::sort(check.begin(), check.end());
  require(std::adjacent_find(check.begin(), check.end()) == check.end(), Errc::ParseError,
          "duplicate edge");
  return SimpleGraph::from_edges(n, raw);
}

inline void write_graph(std::ostream& out, const SimpleGraph& g) {
  out << "graph " << g.n << "\n";
  for (const Edge& e : g.edges) out << "e " << e.u << " " << e.v << "\n";
  out << "end\n";
}

}  // namespace oneplanar
