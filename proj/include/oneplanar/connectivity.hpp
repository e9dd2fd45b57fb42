#pragma once

#include <algorithm>
#include <queue>
#include <vector>

#include "oneplanar/graph.hpp"

namespace oneplanar {

inline bool is_connected(const SimpleGraph& g) {
  if (g.n <= 1) return true;
  auto adj = g.adjacency();
  std::vector<char> seen(g.n, 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int u : adj[v])
      if (!seen[u]) {
        seen[u] = 1;
        reached++;
        q.push(u);
      }
  }
  return reached == g.n;
}

namespace detail {

// Max number of internally vertex-disjoint s-t paths via unit-capacity
// max-flow on the split network (v_in -> v_out). Exact; n is desk-scale.
inline int vertex_disjoint_paths(const SimpleGraph& g, int s, int t) {
  int n = g.n;
  int N = 2 * n;  // v_in = 2v, v_out = 2v+1
  std::vector<std::vector<int>> cap(N, std::vector<int>(N, 0));
  for (int v = 0; v < n; v++) cap[2 * v][2 * v + 1] = (v == s || v == t) ? n : 1;
  for (const Edge& e : g.edges) {
    cap[2 * e.u + 1][2 * e.v] = 1;
    cap[2 * e.v + 1][2 * e.u] = 1;
  }
  int source = 2 * s + 1, sink = 2 * t;
  int flow = 0;
  while (true) {
    std::vector<int> prev(N, -1);
    std::queue<int> q;
    q.push(source);
    prev[source] = source;
    while (!q.empty() && prev[sink] < 0) {
      int v = q.front();
      q.pop();
      for (int u = 0; u < N; u++)
        if (cap[v][u] > 0 && prev[u] < 0) {
          prev[u] = v;
          q.push(u);
        }
    }
    if (prev[sink] < 0) break;
    for (int v = sink; v != source; v = prev[v]) {
      cap[prev[v]][v]--;
      cap[v][prev[v]]++;
    }
    flow++;
  }
  return flow;
}

}  // namespace detail

/// Exact vertex connectivity: the minimum number of vertices whose removal
/// disconnects the graph or leaves a single vertex. Menger via max-flow over
/// all non-adjacent pairs; complete graphs yield n-1.
inline int connectivity(const SimpleGraph& g) {
  if (g.n <= 1) return 0;
  if (!is_connected(g)) return 0;
  if (static_cast<int>(g.edges.size()) == g.n * (g.n - 1) / 2) return g.n - 1;
  int best = g.n - 1;
  for (int s = 0; s < g.n; s++)
    for (int t = s + 1; t < g.n; t++)
      if (!g.has_edge(s, t)) best = std::min(best, detail::vertex_disjoint_paths(g, s, t));
  return best;
}

}  // namespace oneplanar
