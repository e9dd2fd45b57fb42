#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "oneplanar/graph.hpp"

namespace oneplanar {

// Canonical labeling for desk-scale graphs by iterated color refinement plus
// backtracking over the first non-singleton color class. The canonical form
// is the lexicographically largest adjacency-bitrow matrix over all labelings
// compatible with the refinement tree. Exhaustive, so exact; fine for the
// sizes this library works at (merged drawings stay well under a few hundred
// vertices, and their degree spread keeps the refinement sharp).

namespace detail {

using BitRow = std::vector<std::uint64_t>;

struct CanonSearch {
  int n = 0;
  int words = 0;
  std::vector<BitRow> adj;
  std::vector<BitRow> best;
  bool has_best = false;

  void refine(std::vector<int>& colors) const {
    while (true) {
      std::vector<std::vector<int>> sig(n);
      for (int v = 0; v < n; v++) {
        sig[v].push_back(colors[v]);
        std::vector<int> nb;
        for (int u = 0; u < n; u++)
          if (adj[v][u >> 6] >> (u & 63) & 1u) nb.push_back(colors[u]);
        std::sort(nb.begin(), nb.end());
        sig[v].insert(sig[v].end(), nb.begin(), nb.end());
      }
      std::vector<int> order(n);
      for (int v = 0; v < n; v++) order[v] = v;
      std::sort(order.begin(), order.end(), [&](int a, int b) { return sig[a] < sig[b]; });
      std::vector<int> next(n);
      int color = 0;
      for (int i = 0; i < n; i++) {
        if (i > 0 && sig[order[i]] != sig[order[i - 1]]) color++;
        next[order[i]] = color;
      }
      if (next == colors) return;
      colors = next;
    }
  }

  void try_leaf(const std::vector<int>& colors) {
    std::vector<BitRow> form(n, BitRow(words, 0));
    for (int v = 0; v < n; v++)
      for (int u = 0; u < n; u++)
        if (adj[v][u >> 6] >> (u & 63) & 1u)
          form[colors[v]][colors[u] >> 6] |= std::uint64_t{1} << (colors[u] & 63);
    if (!has_best || form > best) {
      best = std::move(form);
      has_best = true;
    }
  }

  void search(std::vector<int> colors) {
    refine(colors);
    std::vector<int> count(n, 0);
    for (int v = 0; v < n; v++) count[colors[v]]++;
    int target = -1;
    for (int c = 0; c < n; c++)
      if (count[c] > 1) {
        target = c;
        break;
      }
    if (target < 0) {
      try_leaf(colors);
      return;
    }
    for (int v = 0; v < n; v++) {
      if (colors[v] != target) continue;
      std::vector<int> child = colors;
      for (int u = 0; u < n; u++)
        if (child[u] >= target && u != v) child[u]++;
      search(std::move(child));
    }
  }
};

}  // namespace detail

/// Canonical adjacency form; equal forms <=> isomorphic graphs.
inline std::vector<detail::BitRow> canonical_form(const SimpleGraph& g) {
  require(g.n <= 512, Errc::BadParameter, "canonical_form limited to n <= 512");
  detail::CanonSearch cs;
  cs.n = g.n;
  cs.words = (g.n + 63) / 64;
  cs.adj.assign(g.n, detail::BitRow(cs.words, 0));
  for (const Edge& e : g.edges) {
    cs.adj[e.u][e.v >> 6] |= std::uint64_t{1} << (e.v & 63);
    cs.adj[e.v][e.u >> 6] |= std::uint64_t{1} << (e.u & 63);
  }
  if (g.n == 0) return {};
  cs.search(std::vector<int>(g.n, 0));
  return cs.best;
}

inline bool isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
  if (a.n != b.n || a.edges.size() != b.edges.size()) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace oneplanar
