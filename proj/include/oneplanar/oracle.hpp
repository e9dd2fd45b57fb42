#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <thread>
#include <utility>
#include <vector>

#include "oneplanar/connectivity.hpp"
#include "oneplanar/drawing.hpp"
#include "oneplanar/graph.hpp"
#include "oneplanar/planarity.hpp"

namespace oneplanar {

// Exact desk-scale crossing number / 1-planarity decisions by exhaustive
// search over crossing plans. A plan names which independent edge pairs cross
// (good drawings: adjacent edges never cross, no pair crosses twice) and, for
// an edge crossed several times, the order of its crossings. A plan is
// realizable iff its gadget planarization is planar: each crossing becomes
// two adjacent nodes a,b with one endpoint side of EACH crossed edge attached
// to a and the other sides to b, so both edges run through the shared edge
// ab. Contracting every ab recovers the classical planarization; keeping the
// split permits the "touching" resolutions as well, which only ever lower
// the realized crossing count, so the decision is exact.

/// A proposed crossing set plus per-edge crossing orders.
struct CrossingPlan {
  /// Unordered pairs of independent edge indices (i < j), sorted.
  std::vector<std::pair<int, int>> pairs;
  /// For each edge in >= 2 pairs: its crossings (indices into `pairs`) in
  /// order along the edge from its lower endpoint. Edges in one pair are
  /// implicit.
  std::map<int, std::vector<int>> edge_orders;

  int size() const { return static_cast<int>(pairs.size()); }
};

/// max(0, m - 3n + 6): every drawing needs at least this many crossings.
inline int euler_lower_bound(const SimpleGraph& g) {
  if (g.n < 3) return 0;
  return std::max(0, g.m() - 3 * g.n + 6);
}

namespace detail {

// Per-edge crossing lists for a plan; validates independence and orders.
inline std::vector<std::vector<int>> plan_edge_lists(const SimpleGraph& g,
                                                     const CrossingPlan& plan) {
  std::vector<std::vector<int>> lists(g.m());
  for (int t = 0; t < plan.size(); t++) {
    auto [i, j] = plan.pairs[t];
    require(i >= 0 && j >= 0 && i < g.m() && j < g.m() && i < j, Errc::BadParameter,
            "bad pair indices");
    require(g.edges[i].independent_of(g.edges[j]), Errc::BadParameter,
            "plan pairs adjacent edges");
    lists[i].push_back(t);
    lists[j].push_back(t);
  }
  for (int t = 1; t < plan.size(); t++)
    require(plan.pairs[t - 1] < plan.pairs[t], Errc::BadParameter,
            "plan pairs not sorted or repeated");
  for (int e = 0; e < g.m(); e++) {
    if (lists[e].size() < 2) continue;
    auto it = plan.edge_orders.find(e);
    require(it != plan.edge_orders.end(), Errc::BadParameter,
            "missing order for edge " + std::to_string(e));
    std::vector<int> sorted = it->second;
    std::sort(sorted.begin(), sorted.end());
    require(sorted == lists[e], Errc::BadParameter,
            "order for edge " + std::to_string(e) + " does not list its crossings");
    lists[e] = it->second;
  }
  return lists;
}

// Emits the gadget's edges; nodes are 0..n-1 plus a_t = n + 2t, b_t = n+2t+1.
inline void build_gadget_edges(const SimpleGraph& g,
                               const std::vector<std::vector<int>>& edge_lists,
                               std::vector<std::pair<int, int>>& out) {
  int n = g.n;
  out.clear();
  int pair_count = 0;
  for (int e = 0; e < g.m(); e++) pair_count += static_cast<int>(edge_lists[e].size());
  pair_count /= 2;
  for (int t = 0; t < pair_count; t++) out.emplace_back(n + 2 * t, n + 2 * t + 1);
  for (int e = 0; e < g.m(); e++) {
    const Edge& ed = g.edges[e];
    if (edge_lists[e].empty()) {
      out.emplace_back(ed.u, ed.v);
      continue;
    }
    int prev = ed.u;  // chain runs from the lower endpoint
    for (int t : edge_lists[e]) {
      out.emplace_back(prev, n + 2 * t);
      prev = n + 2 * t + 1;
    }
    out.emplace_back(prev, ed.v);
  }
}

}  // namespace detail

/// The plan's gadget planarization as a simple graph. Planar iff the plan is
/// realizable by a drawing whose crossings are (a subset of) the plan.
inline SimpleGraph gadget_planarization(const SimpleGraph& g, const CrossingPlan& plan) {
  auto lists = detail::plan_edge_lists(g, plan);
  std::vector<std::pair<int, int>> edges;
  detail::build_gadget_edges(g, lists, edges);
  return SimpleGraph::from_edges(g.n + 2 * plan.size(), edges);
}

enum class OracleStatus { Found, Refuted, Undecided };

struct SearchStats {
  std::uint64_t nodes = 0;   // gadget planarity tests
  bool budget_hit = false;
};

struct OracleOptions {
  std::uint64_t budget = 100'000'000;  // leaf tests across the whole call
  int threads = 0;                     // <= 0: hardware concurrency
};

namespace detail {

struct ExactSizeOutcome {
  bool found = false;
  CrossingPlan plan;
  std::uint64_t nodes = 0;
  bool budget_hit = false;
};

// All unordered pairs of independent edges, lexicographically sorted.
inline std::vector<std::pair<int, int>> independent_pairs(const SimpleGraph& g) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < g.m(); i++)
    for (int j = i + 1; j < g.m(); j++)
      if (g.edges[i].independent_of(g.edges[j])) out.emplace_back(i, j);
  return out;
}

struct SharedSearchState {
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> abort{false};
  std::atomic<int> best_first{INT32_MAX};  // first-pair index of the best witness
  std::uint64_t budget = 0;
  std::mutex mtx;
  std::map<int, CrossingPlan> witnesses;  // keyed by first-pair index
};

// Depth-first enumeration of the plans of exactly `size` pairs whose smallest
// pair index is `first`. Pair sets ascend lexicographically; order
// assignments (for edges crossed several times) follow in permutation order,
// so the first witness in a subtree is that subtree's lexicographic minimum.
class SubtreeSearcher {
 public:
  SubtreeSearcher(const SimpleGraph& g, const std::vector<std::pair<int, int>>& univ, int size,
                  bool matching_only, SharedSearchState& shared)
      : g_(g), univ_(univ), size_(size), matching_only_(matching_only), shared_(shared) {
    edge_lists_.resize(g.m());
    chosen_.reserve(size);
  }

  void run(int first) {
    first_ = first;
    found_ = false;
    if (!push_pair(first)) return;
    dfs(first + 1);
    pop_pair(first);
  }

 private:
  bool push_pair(int t) {
    auto [i, j] = univ_[t];
    if (matching_only_ && (!edge_lists_[i].empty() || !edge_lists_[j].empty())) return false;
    chosen_.push_back(t);
    edge_lists_[i].push_back(static_cast<int>(chosen_.size()) - 1);
    edge_lists_[j].push_back(static_cast<int>(chosen_.size()) - 1);
    return true;
  }
  void pop_pair(int t) {
    auto [i, j] = univ_[t];
    edge_lists_[i].pop_back();
    edge_lists_[j].pop_back();
    chosen_.pop_back();
  }

  void dfs(int next) {
    if (found_ || shared_.abort.load(std::memory_order_relaxed)) return;
    if (first_ > shared_.best_first.load(std::memory_order_relaxed)) return;
    if (static_cast<int>(chosen_.size()) == size_) {
      enumerate_orders(0);
      return;
    }
    int remaining = size_ - static_cast<int>(chosen_.size());
    int limit = static_cast<int>(univ_.size()) - remaining + 1;
    for (int t = next; t < limit; t++) {
      if (!push_pair(t)) continue;
      dfs(t + 1);
      pop_pair(t);
      if (found_ || shared_.abort.load(std::memory_order_relaxed)) return;
      if (first_ > shared_.best_first.load(std::memory_order_relaxed)) return;
    }
  }

  // Enumerates order assignments over the edges crossed >= 2 times (edges in
  // ascending id, each list through its permutations in lexicographic order).
  void enumerate_orders(int from_edge) {
    if (shared_.abort.load(std::memory_order_relaxed)) return;
    int e = -1;
    for (int i = from_edge; i < g_.m(); i++)
      if (edge_lists_[i].size() >= 2) {
        e = i;
        break;
      }
    if (e < 0) {
      test_leaf();
      return;
    }
    std::vector<int> base = edge_lists_[e];
    std::sort(base.begin(), base.end());
    std::vector<int> perm = base;
    do {
      edge_lists_[e] = perm;
      enumerate_orders(e + 1);
      if (shared_.abort.load(std::memory_order_relaxed)) break;
      if (found_) break;
    } while (std::next_permutation(perm.begin(), perm.end()));
    edge_lists_[e] = base;
  }

  void test_leaf() {
    std::uint64_t used = shared_.nodes.fetch_add(1, std::memory_order_relaxed) + 1;
    if (used > shared_.budget) {
      shared_.abort.store(true, std::memory_order_relaxed);
      budget_hit_ = true;
      return;
    }
    // edge_lists_ entries are positions in chosen_, which are exactly the
    // local crossing ids the gadget builder expects
    build_gadget_edges(g_, edge_lists_, scratch_);
    if (!is_planar_quick(g_.n + 2 * size_, scratch_)) return;

    CrossingPlan plan;
    for (int t : chosen_) plan.pairs.push_back(univ_[t]);
    for (int e = 0; e < g_.m(); e++)
      if (edge_lists_[e].size() >= 2) plan.edge_orders[e] = edge_lists_[e];
    {
      std::lock_guard<std::mutex> lk(shared_.mtx);
      if (!shared_.witnesses.count(first_)) shared_.witnesses[first_] = std::move(plan);
      int cur = shared_.best_first.load();
      while (first_ < cur && !shared_.best_first.compare_exchange_weak(cur, first_)) {
      }
    }
    found_ = true;
  }

 public:
  bool budget_hit_ = false;

 private:
  const SimpleGraph& g_;
  const std::vector<std::pair<int, int>>& univ_;
  int size_;
  bool matching_only_;
  SharedSearchState& shared_;
  int first_ = 0;
  bool found_ = false;
  std::vector<int> chosen_;
  std::vector<std::vector<int>> edge_lists_;  // edge -> positions in chosen_ (order along edge)
  std::vector<std::pair<int, int>> scratch_;
};

// Searches all plans of exactly `size` pairs. Parallel workers split on the
// first pair index; the reported verdict is schedule independent and the
// witness is the lexicographically smallest one (subtrees below a found
// witness are always finished).
inline ExactSizeOutcome search_exact_size(const SimpleGraph& g,
                                          const std::vector<std::pair<int, int>>& univ, int size,
                                          bool matching_only, const OracleOptions& opts,
                                          std::uint64_t budget_left) {
  ExactSizeOutcome out;
  if (size == 0) {
    out.nodes = 1;
    if (budget_left == 0) {
      out.budget_hit = true;
      return out;
    }
    std::vector<std::pair<int, int>> es;
    for (const Edge& e : g.edges) es.emplace_back(e.u, e.v);
    out.found = is_planar_quick(g.n, es);
    return out;
  }
  if (static_cast<int>(univ.size()) < size) return out;

  SharedSearchState shared;
  shared.budget = budget_left;
  int nthreads = opts.threads > 0
                     ? opts.threads
                     : std::max(1, static_cast<int>(std::thread::hardware_concurrency()));
  int top = static_cast<int>(univ.size()) - size + 1;
  nthreads = std::min(nthreads, top);

  std::atomic<int> next_first{0};
  std::atomic<bool> any_budget_hit{false};
  auto worker = [&]() {
    SubtreeSearcher s(g, univ, size, matching_only, shared);
    while (true) {
      int first = next_first.fetch_add(1);
      if (first >= top) break;
      if (shared.abort.load(std::memory_order_relaxed)) break;
      if (first > shared.best_first.load(std::memory_order_relaxed)) break;
      s.run(first);
    }
    if (s.budget_hit_) any_budget_hit = true;
  };

  if (nthreads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < nthreads; i++) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  out.nodes = std::min<std::uint64_t>(shared.nodes.load(), budget_left);
  out.budget_hit = any_budget_hit.load();
  int best = shared.best_first.load();
  if (best != INT32_MAX) {
    out.found = true;
    out.plan = shared.witnesses[best];
    out.budget_hit = false;  // a witness settles the question
  }
  return out;
}

}  // namespace detail

struct CrAtMostResult {
  OracleStatus status = OracleStatus::Undecided;
  std::optional<CrossingPlan> plan;  // witness when Found
  SearchStats stats;
};

/// Decides CR(g) <= k. Found returns the lexicographically first witness
/// plan (smallest size, then pair order); Refuted certifies CR(g) > k;
/// Undecided reports budget exhaustion.
inline CrAtMostResult cr_at_most(const SimpleGraph& g, int k, const OracleOptions& opts = {}) {
  require(k >= 0, Errc::BadParameter, "k must be nonnegative");
  CrAtMostResult res;
  auto univ = detail::independent_pairs(g);
  for (int size = euler_lower_bound(g); size <= k; size++) {
    std::uint64_t left = opts.budget > res.stats.nodes ? opts.budget - res.stats.nodes : 0;
    auto out = detail::search_exact_size(g, univ, size, false, opts, left);
    res.stats.nodes += out.nodes;
    if (out.found) {
      res.status = OracleStatus::Found;
      res.plan = out.plan;
      return res;
    }
    if (out.budget_hit) {
      res.stats.budget_hit = true;
      res.status = OracleStatus::Undecided;
      return res;
    }
  }
  res.status = OracleStatus::Refuted;
  return res;
}

struct RefutationRecord {
  int k = 0;
  std::uint64_t nodes = 0;
};

struct CrossingNumberResult {
  OracleStatus status = OracleStatus::Undecided;  // Found: exact; Refuted: CR > k_max
  int value = -1;                                 // exact crossing number when Found
  int lower_bound = 0;                            // best certified lower bound
  std::optional<CrossingPlan> witness;
  std::vector<RefutationRecord> refutations;
  SearchStats stats;
};

/// Converts a 1-plane drawing into the crossing plan of its own graph
/// (usable as an upper-bound witness for crossing_number).
inline CrossingPlan plan_from_drawing(const OnePlaneDrawing& d) {
  SimpleGraph g = underlying_graph(d);
  std::vector<int> map = true_index_map(d);
  CrossingPlan plan;
  for (int v = 0; v < d.vertex_count(); v++) {
    if (!d.is_fake(v)) continue;
    auto [e1, e2] = crossing_pair(d, v);
    int i = g.edge_index(map[e1.u], map[e1.v]);
    int j = g.edge_index(map[e2.u], map[e2.v]);
    require(i >= 0 && j >= 0, Errc::InvalidDrawing, "crossing edge missing from drawn graph");
    plan.pairs.emplace_back(std::min(i, j), std::max(i, j));
  }
  std::sort(plan.pairs.begin(), plan.pairs.end());
  return plan;
}

/// Smallest k <= k_max admitting a witness plan, reported with the witness
/// and the per-k refutation records. Starts at the Euler lower bound. An
/// optional verified upper-bound plan (e.g. from a known drawing) closes the
/// search as soon as the refutations meet it.
inline CrossingNumberResult crossing_number(const SimpleGraph& g, int k_max,
                                            const OracleOptions& opts = {},
                                            const std::optional<CrossingPlan>& upper_hint = {}) {
  CrossingNumberResult res;
  int lb = euler_lower_bound(g);
  res.lower_bound = lb;
  int ub = -1;
  if (upper_hint) {
    SimpleGraph gadget = gadget_planarization(g, *upper_hint);
    require(is_planar_quick(gadget), Errc::BadParameter, "upper hint plan is not realizable");
    ub = upper_hint->size();
  }
  auto univ = detail::independent_pairs(g);
  for (int k = lb; k <= k_max; k++) {
    if (k == ub) {
      res.status = OracleStatus::Found;
      res.value = k;
      res.witness = upper_hint;
      return res;
    }
    std::uint64_t left = opts.budget > res.stats.nodes ? opts.budget - res.stats.nodes : 0;
    auto out = detail::search_exact_size(g, univ, k, false, opts, left);
    res.stats.nodes += out.nodes;
    if (out.found) {
      res.status = OracleStatus::Found;
      res.value = k;
      res.witness = out.plan;
      return res;
    }
    if (out.budget_hit) {
      res.stats.budget_hit = true;
      res.status = OracleStatus::Undecided;
      return res;
    }
    res.refutations.push_back({k, out.nodes});
    res.lower_bound = k + 1;
  }
  if (ub == k_max + 1) {  // refutations met the hint exactly
    res.status = OracleStatus::Found;
    res.value = ub;
    res.witness = upper_hint;
    return res;
  }
  res.status = OracleStatus::Refuted;
  return res;
}

/// Soundness check for witness plans: embeds the gadget and counts the
/// planned contacts realized as genuine crossings (the rest are touchings a
/// perturbation removes). The drawing behind a planar witness plan therefore
/// has at most plan.size() crossings. Throws when the gadget is not planar.
inline int realized_crossings(const SimpleGraph& g, const CrossingPlan& plan) {
  auto lists = detail::plan_edge_lists(g, plan);
  SimpleGraph gadget = gadget_planarization(g, plan);
  PlanarityResult pr = is_planar(gadget);
  require(pr.planar, Errc::BadParameter, "plan gadget is not planar");
  const RotationSystem& emb = *pr.embedding;
  int n = g.n;
  // chain sides of every crossing: the node before a on each edge, the node
  // after b
  std::vector<std::array<int, 2>> prev_side(plan.size()), next_side(plan.size());
  std::vector<int> slot(plan.size(), 0);
  for (int e = 0; e < g.m(); e++) {
    const auto& L = lists[e];
    for (std::size_t i = 0; i < L.size(); i++) {
      int t = L[i];
      int prev = (i == 0) ? g.edges[e].u : n + 2 * L[i - 1] + 1;
      int next = (i + 1 == L.size()) ? g.edges[e].v : n + 2 * L[i + 1];
      prev_side[t][slot[t]] = prev;
      next_side[t][slot[t]] = next;
      slot[t]++;
    }
  }
  int genuine = 0;
  for (int t = 0; t < plan.size(); t++) {
    int a = n + 2 * t, b = a + 1;
    std::vector<int> ra = emb.neighbors(a), rb = emb.neighbors(b);
    std::rotate(ra.begin(), std::find(ra.begin(), ra.end(), b), ra.end());
    std::rotate(rb.begin(), std::find(rb.begin(), rb.end(), a), rb.end());
    // contracted rotation (ra[1], ra[2], rb[1], rb[2]); genuine iff the two
    // sides of the same edge sit opposite
    bool p_first = (ra[1] == prev_side[t][0]);
    bool r_first = (rb[1] == next_side[t][0]);
    if (p_first == r_first) genuine++;
  }
  return genuine;
}

struct OnePlanarResult {
  OracleStatus status = OracleStatus::Undecided;
  std::optional<OnePlaneDrawing> witness;
  SearchStats stats;
};

namespace detail {

// Turns a matching plan plus a planar embedding of its gadget into a drawing.
// Non-alternating contacts are touchings, not crossings; those pairs are
// dropped and the smaller (still planar) gadget is embedded again.
inline OnePlaneDrawing extract_one_planar_witness(const SimpleGraph& g, CrossingPlan plan) {
  while (true) {
    SimpleGraph gadget = gadget_planarization(g, plan);
    PlanarityResult pr = is_planar(gadget);
    require(pr.planar, Errc::BadParameter, "witness plan lost planarity");
    const RotationSystem& emb = *pr.embedding;
    int n = g.n;
    int c = plan.size();

    std::vector<int> drop;
    for (int t = 0; t < c; t++) {
      int a = n + 2 * t, b = a + 1;
      Edge e = g.edges[plan.pairs[t].first];
      std::vector<int> ra = emb.neighbors(a), rb = emb.neighbors(b);
      auto rotate_to_front = [](std::vector<int>& v, int x) {
        std::rotate(v.begin(), std::find(v.begin(), v.end(), x), v.end());
      };
      rotate_to_front(ra, b);
      rotate_to_front(rb, a);
      // ra = (b, p, q), rb = (a, r, s); contracted rotation (p, q, r, s)
      int p = ra[1], r = rb[1];
      bool p_on_e = (p == e.u);  // chain tails: a holds e.u's side, b holds e.v's
      bool r_on_e = (r == e.v);
      if (p_on_e != r_on_e) drop.push_back(t);  // u,v adjacent around the contact: touching
    }
    if (!drop.empty()) {
      CrossingPlan smaller;
      for (int t = 0; t < c; t++)
        if (std::find(drop.begin(), drop.end(), t) == drop.end())
          smaller.pairs.push_back(plan.pairs[t]);
      plan = std::move(smaller);
      continue;
    }

    // all contacts alternate: contract each a,b into a crossing vertex
    std::vector<int> node_map(n + 2 * c);
    for (int v = 0; v < n; v++) node_map[v] = v;
    for (int t = 0; t < c; t++) node_map[n + 2 * t] = node_map[n + 2 * t + 1] = n + t;
    std::vector<std::vector<int>> nl(n + c);
    for (int v = 0; v < n; v++) {
      nl[v] = emb.neighbors(v);
      for (int& x : nl[v]) x = node_map[x];
    }
    for (int t = 0; t < c; t++) {
      int a = n + 2 * t, b = a + 1;
      std::vector<int> ra = emb.neighbors(a), rb = emb.neighbors(b);
      auto rotate_to_front = [](std::vector<int>& v, int x) {
        std::rotate(v.begin(), std::find(v.begin(), v.end(), x), v.end());
      };
      rotate_to_front(ra, b);
      rotate_to_front(rb, a);
      nl[n + t] = {ra[1], ra[2], rb[1], rb[2]};
    }
    OnePlaneDrawing d;
    d.rs = RotationSystem::from_neighbor_lists(nl);
    d.kind.assign(n + c, VertexKind::True);
    for (int t = 0; t < c; t++) d.kind[n + t] = VertexKind::Fake;
    require_valid(d);
    require(underlying_graph(d) == g, Errc::InvalidDrawing,
            "extracted drawing does not draw the input graph");
    return d;
  }
}

}  // namespace detail

/// Searches for a drawing of g with every edge crossed at most once. Fast
/// rejection by the edge bound m <= 4n-8 first; then matching plans of
/// ascending size. The witness drawing always validates and draws g exactly.
/// Input must be connected (drawings are connected by contract).
inline OnePlanarResult is_one_planar(const SimpleGraph& g, const OracleOptions& opts = {}) {
  require(is_connected(g), Errc::BadParameter,
          "1-planarity witness search needs a connected graph");
  OnePlanarResult res;
  if (g.n >= 3 && g.m() > 4 * g.n - 8) {
    res.status = OracleStatus::Refuted;
    return res;
  }
  auto univ = detail::independent_pairs(g);
  int max_size = g.m() / 2;
  for (int size = euler_lower_bound(g); size <= max_size; size++) {
    std::uint64_t left = opts.budget > res.stats.nodes ? opts.budget - res.stats.nodes : 0;
    auto out = detail::search_exact_size(g, univ, size, true, opts, left);
    res.stats.nodes += out.nodes;
    if (out.found) {
      res.status = OracleStatus::Found;
      if (size == 0) {
        PlanarityResult pr = is_planar(g);
        OnePlaneDrawing d;
        d.rs = *pr.embedding;
        d.kind.assign(g.n, VertexKind::True);
        res.witness = std::move(d);
      } else {
        res.witness = detail::extract_one_planar_witness(g, out.plan);
      }
      return res;
    }
    if (out.budget_hit) {
      res.stats.budget_hit = true;
      res.status = OracleStatus::Undecided;
      return res;
    }
  }
  res.status = OracleStatus::Refuted;
  return res;
}

// ---------------------------------------------------------------------------
// Seven-vertex census
// ---------------------------------------------------------------------------

/// Classifies every edge subset H of K7 (2^21 cases) by the structure that
/// decides the 1-planarity of K7 - H: H contains two disjoint edges, or a
/// vertex of degree >= 3, or H is one of the four exceptional shapes (empty,
/// one edge, two adjacent edges, triangle). Together with the oracle facts
/// about K7 - C3, K7 - 2K2 and K7 - K_{1,3}, this settles all graphs on at
/// most 7 vertices.
struct CensusReport {
  std::uint64_t two_matching = 0;
  std::uint64_t degree_three = 0;
  std::uint64_t exceptional_empty = 0;
  std::uint64_t exceptional_edge = 0;
  std::uint64_t exceptional_two_path = 0;
  std::uint64_t exceptional_triangle = 0;
  bool complete = false;  // every subset classified

  std::uint64_t total() const {
    return two_matching + degree_three + exceptional_empty + exceptional_edge +
           exceptional_two_path + exceptional_triangle;
  }
};

inline CensusReport seven_vertex_census() {
  SimpleGraph k7 = complete(7);
  const int m = k7.m();  // 21
  std::vector<std::uint32_t> incident(7, 0), disjoint(m, 0);
  for (int e = 0; e < m; e++) {
    incident[k7.edges[e].u] |= 1u << e;
    incident[k7.edges[e].v] |= 1u << e;
  }
  for (int e = 0; e < m; e++)
    for (int f = 0; f < m; f++)
      if (f != e && k7.edges[e].independent_of(k7.edges[f])) disjoint[e] |= 1u << f;

  CensusReport rep;
  rep.complete = true;
  for (std::uint32_t h = 0; h < (1u << m); h++) {
    bool matching2 = false;
    for (int e = 0; e < m && !matching2; e++)
      if ((h >> e & 1u) && (h & disjoint[e])) matching2 = true;
    if (matching2) {
      rep.two_matching++;
      continue;
    }
    bool deg3 = false;
    for (int v = 0; v < 7 && !deg3; v++)
      if (__builtin_popcount(h & incident[v]) >= 3) deg3 = true;
    if (deg3) {
      rep.degree_three++;
      continue;
    }
    int edges = __builtin_popcount(h);
    if (edges == 0)
      rep.exceptional_empty++;
    else if (edges == 1)
      rep.exceptional_edge++;
    else if (edges == 2)
      rep.exceptional_two_path++;  // no 2-matching forces the two edges adjacent
    else if (edges == 3) {
      // pairwise intersecting, max degree 2: must be a triangle
      std::uint32_t verts = 0;
      for (int e = 0; e < m; e++)
        if (h >> e & 1u) verts |= (1u << k7.edges[e].u) | (1u << k7.edges[e].v);
      if (__builtin_popcount(verts) == 3)
        rep.exceptional_triangle++;
      else
        rep.complete = false;
    } else {
      rep.complete = false;
    }
  }
  if (rep.total() != (1u << m)) rep.complete = false;
  return rep;
}

}  // namespace oneplanar
