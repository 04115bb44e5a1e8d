#include "sec/exact_solver.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sec/core.hpp"

namespace sec {

namespace {

constexpr int kEdgeGuard = 60;

void guard_size(const PlaneMultigraph& g, bool force) {
  if (!force && g.edge_count() > kEdgeGuard)
    fail(Err::TooLarge, "instance has " + std::to_string(g.edge_count()) + " edges, guard is " +
                            std::to_string(kEdgeGuard) + " (use force to override)");
}

int greedy_clique_bound(const std::vector<std::vector<int>>& adj) {
  const int m = static_cast<int>(adj.size());
  if (m == 0) return 0;
  std::vector<std::vector<char>> mat(static_cast<size_t>(m), std::vector<char>(static_cast<size_t>(m), 0));
  for (int i = 0; i < m; ++i)
    for (int j : adj[static_cast<size_t>(i)]) mat[static_cast<size_t>(i)][static_cast<size_t>(j)] = 1;
  std::vector<int> by_degree(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) by_degree[static_cast<size_t>(i)] = i;
  std::sort(by_degree.begin(), by_degree.end(), [&](int a, int b) {
    size_t da = adj[static_cast<size_t>(a)].size(), db = adj[static_cast<size_t>(b)].size();
    return da != db ? da > db : a < b;
  });
  int best = 1;
  std::vector<int> clique;
  for (int s = 0; s < m; ++s) {
    clique.assign(1, s);
    for (int v : by_degree) {
      if (v == s) continue;
      bool ok = true;
      for (int u : clique)
        if (!mat[static_cast<size_t>(v)][static_cast<size_t>(u)]) { ok = false; break; }
      if (ok) clique.push_back(v);
    }
    best = std::max(best, static_cast<int>(clique.size()));
  }
  return best;
}

// Branch and bound for one k.  Colors are canonicalized by first use: the
// allowed set at any node is {colors used so far} ∪ {the next fresh color}.
// The fresh bit is never pruned from any domain (domains lose only colors of
// assigned neighbors), so an empty allowed set means an empty domain, which
// soundly kills the branch even under dynamic variable ordering.
std::optional<std::vector<int>> solve_k(const std::vector<std::vector<int>>& adj, int k,
                                        long long& nodes) {
  const int m = static_cast<int>(adj.size());
  if (m == 0) return std::vector<int>{};
  if (k <= 0) return std::nullopt;
  const uint64_t full = (k >= 64) ? ~0ull : ((1ull << k) - 1);
  std::vector<uint64_t> dom(static_cast<size_t>(m), full);
  std::vector<int> color(static_cast<size_t>(m), 0);
  int max_used = 0;
  std::vector<std::pair<int, uint64_t>> trail;

  auto rec = [&](auto&& self, int depth) -> bool {
    if (depth == m) return true;
    const uint64_t avail = (max_used >= k) ? full : ((1ull << (max_used + 1)) - 1);
    int best = -1, best_cnt = 1 << 30;
    for (int i = 0; i < m; ++i) {
      if (color[static_cast<size_t>(i)] != 0) continue;
      int cnt = __builtin_popcountll(dom[static_cast<size_t>(i)] & avail);
      if (cnt < best_cnt) {
        best_cnt = cnt;
        best = i;
        if (cnt == 0) break;
      }
    }
    uint64_t options = dom[static_cast<size_t>(best)] & avail;
    while (options) {
      int bit = __builtin_ctzll(options);
      options &= options - 1;
      ++nodes;
      color[static_cast<size_t>(best)] = bit + 1;
      int save_max = max_used;
      max_used = std::max(max_used, bit + 1);
      size_t mark = trail.size();
      bool dead = false;
      for (int j : adj[static_cast<size_t>(best)]) {
        if (color[static_cast<size_t>(j)] != 0) continue;
        uint64_t b = 1ull << bit;
        if (dom[static_cast<size_t>(j)] & b) {
          dom[static_cast<size_t>(j)] &= ~b;
          trail.emplace_back(j, b);
          if (dom[static_cast<size_t>(j)] == 0) { dead = true; break; }
        }
      }
      if (!dead && self(self, depth + 1)) return true;
      while (trail.size() > mark) {
        dom[static_cast<size_t>(trail.back().first)] |= trail.back().second;
        trail.pop_back();
      }
      color[static_cast<size_t>(best)] = 0;
      max_used = save_max;
    }
    return false;
  };

  if (!rec(rec, 0)) return std::nullopt;
  return color;
}

PartialColoring to_coloring(const PlaneMultigraph& g, const std::vector<int>& colors, int k) {
  PartialColoring c(g.edge_count(), k);
  for (int e = 0; e < g.edge_count(); ++e) c.color[static_cast<size_t>(e)] = colors[static_cast<size_t>(e)];
  if (!verify_strong(g, c).empty())
    fail(Err::InternalCounterexample, "exact solver produced an invalid coloring");
  return c;
}

}  // namespace

int conflict_clique_lower(const PlaneMultigraph& g) {
  return greedy_clique_bound(conflict_graph(g).adj);
}

std::optional<PartialColoring> exact_coloring(const PlaneMultigraph& g, int k, bool force) {
  if (k < 0) fail(Err::InputInvalid, "palette size must be nonnegative");
  guard_size(g, force);
  ConflictGraph cg = conflict_graph(g);
  if (greedy_clique_bound(cg.adj) > k) return std::nullopt;
  long long nodes = 0;
  auto colors = solve_k(cg.adj, k, nodes);
  if (!colors) return std::nullopt;
  return to_coloring(g, *colors, k);
}

ExactResult strong_chromatic_index(const PlaneMultigraph& g, int kmax, bool force) {
  if (kmax < 1) fail(Err::InputInvalid, "kmax must be at least 1");
  guard_size(g, force);
  ExactResult r;
  if (g.edge_count() == 0) {
    r.chi_s = 0;
    r.witness = PartialColoring(0, 0);
    return r;
  }
  ConflictGraph cg = conflict_graph(g);
  int lb = greedy_clique_bound(cg.adj);
  for (int k = std::max(lb, 1); k <= kmax; ++k) {
    auto colors = solve_k(cg.adj, k, r.nodes);
    if (colors) {
      r.chi_s = k;
      r.witness = to_coloring(g, *colors, k);
      return r;
    }
  }
  return r;  // exceeds kmax
}

}  // namespace sec
