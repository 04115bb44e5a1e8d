#include "sec/strong_coloring.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

#include "sec/core.hpp"

namespace sec {

namespace {

void check_edge_id(const PlaneMultigraph& g, int e) {
  if (e < 0 || e >= g.edge_count())
    fail(Err::IndexOutOfRange, "edge id " + std::to_string(e) + " out of range");
}

// Append every edge seeing e (no dedup, may repeat; never contains e).
void collect_seen(const PlaneMultigraph& g, int e, std::vector<int>& out) {
  for (int v : {g.edges[static_cast<size_t>(e)].u, g.edges[static_cast<size_t>(e)].v}) {
    for (int h : g.rot[static_cast<size_t>(v)]) {
      if (h == e) continue;
      out.push_back(h);
      int w = g.other(h, v);
      for (int f : g.rot[static_cast<size_t>(w)])
        if (f != e && f != h) out.push_back(f);
    }
  }
}

}  // namespace

bool sees(const PlaneMultigraph& g, int e, int f) {
  check_edge_id(g, e);
  check_edge_id(g, f);
  if (e == f) return false;
  const Edge& a = g.edges[static_cast<size_t>(e)];
  const Edge& b = g.edges[static_cast<size_t>(f)];
  if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) return true;
  for (int v : {a.u, a.v})
    for (int h : g.rot[static_cast<size_t>(v)]) {
      if (h == e) continue;
      int w = g.other(h, v);
      if (w == b.u || w == b.v) return true;
    }
  return false;
}

ConflictGraph conflict_graph(const PlaneMultigraph& g) {
  ConflictGraph cg;
  cg.adj.resize(static_cast<size_t>(g.edge_count()));
  std::vector<int> buf;
  for (int e = 0; e < g.edge_count(); ++e) {
    buf.clear();
    collect_seen(g, e, buf);
    std::sort(buf.begin(), buf.end());
    buf.erase(std::unique(buf.begin(), buf.end()), buf.end());
    cg.adj[static_cast<size_t>(e)] = buf;
  }
  return cg;
}

std::vector<Violation> verify_strong(const PlaneMultigraph& g, const PartialColoring& c) {
  if (static_cast<int>(c.color.size()) != g.edge_count())
    fail(Err::InputInvalid, "coloring covers " + std::to_string(c.color.size()) + " edges, graph has " +
                                std::to_string(g.edge_count()));
  for (int e = 0; e < g.edge_count(); ++e) {
    int col = c.color[static_cast<size_t>(e)];
    if (col == 0) fail(Err::UncoloredEdge, "edge " + std::to_string(e) + " lacks a color");
    if (col < 1 || col > c.palette)
      fail(Err::ColorOutOfRange, "edge " + std::to_string(e) + " has color " + std::to_string(col) +
                                     " outside 1.." + std::to_string(c.palette));
  }
  ConflictGraph cg = conflict_graph(g);
  std::vector<Violation> out;
  for (int e = 0; e < g.edge_count(); ++e)
    for (int f : cg.adj[static_cast<size_t>(e)])
      if (e < f && c.color[static_cast<size_t>(e)] == c.color[static_cast<size_t>(f)])
        out.push_back(Violation{e, f, c.color[static_cast<size_t>(e)]});
  return out;
}

bool is_good_partial(const PlaneMultigraph& g, const PartialColoring& c) {
  if (static_cast<int>(c.color.size()) != g.edge_count()) return false;
  std::vector<int> buf;
  for (int e = 0; e < g.edge_count(); ++e) {
    int col = c.color[static_cast<size_t>(e)];
    if (col == 0) continue;
    if (col < 1 || col > c.palette) return false;
    buf.clear();
    collect_seen(g, e, buf);
    for (int f : buf)
      if (c.color[static_cast<size_t>(f)] == col) return false;
  }
  return true;
}

std::vector<int> used_at(const PlaneMultigraph& g, const PartialColoring& c, int v) {
  if (v < 0 || v >= g.vertex_count())
    fail(Err::IndexOutOfRange, "vertex id " + std::to_string(v) + " out of range");
  std::vector<int> out;
  for (int h : g.rot[static_cast<size_t>(v)])
    if (c.color[static_cast<size_t>(h)] != 0) out.push_back(c.color[static_cast<size_t>(h)]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<int> used_other(const PlaneMultigraph& g, const PartialColoring& c, int v, int e) {
  if (v < 0 || v >= g.vertex_count())
    fail(Err::IndexOutOfRange, "vertex id " + std::to_string(v) + " out of range");
  check_edge_id(g, e);
  std::vector<int> out;
  for (int h : g.rot[static_cast<size_t>(v)])
    if (h != e && c.color[static_cast<size_t>(h)] != 0) out.push_back(c.color[static_cast<size_t>(h)]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<int> available_colors(const PlaneMultigraph& g, const PartialColoring& c, int e) {
  check_edge_id(g, e);
  if (c.assigned(e)) fail(Err::AlreadyColored, "edge " + std::to_string(e) + " already colored");
  if (!is_good_partial(g, c))
    fail(Err::InvalidColoring, "available_colors requires a good partial coloring");
  std::vector<char> banned(static_cast<size_t>(c.palette) + 1, 0);
  std::vector<int> buf;
  collect_seen(g, e, buf);
  for (int f : buf)
    if (c.color[static_cast<size_t>(f)] != 0) banned[static_cast<size_t>(c.color[static_cast<size_t>(f)])] = 1;
  std::vector<int> out;
  for (int col = 1; col <= c.palette; ++col)
    if (!banned[static_cast<size_t>(col)]) out.push_back(col);
  return out;
}

std::optional<std::vector<std::pair<int, int>>> sdr_extend(
    const std::vector<std::pair<int, std::vector<int>>>& demands) {
  int kmax = 0;
  for (const auto& d : demands)
    for (int c : d.second) {
      if (c < 1) fail(Err::ColorOutOfRange, "demand color " + std::to_string(c) + " below 1");
      kmax = std::max(kmax, c);
    }
  // Kuhn's algorithm: match demand i to one color of its set.
  std::vector<int> owner(static_cast<size_t>(kmax) + 1, -1);  // color -> demand index
  std::vector<char> visited;
  auto augment = [&](auto&& self, int i) -> bool {
    for (int c : demands[static_cast<size_t>(i)].second) {
      if (visited[static_cast<size_t>(c)]) continue;
      visited[static_cast<size_t>(c)] = 1;
      if (owner[static_cast<size_t>(c)] < 0 || self(self, owner[static_cast<size_t>(c)])) {
        owner[static_cast<size_t>(c)] = i;
        return true;
      }
    }
    return false;
  };
  for (size_t i = 0; i < demands.size(); ++i) {
    visited.assign(static_cast<size_t>(kmax) + 1, 0);
    if (!augment(augment, static_cast<int>(i))) return std::nullopt;
  }
  std::vector<int> chosen(demands.size(), 0);
  for (int c = 1; c <= kmax; ++c)
    if (owner[static_cast<size_t>(c)] >= 0) chosen[static_cast<size_t>(owner[static_cast<size_t>(c)])] = c;
  std::vector<std::pair<int, int>> out;
  out.reserve(demands.size());
  for (size_t i = 0; i < demands.size(); ++i) out.emplace_back(demands[i].first, chosen[i]);
  return out;
}

std::optional<PartialColoring> extend_by_search(const PlaneMultigraph& g,
                                                const PartialColoring& partial,
                                                std::vector<int> frontier, SearchStats* stats) {
  std::sort(frontier.begin(), frontier.end());
  frontier.erase(std::unique(frontier.begin(), frontier.end()), frontier.end());
  for (int e : frontier) {
    check_edge_id(g, e);
    if (partial.assigned(e)) fail(Err::AlreadyColored, "frontier edge " + std::to_string(e) + " already colored");
  }
  if (frontier.size() > 20)
    fail(Err::FrontierTooLarge, "frontier of " + std::to_string(frontier.size()) + " edges exceeds 20");
  if (!is_good_partial(g, partial))
    fail(Err::InvalidColoring, "extend_by_search requires a good partial coloring");
  const int m = static_cast<int>(frontier.size());
  if (m == 0) return partial;
  const int k = partial.palette;
  const uint32_t full = (k >= 32) ? ~0u : ((1u << k) - 1);

  std::vector<int> idx_of(static_cast<size_t>(g.edge_count()), -1);
  for (int i = 0; i < m; ++i) idx_of[static_cast<size_t>(frontier[static_cast<size_t>(i)])] = i;
  std::vector<uint32_t> dom(static_cast<size_t>(m), full);
  std::vector<std::vector<int>> nbr(static_cast<size_t>(m));  // frontier indices seeing i
  std::vector<int> buf;
  for (int i = 0; i < m; ++i) {
    buf.clear();
    collect_seen(g, frontier[static_cast<size_t>(i)], buf);
    std::sort(buf.begin(), buf.end());
    buf.erase(std::unique(buf.begin(), buf.end()), buf.end());
    for (int f : buf) {
      int col = partial.color[static_cast<size_t>(f)];
      if (col != 0) {
        if (col <= 32) dom[static_cast<size_t>(i)] &= ~(1u << (col - 1));
      } else if (idx_of[static_cast<size_t>(f)] >= 0) {
        nbr[static_cast<size_t>(i)].push_back(idx_of[static_cast<size_t>(f)]);
      }
    }
  }

  std::vector<int> assigned(static_cast<size_t>(m), 0);  // chosen color, 0 = none
  std::vector<std::pair<int, uint32_t>> trail;            // (index, removed bit) for undo
  long long nodes = 0;

  auto search = [&](auto&& self, int depth) -> bool {
    if (depth == m) return true;
    // MRV: fewest remaining colors; ties by lowest edge id (frontier is sorted).
    int best = -1, best_cnt = 1 << 30;
    for (int i = 0; i < m; ++i) {
      if (assigned[static_cast<size_t>(i)] != 0) continue;
      int cnt = __builtin_popcount(dom[static_cast<size_t>(i)]);
      if (cnt < best_cnt) { best_cnt = cnt; best = i; }
    }
    uint32_t options = dom[static_cast<size_t>(best)];
    while (options) {
      int bit = __builtin_ctz(options);
      options &= options - 1;
      ++nodes;
      assigned[static_cast<size_t>(best)] = bit + 1;
      size_t mark = trail.size();
      bool dead = false;
      for (int j : nbr[static_cast<size_t>(best)]) {
        if (assigned[static_cast<size_t>(j)] != 0) continue;
        uint32_t b = 1u << bit;
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
      assigned[static_cast<size_t>(best)] = 0;
    }
    return false;
  };

  bool ok = search(search, 0);
  if (stats) stats->nodes += nodes;
  if (!ok) return std::nullopt;
  PartialColoring out = partial;
  for (int i = 0; i < m; ++i)
    out.color[static_cast<size_t>(frontier[static_cast<size_t>(i)])] = assigned[static_cast<size_t>(i)];
  return out;
}

PartialColoring greedy_strong(const PlaneMultigraph& g, const std::vector<int>& order) {
  if (static_cast<int>(order.size()) != g.edge_count())
    fail(Err::InputInvalid, "order has " + std::to_string(order.size()) + " entries, graph has " +
                                std::to_string(g.edge_count()) + " edges");
  std::vector<char> seen_id(static_cast<size_t>(g.edge_count()), 0);
  for (int e : order) {
    check_edge_id(g, e);
    if (seen_id[static_cast<size_t>(e)]) fail(Err::InputInvalid, "order repeats edge " + std::to_string(e));
    seen_id[static_cast<size_t>(e)] = 1;
  }
  PartialColoring c(g.edge_count(), 9);
  std::vector<int> buf;
  int max_used = 0;
  for (int e : order) {
    buf.clear();
    collect_seen(g, e, buf);
    uint64_t banned = 0;
    for (int f : buf) {
      int col = c.color[static_cast<size_t>(f)];
      if (col != 0 && col <= 64) banned |= 1ull << (col - 1);
    }
    int col = 1;
    while (banned & (1ull << (col - 1))) ++col;
    c.color[static_cast<size_t>(e)] = col;
    max_used = std::max(max_used, col);
  }
  c.palette = std::max(9, max_used);
  return c;
}

std::vector<int> induced_matching_lower(const PlaneMultigraph& g, const PartialColoring& c) {
  if (c.palette > 9)
    fail(Err::InvalidColoring, "palette " + std::to_string(c.palette) + " exceeds 9");
  if (!verify_strong(g, c).empty()) fail(Err::InvalidColoring, "coloring has violations");
  std::vector<int> count(static_cast<size_t>(c.palette) + 1, 0);
  for (int e = 0; e < g.edge_count(); ++e) ++count[static_cast<size_t>(c.color[static_cast<size_t>(e)])];
  int best_color = 1;
  for (int col = 2; col <= c.palette; ++col)
    if (count[static_cast<size_t>(col)] > count[static_cast<size_t>(best_color)]) best_color = col;
  std::vector<int> out;
  for (int e = 0; e < g.edge_count(); ++e)
    if (c.color[static_cast<size_t>(e)] == best_color) out.push_back(e);
  // Belt and braces: the class must be an induced matching and meet the bound.
  for (size_t i = 0; i < out.size(); ++i)
    for (size_t j = i + 1; j < out.size(); ++j)
      if (sees(g, out[i], out[j]))
        fail(Err::InternalCounterexample, "largest color class is not an induced matching");
  int need = (g.edge_count() + 8) / 9;
  if (static_cast<int>(out.size()) < need)
    fail(Err::InternalCounterexample, "largest color class smaller than |E|/9");
  return out;
}

}  // namespace sec
