#include "sec/planar_multigraph.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <queue>
#include <string>

namespace sec {

const char* err_name(Err e) {
  switch (e) {
    case Err::LoopEdge: return "LoopEdge";
    case Err::IndexOutOfRange: return "IndexOutOfRange";
    case Err::RotationMismatch: return "RotationMismatch";
    case Err::NonPlanar: return "NonPlanar";
    case Err::NotOnFace: return "NotOnFace";
    case Err::SyntaxError: return "SyntaxError";
    case Err::ColorOutOfRange: return "ColorOutOfRange";
    case Err::UncoloredEdge: return "UncoloredEdge";
    case Err::AlreadyColored: return "AlreadyColored";
    case Err::FrontierTooLarge: return "FrontierTooLarge";
    case Err::TooLarge: return "TooLarge";
    case Err::UnknownName: return "UnknownName";
    case Err::InfeasibleSpec: return "InfeasibleSpec";
    case Err::Disconnected: return "Disconnected";
    case Err::HasBridge: return "HasBridge";
    case Err::InvalidColoring: return "InvalidColoring";
    case Err::InputInvalid: return "InputInvalid";
    case Err::InvalidConfiguration: return "InvalidConfiguration";
    case Err::ExtensionImpossible: return "ExtensionImpossible";
    case Err::DetectorGap: return "DetectorGap";
    case Err::InternalCounterexample: return "InternalCounterexample";
  }
  return "Unknown";
}

int PlaneMultigraph::rot_pos(int v, int e) const {
  const auto& r = rot[v];
  for (int i = 0; i < static_cast<int>(r.size()); ++i)
    if (r[i] == e) return i;
  fail(Err::RotationMismatch,
       "edge " + std::to_string(e) + " not in rotation of vertex " + std::to_string(v));
}

void validate_graph(const PlaneMultigraph& g) {
  const int n = g.vertex_count();
  const int m = g.edge_count();
  for (int e = 0; e < m; ++e) {
    const auto& ed = g.edges[e];
    if (ed.u < 0 || ed.u >= n || ed.v < 0 || ed.v >= n)
      fail(Err::IndexOutOfRange, "edge " + std::to_string(e) + " endpoint out of range");
    if (ed.u == ed.v) fail(Err::LoopEdge, "edge " + std::to_string(e) + " is a loop");
  }
  // Each edge must occur exactly once in the rotation of each endpoint and
  // nowhere else.
  std::vector<int> seen_at_u(m, 0), seen_at_v(m, 0);
  for (int v = 0; v < n; ++v) {
    for (int e : g.rot[v]) {
      if (e < 0 || e >= m)
        fail(Err::IndexOutOfRange,
             "rotation of vertex " + std::to_string(v) + " names edge " + std::to_string(e));
      if (g.edges[e].u == v)
        ++seen_at_u[e];
      else if (g.edges[e].v == v)
        ++seen_at_v[e];
      else
        fail(Err::RotationMismatch, "vertex " + std::to_string(v) +
                                        " lists non-incident edge " + std::to_string(e));
    }
  }
  for (int e = 0; e < m; ++e)
    if (seen_at_u[e] != 1 || seen_at_v[e] != 1)
      fail(Err::RotationMismatch,
           "edge " + std::to_string(e) + " must appear exactly once per endpoint rotation");

  // Genus check: on every component with at least one edge, V - E + F = 2.
  auto [comp, ncomp] = components_of(g);
  FaceSet fs = trace_faces(g);
  std::vector<int> cv(ncomp, 0), ce(ncomp, 0), cf(ncomp, 0);
  for (int v = 0; v < n; ++v) ++cv[comp[v]];
  for (int e = 0; e < m; ++e) ++ce[comp[g.edges[e].u]];
  for (const Face& f : fs.faces) ++cf[comp[dart_tail(g, f.walk.front())]];
  for (int c = 0; c < ncomp; ++c) {
    if (ce[c] == 0) continue;  // isolated vertex: no darts, nothing to check
    if (cv[c] - ce[c] + cf[c] != 2)
      fail(Err::NonPlanar, "rotation system has genus > 0 on component " + std::to_string(c) +
                               " (V=" + std::to_string(cv[c]) + " E=" + std::to_string(ce[c]) +
                               " F=" + std::to_string(cf[c]) + ")");
  }
}

PlaneMultigraph make_graph(int n, std::vector<Edge> edges,
                           std::vector<std::vector<int>> rotations) {
  if (n < 0) fail(Err::IndexOutOfRange, "negative vertex count");
  if (static_cast<int>(rotations.size()) != n)
    fail(Err::RotationMismatch, "rotation list count differs from vertex count");
  PlaneMultigraph g;
  g.edges = std::move(edges);
  g.rot = std::move(rotations);
  validate_graph(g);
  return g;
}

void require_subcubic(const PlaneMultigraph& g) {
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) > 3)
      fail(Err::InputInvalid, "vertex " + std::to_string(v) + " has degree " +
                                  std::to_string(g.degree(v)) + " > 3");
}

FaceSet trace_faces(const PlaneMultigraph& g) {
  const int m = g.edge_count();
  FaceSet fs;
  fs.side.assign(m, {-1, -1});
  fs.faces_at_vertex.assign(g.vertex_count(), {});
  std::vector<std::array<char, 2>> used(m, {0, 0});
  for (int e0 = 0; e0 < m; ++e0) {
    for (int d0 = 0; d0 < 2; ++d0) {
      if (used[e0][d0]) continue;
      Face f;
      Dart d{e0, d0};
      do {
        used[d.edge][d.dir] = 1;
        fs.side[d.edge][d.dir] = static_cast<int>(fs.faces.size());
        f.walk.push_back(d);
        int w = dart_head(g, d);
        int pos = g.rot_pos(w, d.edge);
        int e2 = g.rot[w][(pos + 1) % g.degree(w)];
        d = Dart{e2, g.edges[e2].u == w ? 0 : 1};
      } while (!(d.edge == e0 && d.dir == d0));
      fs.faces.push_back(std::move(f));
    }
  }
  for (int fi = 0; fi < static_cast<int>(fs.faces.size()); ++fi) {
    std::vector<int> vs = face_vertices(g, fs.faces[fi]);
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    for (int v : vs) fs.faces_at_vertex[v].push_back(fi);
  }
  return fs;
}

std::vector<int> face_vertices(const PlaneMultigraph& g, const Face& f) {
  std::vector<int> out;
  out.reserve(f.walk.size());
  for (Dart d : f.walk) out.push_back(dart_tail(g, d));
  return out;
}

int boundary_distance(const PlaneMultigraph& g, const Face& f, int v1, int v2) {
  const int len = f.length();
  std::vector<int> occ1, occ2;
  for (int i = 0; i < len; ++i) {
    int t = dart_tail(g, f.walk[i]);
    if (t == v1) occ1.push_back(i);
    if (t == v2) occ2.push_back(i);
  }
  if (occ1.empty()) fail(Err::NotOnFace, "vertex " + std::to_string(v1) + " not on face");
  if (occ2.empty()) fail(Err::NotOnFace, "vertex " + std::to_string(v2) + " not on face");
  int best = len;
  for (int i : occ1)
    for (int j : occ2) {
      int d = std::abs(i - j);
      best = std::min(best, std::min(d, len - d));
    }
  return best;
}

std::pair<std::vector<int>, int> components_of(const PlaneMultigraph& g) {
  const int n = g.vertex_count();
  std::vector<int> comp(n, -1);
  int ncomp = 0;
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    comp[s] = ncomp;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int e : g.rot[v]) {
        int w = g.other(e, v);
        if (comp[w] == -1) {
          comp[w] = ncomp;
          stack.push_back(w);
        }
      }
    }
    ++ncomp;
  }
  return {comp, ncomp};
}

std::vector<int> bridge_edges(const PlaneMultigraph& g, int skip_edge) {
  const int n = g.vertex_count();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<int> bridges;
  int timer = 0;
  // Iterative DFS; the entry edge id (not the parent vertex) is excluded so
  // parallel edges correctly cancel bridge-ness.
  struct Frame {
    int v;
    int parent_edge;
    size_t idx;
  };
  std::vector<Frame> st;
  for (int s = 0; s < n; ++s) {
    if (disc[s] != -1) continue;
    st.push_back({s, -1, 0});
    disc[s] = low[s] = timer++;
    while (!st.empty()) {
      Frame& fr = st.back();
      if (fr.idx < g.rot[fr.v].size()) {
        int e = g.rot[fr.v][fr.idx++];
        if (e == fr.parent_edge || e == skip_edge) continue;
        int w = g.other(e, fr.v);
        if (disc[w] == -1) {
          disc[w] = low[w] = timer++;
          st.push_back({w, e, 0});
        } else {
          low[fr.v] = std::min(low[fr.v], disc[w]);
        }
      } else {
        int v = fr.v;
        int pe = fr.parent_edge;
        st.pop_back();
        if (!st.empty()) {
          int p = st.back().v;
          low[p] = std::min(low[p], low[v]);
          if (low[v] > disc[p]) bridges.push_back(pe);
        }
      }
    }
  }
  std::sort(bridges.begin(), bridges.end());
  return bridges;
}

std::vector<std::vector<int>> simple_cycles_up_to(const PlaneMultigraph& g, int max_len) {
  // Canonical form: the cycle's lowest vertex first; among the two directions
  // keep the one whose second vertex is smaller than its last.  Enumerate by
  // DFS from each start s using only vertices > s, closing back to s.
  const int n = g.vertex_count();
  std::vector<std::vector<int>> out;
  std::vector<int> path;
  std::vector<char> on_path(n, 0);
  // Deduplicate neighbor multi-edges: vertex sequences ignore edge identity.
  auto neighbors = [&](int v) {
    std::vector<int> ns;
    for (int e : g.rot[v]) ns.push_back(g.other(e, v));
    std::sort(ns.begin(), ns.end());
    ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
    return ns;
  };
  std::vector<std::vector<int>> adj(n);
  for (int v = 0; v < n; ++v) adj[v] = neighbors(v);

  std::function<void(int, int)> walk = [&](int s, int v) {
    for (int w : adj[v]) {
      if (w == s) {
        if (path.size() >= 3 && path[1] < path.back()) out.push_back(path);
        continue;
      }
      if (w < s || on_path[w]) continue;
      if (static_cast<int>(path.size()) >= max_len) continue;
      on_path[w] = 1;
      path.push_back(w);
      walk(s, w);
      path.pop_back();
      on_path[w] = 0;
    }
  };
  for (int s = 0; s < n; ++s) {
    path = {s};
    on_path.assign(n, 0);
    on_path[s] = 1;
    walk(s, s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<int> exact_girth(const PlaneMultigraph& g) {
  const int n = g.vertex_count();
  // Parallel pair => girth 2.
  std::vector<std::pair<int, int>> pairs;
  for (const Edge& e : g.edges)
    pairs.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
  std::sort(pairs.begin(), pairs.end());
  for (size_t i = 1; i < pairs.size(); ++i)
    if (pairs[i] == pairs[i - 1]) return 2;
  // Simple-graph girth by BFS from every vertex.
  int best = -1;
  std::vector<int> dist(n), par(n);
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::queue<int> q;
    dist[s] = 0;
    par[s] = -1;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int e : g.rot[v]) {
        int w = g.other(e, v);
        if (dist[w] == -1) {
          dist[w] = dist[v] + 1;
          par[w] = v;
          q.push(w);
        } else if (par[v] != w) {
          // Non-tree edge: closed walk through s of length dist[v]+dist[w]+1.
          // Every such walk contains a simple cycle no longer than it, and for
          // a start on a shortest cycle the bound is attained, so the global
          // minimum is the girth.  The tree edge back to the parent is skipped
          // by vertex id; a second v-w edge would be a parallel pair, already
          // handled above.
          int c = dist[v] + dist[w] + 1;
          if (best == -1 || c < best) best = c;
        }
      }
    }
  }
  if (best == -1) return std::nullopt;
  return best;
}

StructureReport structure_report(const PlaneMultigraph& g) {
  StructureReport r;
  const int n = g.vertex_count();
  r.degree.resize(n);
  for (int v = 0; v < n; ++v) r.degree[v] = g.degree(v);
  auto [comp, ncomp] = components_of(g);
  r.component = comp;
  r.component_count = ncomp;
  r.bridges = bridge_edges(g);
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) == 2) r.two_vertices.push_back(v);
    if (g.degree(v) <= 1) r.low_vertices.push_back(v);
  }
  std::map<std::pair<int, int>, int> first;
  for (int e = 0; e < g.edge_count(); ++e) {
    auto key = std::make_pair(std::min(g.edges[e].u, g.edges[e].v),
                              std::max(g.edges[e].u, g.edges[e].v));
    auto it = first.find(key);
    if (it == first.end())
      first[key] = e;
    else
      r.parallel_pairs.push_back(e);
  }
  r.short_cycles = simple_cycles_up_to(g, 7);
  r.girth = exact_girth(g);
  return r;
}

}  // namespace sec
