#pragma once

// Shared fixtures and independent reference implementations.  Everything here
// is deliberately naive: straight from the definitions, no shared code with
// the library beyond the graph container itself.

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sec/embed.hpp"
#include "sec/generator.hpp"
#include "sec/planar_multigraph.hpp"

namespace fixtures {

using sec::Edge;
using sec::PlaneMultigraph;

// "sees" by definition: share an endpoint, or some edge shares an endpoint
// with both.
inline bool ref_sees(const PlaneMultigraph& g, int e, int f) {
  if (e == f) return false;
  auto touch = [&](int a, int b) {
    const Edge& x = g.edges[static_cast<size_t>(a)];
    const Edge& y = g.edges[static_cast<size_t>(b)];
    return x.u == y.u || x.u == y.v || x.v == y.u || x.v == y.v;
  };
  if (touch(e, f)) return true;
  for (int h = 0; h < g.edge_count(); ++h)
    if (h != e && h != f && touch(h, e) && touch(h, f)) return true;
  return false;
}

inline bool ref_valid_strong(const PlaneMultigraph& g, const std::vector<int>& col, int k) {
  for (int e = 0; e < g.edge_count(); ++e)
    if (col[static_cast<size_t>(e)] < 1 || col[static_cast<size_t>(e)] > k) return false;
  for (int e = 0; e < g.edge_count(); ++e)
    for (int f = e + 1; f < g.edge_count(); ++f)
      if (col[static_cast<size_t>(e)] == col[static_cast<size_t>(f)] && ref_sees(g, e, f))
        return false;
  return true;
}

// Plain depth-first feasibility test: colors edges in id order, tries colors
// ascending, checks conflicts against all earlier edges.  No ordering
// heuristics, no symmetry breaking.
inline bool ref_colorable(const PlaneMultigraph& g, int k) {
  const int m = g.edge_count();
  std::vector<int> col(static_cast<size_t>(m), 0);
  std::function<bool(int)> go = [&](int e) -> bool {
    if (e == m) return true;
    for (int c = 1; c <= k; ++c) {
      bool ok = true;
      for (int f = 0; f < e && ok; ++f)
        if (col[static_cast<size_t>(f)] == c && ref_sees(g, f, e)) ok = false;
      if (!ok) continue;
      col[static_cast<size_t>(e)] = c;
      if (go(e + 1)) return true;
      col[static_cast<size_t>(e)] = 0;
    }
    return false;
  };
  return go(0);
}

inline int ref_chi_strong(const PlaneMultigraph& g, int kmax = 13) {
  if (g.edge_count() == 0) return 0;
  for (int k = 1; k <= kmax; ++k)
    if (ref_colorable(g, k)) return k;
  return -1;
}

// Independent planarity oracle for subcubic multigraphs: a vertex of degree
// <= 2 has one cyclic order, degree 3 has two, so all rotation systems can be
// enumerated; the graph is planar iff some system satisfies Euler's formula
// on every component.  Face counting walks darts with the same successor
// convention the library documents.
namespace detail {

inline int count_faces(int n, const std::vector<Edge>& edges,
                       const std::vector<std::vector<int>>& rot) {
  const int m = static_cast<int>(edges.size());
  std::vector<std::vector<int>> pos(static_cast<size_t>(n));
  std::vector<char> used(static_cast<size_t>(2 * m), 0);
  auto dart_id = [&](int e, int dir) { return 2 * e + dir; };
  int faces = 0;
  for (int start = 0; start < 2 * m; ++start) {
    if (used[static_cast<size_t>(start)]) continue;
    ++faces;
    int e = start / 2, dir = start % 2;
    while (!used[static_cast<size_t>(dart_id(e, dir))]) {
      used[static_cast<size_t>(dart_id(e, dir))] = 1;
      int head = dir == 0 ? edges[static_cast<size_t>(e)].v : edges[static_cast<size_t>(e)].u;
      const auto& r = rot[static_cast<size_t>(head)];
      size_t at = 0;
      while (r[at] != e) ++at;
      int ne = r[(at + 1) % r.size()];
      e = ne;
      dir = edges[static_cast<size_t>(ne)].u == head ? 0 : 1;
    }
  }
  return faces;
}

}  // namespace detail

inline bool oracle_planar_subcubic(int n, const std::vector<Edge>& edges) {
  std::vector<std::vector<int>> base(static_cast<size_t>(n));
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    base[static_cast<size_t>(edges[static_cast<size_t>(e)].u)].push_back(e);
    base[static_cast<size_t>(edges[static_cast<size_t>(e)].v)].push_back(e);
  }
  std::vector<int> deg3;
  for (int v = 0; v < n; ++v) {
    if (base[static_cast<size_t>(v)].size() > 3) return false;
    if (base[static_cast<size_t>(v)].size() == 3) deg3.push_back(v);
  }
  // Components and per-component vertex/edge counts for the Euler check.
  std::vector<int> comp(static_cast<size_t>(n), -1);
  int ncomp = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[static_cast<size_t>(s)] != -1) continue;
    std::vector<int> st{s};
    comp[static_cast<size_t>(s)] = ncomp;
    while (!st.empty()) {
      int v = st.back();
      st.pop_back();
      for (int e : base[static_cast<size_t>(v)]) {
        int w = edges[static_cast<size_t>(e)].u == v ? edges[static_cast<size_t>(e)].v
                                                     : edges[static_cast<size_t>(e)].u;
        if (comp[static_cast<size_t>(w)] == -1) {
          comp[static_cast<size_t>(w)] = ncomp;
          st.push_back(w);
        }
      }
    }
    ++ncomp;
  }
  // Genus is additive over components; checking the whole graph at once with
  // per-component Euler sums is equivalent to requiring total faces to match.
  int expected_faces = 0;
  {
    std::vector<int> vc(static_cast<size_t>(ncomp), 0), ec(static_cast<size_t>(ncomp), 0);
    for (int v = 0; v < n; ++v) ++vc[static_cast<size_t>(comp[static_cast<size_t>(v)])];
    for (const Edge& e : edges) ++ec[static_cast<size_t>(comp[static_cast<size_t>(e.u)])];
    for (int c = 0; c < ncomp; ++c) {
      if (vc[static_cast<size_t>(c)] == 1 && ec[static_cast<size_t>(c)] == 0) continue;  // no darts
      expected_faces += 2 - vc[static_cast<size_t>(c)] + ec[static_cast<size_t>(c)];
    }
  }
  if (edges.empty()) return true;
  const size_t combos = size_t{1} << deg3.size();
  for (size_t mask = 0; mask < combos; ++mask) {
    auto rot = base;
    for (size_t i = 0; i < deg3.size(); ++i)
      if (mask & (size_t{1} << i)) {
        auto& r = rot[static_cast<size_t>(deg3[i])];
        std::swap(r[1], r[2]);
      }
    if (detail::count_faces(n, edges, rot) == expected_faces) return true;
  }
  return false;
}

// All connected subcubic simple graphs on exactly n labeled vertices.
inline void enumerate_connected_subcubic_simple(
    int n, const std::function<void(int, const std::vector<Edge>&)>& emit) {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
  std::vector<Edge> chosen;
  std::vector<int> deg(static_cast<size_t>(n), 0);
  std::function<void(size_t)> go = [&](size_t i) {
    if (i == pairs.size()) {
      // Connectivity.
      if (n > 1 && chosen.empty()) return;
      std::vector<std::vector<int>> adj(static_cast<size_t>(n));
      for (const Edge& e : chosen) {
        adj[static_cast<size_t>(e.u)].push_back(e.v);
        adj[static_cast<size_t>(e.v)].push_back(e.u);
      }
      std::vector<char> vis(static_cast<size_t>(n), 0);
      std::vector<int> st{0};
      vis[0] = 1;
      int seen = 1;
      while (!st.empty()) {
        int v = st.back();
        st.pop_back();
        for (int w : adj[static_cast<size_t>(v)])
          if (!vis[static_cast<size_t>(w)]) {
            vis[static_cast<size_t>(w)] = 1;
            ++seen;
            st.push_back(w);
          }
      }
      if (seen != n) return;
      emit(n, chosen);
      return;
    }
    go(i + 1);
    auto [a, b] = pairs[i];
    if (deg[static_cast<size_t>(a)] < 3 && deg[static_cast<size_t>(b)] < 3) {
      chosen.push_back(Edge{a, b});
      ++deg[static_cast<size_t>(a)];
      ++deg[static_cast<size_t>(b)];
      go(i + 1);
      chosen.pop_back();
      --deg[static_cast<size_t>(a)];
      --deg[static_cast<size_t>(b)];
    }
  };
  go(0);
}

// All connected subcubic loopless multigraphs on exactly n labeled vertices
// with edge multiplicity up to 3.
inline void enumerate_connected_subcubic_multi(
    int n, const std::function<void(int, const std::vector<Edge>&)>& emit) {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
  std::vector<Edge> chosen;
  std::vector<int> deg(static_cast<size_t>(n), 0);
  std::function<void(size_t)> go = [&](size_t i) {
    if (i == pairs.size()) {
      std::vector<std::vector<int>> adj(static_cast<size_t>(n));
      for (const Edge& e : chosen) {
        adj[static_cast<size_t>(e.u)].push_back(e.v);
        adj[static_cast<size_t>(e.v)].push_back(e.u);
      }
      std::vector<char> vis(static_cast<size_t>(n), 0);
      std::vector<int> st{0};
      vis[0] = 1;
      int seen = 1;
      while (!st.empty()) {
        int v = st.back();
        st.pop_back();
        for (int w : adj[static_cast<size_t>(v)])
          if (!vis[static_cast<size_t>(w)]) {
            vis[static_cast<size_t>(w)] = 1;
            ++seen;
            st.push_back(w);
          }
      }
      if (seen != n) return;
      emit(n, chosen);
      return;
    }
    auto [a, b] = pairs[i];
    for (int mult = 0; mult <= 3; ++mult) {
      if (deg[static_cast<size_t>(a)] + mult > 3 || deg[static_cast<size_t>(b)] + mult > 3) break;
      for (int t = 0; t < mult; ++t) chosen.push_back(Edge{a, b});
      deg[static_cast<size_t>(a)] += mult;
      deg[static_cast<size_t>(b)] += mult;
      go(i + 1);
      deg[static_cast<size_t>(a)] -= mult;
      deg[static_cast<size_t>(b)] -= mult;
      for (int t = 0; t < mult; ++t) chosen.pop_back();
    }
  };
  go(0);
}

// --- hand-built plane graphs ---

inline PlaneMultigraph path_graph(int k) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < k; ++i) edges.push_back(Edge{i, i + 1});
  std::vector<std::vector<int>> rot(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) {
    if (i > 0) rot[static_cast<size_t>(i)].push_back(i - 1);
    if (i + 1 < k) rot[static_cast<size_t>(i)].push_back(i);
  }
  return sec::make_graph(k, edges, std::move(rot));
}

inline PlaneMultigraph cycle_graph(int k) {
  std::vector<Edge> edges;
  for (int i = 0; i < k; ++i) edges.push_back(Edge{i, (i + 1) % k});
  std::vector<std::vector<int>> rot(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) rot[static_cast<size_t>(i)] = {(i + k - 1) % k, i};
  return sec::make_graph(k, edges, std::move(rot));
}

inline std::vector<Edge> petersen_edges() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) edges.push_back(Edge{i, (i + 1) % 5});
  for (int i = 0; i < 5; ++i) edges.push_back(Edge{i, 5 + i});
  for (int i = 0; i < 5; ++i) edges.push_back(Edge{5 + i, 5 + (i + 2) % 5});
  return edges;
}

inline std::vector<Edge> k33_edges() {
  std::vector<Edge> edges;
  for (int a = 0; a < 3; ++a)
    for (int b = 3; b < 6; ++b) edges.push_back(Edge{a, b});
  return edges;
}

// Icosahedron: apex 0, upper ring 1..5, lower ring 6..10, apex 11.
inline std::vector<Edge> icosahedron_edges() {
  std::vector<Edge> ico;
  auto up = [](int i) { return 1 + (i % 5); };
  auto lo = [](int i) { return 6 + (i % 5); };
  for (int i = 0; i < 5; ++i) ico.push_back(Edge{0, up(i)});
  for (int i = 0; i < 5; ++i) ico.push_back(Edge{up(i), up(i + 1)});
  for (int i = 0; i < 5; ++i) ico.push_back(Edge{up(i), lo(i)});
  for (int i = 0; i < 5; ++i) ico.push_back(Edge{up(i), lo(i + 1)});
  for (int i = 0; i < 5; ++i) ico.push_back(Edge{lo(i), lo(i + 1)});
  for (int i = 0; i < 5; ++i) ico.push_back(Edge{lo(i), 11});
  return ico;
}

// Truncated icosahedron (the C60 fullerene): every icosahedron vertex becomes
// a pentagon, every original edge survives as a "radial" edge between the two
// pentagon corners created for it.  12 pentagons, 20 hexagons, 3-regular.
inline PlaneMultigraph truncated_icosahedron() {
  PlaneMultigraph base = sec::embed_edge_list(12, icosahedron_edges());

  const int n0 = base.vertex_count();
  const int m0 = base.edge_count();
  std::vector<int> off(static_cast<size_t>(n0) + 1, 0);
  for (int v = 0; v < n0; ++v) off[static_cast<size_t>(v) + 1] = off[static_cast<size_t>(v)] + base.degree(v);
  auto vid = [&](int v, int i) {
    int d = base.degree(v);
    return off[static_cast<size_t>(v)] + (((i % d) + d) % d);
  };
  // Pentagon edge (v,i)-(v,i+1) follows all radial edges, grouped by v.
  auto pid = [&](int v, int i) {
    int d = base.degree(v);
    return m0 + off[static_cast<size_t>(v)] + (((i % d) + d) % d);
  };
  std::vector<Edge> edges;
  for (int e = 0; e < m0; ++e) {
    int u = base.edges[static_cast<size_t>(e)].u;
    int v = base.edges[static_cast<size_t>(e)].v;
    edges.push_back(Edge{vid(u, base.rot_pos(u, e)), vid(v, base.rot_pos(v, e))});
  }
  for (int v = 0; v < n0; ++v)
    for (int i = 0; i < base.degree(v); ++i) edges.push_back(Edge{vid(v, i), vid(v, i + 1)});
  std::vector<std::vector<int>> rot(static_cast<size_t>(off[static_cast<size_t>(n0)]));
  for (int v = 0; v < n0; ++v)
    for (int i = 0; i < base.degree(v); ++i)
      rot[static_cast<size_t>(vid(v, i))] = {pid(v, i - 1), base.rot[static_cast<size_t>(v)][static_cast<size_t>(i)],
                                             pid(v, i)};
  return sec::make_graph(off[static_cast<size_t>(n0)], std::move(edges), std::move(rot));
}

// Subdivide edge e: new vertex w; e keeps its id and its u endpoint, the new
// edge (w, old v) replaces e in the rotation at old v.
inline PlaneMultigraph subdivide_edge(const PlaneMultigraph& g, int e) {
  std::vector<Edge> edges = g.edges;
  auto rot = g.rot;
  int w = g.vertex_count();
  int v = edges[static_cast<size_t>(e)].v;
  int ne = g.edge_count();
  edges[static_cast<size_t>(e)].v = w;
  edges.push_back(Edge{w, v});
  rot.push_back({e, ne});
  rot[static_cast<size_t>(v)][static_cast<size_t>(g.rot_pos(v, e))] = ne;
  return sec::make_graph(w + 1, std::move(edges), std::move(rot));
}

// Remove vertex v and its edges, compact ids, re-embed.
inline PlaneMultigraph delete_vertex(const PlaneMultigraph& g, int v) {
  std::vector<Edge> edges;
  for (const Edge& ed : g.edges)
    if (ed.u != v && ed.v != v)
      edges.push_back(Edge{ed.u - (ed.u > v ? 1 : 0), ed.v - (ed.v > v ? 1 : 0)});
  return sec::embed_edge_list(g.vertex_count() - 1, edges);
}

// One hand-crafted instance per configuration kind, arranged so that
// find_configuration reports exactly that kind (all earlier kinds absent).
inline PlaneMultigraph instance_for_kind(int kind) {
  using sec::named_instance;
  using sec::trace_faces;
  switch (kind) {
    case 0: {  // Disconnected: two triangles
      std::vector<Edge> edges{{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}};
      std::vector<std::vector<int>> rot{{2, 0}, {0, 1}, {1, 2}, {5, 3}, {3, 4}, {4, 5}};
      return sec::make_graph(6, edges, rot);
    }
    case 1:  // ParallelEdge
      return named_instance("doubled_edge_path");
    case 2:  // DegreeLeqOne
      return path_graph(3);
    case 3:  // CutEdge: two triangles joined by a bridge
      return sec::embed_edge_list(
          6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {2, 3}});
    case 4:  // NonAdjacentTwoEdgeCut: two triangles joined by two disjoint edges
      return sec::embed_edge_list(
          6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}});
    case 5:  // TriangleWith2Vertex: K4 minus one edge
      return sec::embed_edge_list(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
    case 6:  // Triangle with all 3-vertices
      return named_instance("prism");
    case 7:  // FourCycleWith2Vertex: K_{2,3}
      return sec::embed_edge_list(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
    case 8:  // FourCycle with all 3-vertices
      return named_instance("cube");
    case 9: {  // TwoVerticesAtDistance1or2: two subdivisions at a common vertex
      PlaneMultigraph g = named_instance("dodecahedron");
      int e1 = g.rot[0][0], e2 = g.rot[0][1];
      return subdivide_edge(subdivide_edge(g, e1), e2);
    }
    case 10:  // TwoVertexOn5Face: dodecahedron minus a vertex
      return delete_vertex(named_instance("dodecahedron"), 0);
    case 11: {  // TwoVerticesAtDistance3: subdivide face edges one step apart
      PlaneMultigraph g = named_instance("dodecahedron");
      sec::FaceSet fs = trace_faces(g);
      int e1 = fs.faces[0].walk[0].edge, e2 = fs.faces[0].walk[2].edge;
      return subdivide_edge(subdivide_edge(g, e1), e2);
    }
    case 12: {  // FaceBoundaryDistance4Pair: subdivide hexagon edges 3 apart
      PlaneMultigraph g = truncated_icosahedron();
      sec::FaceSet fs = trace_faces(g);
      for (const sec::Face& f : fs.faces) {
        if (f.length() != 6) continue;
        int e1 = f.walk[0].edge, e2 = f.walk[3].edge;
        return subdivide_edge(subdivide_edge(g, e1), e2);
      }
      return g;  // unreachable
    }
    case 13: {  // TwoVertexOn6Face: dodecahedron with one subdivided edge
      PlaneMultigraph g = named_instance("dodecahedron");
      return subdivide_edge(g, 0);
    }
    case 14: {  // TwoVertexOn7Face: subdivide a hexagon-hexagon edge of C60
      PlaneMultigraph g = truncated_icosahedron();
      sec::FaceSet fs = trace_faces(g);
      for (int e = 0; e < g.edge_count(); ++e) {
        int f1 = fs.side[static_cast<size_t>(e)][0], f2 = fs.side[static_cast<size_t>(e)][1];
        if (fs.faces[static_cast<size_t>(f1)].length() == 6 &&
            fs.faces[static_cast<size_t>(f2)].length() == 6)
          return subdivide_edge(g, e);
      }
      return g;  // unreachable
    }
    case 15:  // AdjacentFiveFiveFaces
      return named_instance("dodecahedron");
    case 16:  // FiveSixAdjacentFaces
      return truncated_icosahedron();
    default:
      return path_graph(2);
  }
}

}  // namespace fixtures
