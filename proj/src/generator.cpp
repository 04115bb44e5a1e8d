#include "sec/generator.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "sec/core.hpp"
#include "sec/embed.hpp"

namespace sec {

namespace {

PlaneMultigraph cycle_instance(int k) {
  std::vector<Edge> edges;
  for (int i = 0; i < k; ++i) edges.push_back(Edge{i, (i + 1) % k});
  std::vector<std::vector<int>> rot(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) rot[static_cast<size_t>(i)] = {(i + k - 1) % k, i};
  return make_graph(k, edges, std::move(rot));
}

PlaneMultigraph doubled_edge_path_instance() {
  // Path 0-1-2-3 with the middle edge doubled.
  std::vector<Edge> edges{Edge{0, 1}, Edge{1, 2}, Edge{1, 2}, Edge{2, 3}};
  std::vector<std::vector<int>> rot{{0}, {0, 1, 2}, {1, 2, 3}, {3}};
  return make_graph(4, edges, std::move(rot));
}

}  // namespace

PlaneMultigraph named_instance(const std::string& name) {
  if (name == "prism") {
    return embed_edge_list(6, {Edge{0, 1}, Edge{1, 2}, Edge{2, 0}, Edge{3, 4}, Edge{4, 5},
                               Edge{5, 3}, Edge{0, 3}, Edge{1, 4}, Edge{2, 5}});
  }
  if (name == "k4") {
    return embed_edge_list(4, {Edge{0, 1}, Edge{0, 2}, Edge{0, 3}, Edge{1, 2}, Edge{1, 3},
                               Edge{2, 3}});
  }
  if (name == "cube") {
    std::vector<Edge> edges;
    for (int v = 0; v < 8; ++v)
      for (int b = 0; b < 3; ++b)
        if (v < (v ^ (1 << b))) edges.push_back(Edge{v, v ^ (1 << b)});
    return embed_edge_list(8, edges);
  }
  if (name == "dodecahedron") {
    // Generalized Petersen graph GP(10, 2).
    std::vector<Edge> edges;
    for (int i = 0; i < 10; ++i) edges.push_back(Edge{i, (i + 1) % 10});
    for (int i = 0; i < 10; ++i) edges.push_back(Edge{i, 10 + i});
    for (int i = 0; i < 10; ++i) edges.push_back(Edge{10 + i, 10 + (i + 2) % 10});
    return embed_edge_list(20, edges);
  }
  if (name == "c5") return cycle_instance(5);
  if (name == "c6") return cycle_instance(6);
  if (name == "c7") return cycle_instance(7);
  if (name == "theta") {
    // Two 3-vertices joined by three paths of length two.
    return embed_edge_list(5, {Edge{0, 2}, Edge{2, 1}, Edge{0, 3}, Edge{3, 1}, Edge{0, 4},
                               Edge{4, 1}});
  }
  if (name == "doubled_edge_path") return doubled_edge_path_instance();
  fail(Err::UnknownName, "unknown instance name '" + name + "'");
}

namespace {

double unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * (1.0 / 9007199254740992.0);  // 2^-53
}

struct Grower {
  std::vector<Edge> edges;
  std::vector<std::vector<int>> rot;
  std::mt19937_64 rng;

  explicit Grower(std::uint64_t seed) : rng(seed) {
    edges = {Edge{0, 1}, Edge{1, 2}, Edge{2, 0}};
    rot = {{2, 0}, {0, 1}, {1, 2}};
  }

  int vcount() const { return static_cast<int>(rot.size()); }

  PlaneMultigraph graph() const {
    auto r = rot;
    return make_graph(vcount(), edges, std::move(r));
  }

  int degree(int v) const { return static_cast<int>(rot[static_cast<size_t>(v)].size()); }

  bool adjacent(int a, int b) const {
    for (int e : rot[static_cast<size_t>(a)]) {
      const Edge& ed = edges[static_cast<size_t>(e)];
      if ((ed.u == a && ed.v == b) || (ed.u == b && ed.v == a)) return true;
    }
    return false;
  }

  void subdivide(int e) {
    int w = vcount();
    rot.push_back({});
    int v = edges[static_cast<size_t>(e)].v;
    int ne = static_cast<int>(edges.size());
    edges.push_back(Edge{w, v});
    edges[static_cast<size_t>(e)].v = w;
    for (int& h : rot[static_cast<size_t>(v)])
      if (h == e) h = ne;
    rot[static_cast<size_t>(w)] = {e, ne};
  }

  // Insert previous-edge `prev` must be a current rotation entry at v; the new
  // edge goes right after it, which keeps the face split consistent.
  void insert_after(int v, int prev, int ne) {
    auto& r = rot[static_cast<size_t>(v)];
    auto it = std::find(r.begin(), r.end(), prev);
    r.insert(it + 1, ne);
  }

  void insert_before(int v, int at, int ne) {
    auto& r = rot[static_cast<size_t>(v)];
    auto it = std::find(r.begin(), r.end(), at);
    r.insert(it, ne);
  }

  // Chord between two nonadjacent low-degree vertices on a common face.
  bool try_chord(const PlaneMultigraph& g, const FaceSet& fs) {
    struct Cand {
      int a, b;        // endpoints
      int prev_a, prev_b;  // arriving edges on the face walk
    };
    std::vector<Cand> cands;
    for (const Face& f : fs.faces) {
      int len = f.length();
      for (int i = 0; i < len; ++i)
        for (int j = i + 1; j < len; ++j) {
          int a = dart_tail(g, f.walk[static_cast<size_t>(i)]);
          int b = dart_tail(g, f.walk[static_cast<size_t>(j)]);
          if (a == b || degree(a) > 2 || degree(b) > 2 || adjacent(a, b)) continue;
          cands.push_back(Cand{a, b, f.walk[static_cast<size_t>((i + len - 1) % len)].edge,
                               f.walk[static_cast<size_t>((j + len - 1) % len)].edge});
        }
    }
    if (cands.empty()) return false;
    const Cand& c = cands[static_cast<size_t>(rng() % cands.size())];
    int ne = static_cast<int>(edges.size());
    edges.push_back(Edge{c.a, c.b});
    insert_after(c.a, c.prev_a, ne);
    insert_after(c.b, c.prev_b, ne);
    return true;
  }

  bool try_parallel() {
    std::vector<int> cands;
    for (int e = 0; e < static_cast<int>(edges.size()); ++e)
      if (degree(edges[static_cast<size_t>(e)].u) <= 2 && degree(edges[static_cast<size_t>(e)].v) <= 2)
        cands.push_back(e);
    if (cands.empty()) return false;
    int e = cands[static_cast<size_t>(rng() % cands.size())];
    int ne = static_cast<int>(edges.size());
    edges.push_back(edges[static_cast<size_t>(e)]);
    insert_after(edges[static_cast<size_t>(e)].u, e, ne);
    insert_before(edges[static_cast<size_t>(e)].v, e, ne);
    return true;
  }
};

}  // namespace

PlaneMultigraph generate(const GenSpec& spec) {
  if (spec.target_vertices < 3)
    fail(Err::InfeasibleSpec, "need at least 3 vertices, got " +
                                  std::to_string(spec.target_vertices));
  if (!(spec.two_vertex_fraction >= 0.0 && spec.two_vertex_fraction <= 1.0))
    fail(Err::InfeasibleSpec, "two_vertex_fraction must lie in [0, 1]");
  Grower gr(spec.seed);
  while (gr.vcount() < spec.target_vertices) {
    PlaneMultigraph g = gr.graph();
    if (unit(gr.rng) < spec.two_vertex_fraction) {
      gr.subdivide(static_cast<int>(gr.rng() % gr.edges.size()));
      continue;
    }
    if (spec.allow_parallel && unit(gr.rng) < 0.15 && gr.try_parallel()) continue;
    FaceSet fs = trace_faces(g);
    if (gr.try_chord(g, fs)) continue;
    gr.subdivide(static_cast<int>(gr.rng() % gr.edges.size()));
  }
  PlaneMultigraph out = gr.graph();
  require_subcubic(out);
  return out;
}

}  // namespace sec
