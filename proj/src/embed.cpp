#include "sec/embed.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace sec {

namespace {

// Biconnected components as edge-id lists (a bridge forms a one-edge block).
std::vector<std::vector<int>> blocks_of(int n, const std::vector<Edge>& edges,
                                        const std::vector<std::vector<int>>& inc) {
  std::vector<std::vector<int>> blocks;
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<int> estack;
  std::vector<char> epushed(edges.size(), 0);
  int timer = 0;
  struct Frame {
    int v;
    int parent_edge;
    size_t idx;
  };
  std::vector<Frame> st;
  for (int s = 0; s < n; ++s) {
    if (disc[s] != -1) continue;
    disc[s] = low[s] = timer++;
    st.push_back({s, -1, 0});
    while (!st.empty()) {
      Frame& fr = st.back();
      if (fr.idx < inc[fr.v].size()) {
        int e = inc[fr.v][fr.idx++];
        if (e == fr.parent_edge) continue;
        int w = (edges[e].u == fr.v) ? edges[e].v : edges[e].u;
        if (disc[w] == -1) {
          estack.push_back(e);
          epushed[e] = 1;
          disc[w] = low[w] = timer++;
          st.push_back({w, e, 0});
        } else {
          if (disc[w] < disc[fr.v] && !epushed[e]) {
            estack.push_back(e);
            epushed[e] = 1;
          }
          low[fr.v] = std::min(low[fr.v], disc[w]);
        }
      } else {
        int v = fr.v;
        int pe = fr.parent_edge;
        st.pop_back();
        if (st.empty()) continue;
        int p = st.back().v;
        low[p] = std::min(low[p], low[v]);
        if (low[v] >= disc[p]) {
          // p is a cut vertex (or root): pop the block ending with pe.
          std::vector<int> blk;
          while (true) {
            int e = estack.back();
            estack.pop_back();
            blk.push_back(e);
            if (e == pe) break;
          }
          std::sort(blk.begin(), blk.end());
          blocks.push_back(std::move(blk));
        }
      }
    }
  }
  return blocks;
}

// State for embedding one 2-connected block.
struct BlockEmbedder {
  const std::vector<Edge>& edges;
  const std::vector<std::vector<int>>& inc;  // full-graph incidence
  std::vector<int> block_edges;
  std::vector<char> in_block_e;  // by edge id
  std::vector<char> embedded_e;  // by edge id
  std::vector<char> embedded_v;  // by vertex id
  // Block-local rotations, indexed by global vertex id.  Blocks sharing a cut
  // vertex are embedded independently; the caller concatenates their lists.
  std::vector<std::vector<int>> rot;

  BlockEmbedder(const std::vector<Edge>& es, const std::vector<std::vector<int>>& in, int n)
      : edges(es), inc(in), in_block_e(es.size(), 0), embedded_e(es.size(), 0),
        embedded_v(n, 0), rot(n) {}

  int other(int e, int v) const { return edges[e].u == v ? edges[e].v : edges[e].u; }

  struct FaceW {
    std::vector<std::pair<int, int>> walk;  // (tail vertex, edge)
    std::set<int> verts;
  };

  std::vector<FaceW> faces() const {
    // Trace faces over currently embedded edges only.
    std::vector<FaceW> out;
    std::set<std::pair<int, int>> used;  // (edge, dir)
    for (int e0 : block_edges) {
      if (!embedded_e[e0]) continue;
      for (int d0 = 0; d0 < 2; ++d0) {
        if (used.count({e0, d0})) continue;
        FaceW f;
        int e = e0, d = d0;
        do {
          used.insert({e, d});
          int tail = d == 0 ? edges[e].u : edges[e].v;
          int head = d == 0 ? edges[e].v : edges[e].u;
          f.walk.emplace_back(tail, e);
          f.verts.insert(tail);
          const auto& r = rot[head];
          int pos = -1;
          for (int i = 0; i < static_cast<int>(r.size()); ++i)
            if (r[i] == e) { pos = i; break; }
          int e2 = r[(pos + 1) % r.size()];
          e = e2;
          d = (edges[e2].u == head) ? 0 : 1;
        } while (!(e == e0 && d == d0));
        out.push_back(std::move(f));
      }
    }
    return out;
  }

  // Insert `path` (edge ids forming a path from a to b, interior vertices not
  // yet embedded) into face f.  New edge at each embedded endpoint goes right
  // after the face walk's arriving edge in that endpoint's rotation, which
  // splits the face.
  void insert_path(const FaceW& f, const std::vector<int>& path, int a, int b) {
    auto arriving = [&](int v) {
      for (size_t i = 0; i < f.walk.size(); ++i)
        if (f.walk[i].first == v)
          return f.walk[(i + f.walk.size() - 1) % f.walk.size()].second;
      fail(Err::InternalCounterexample, "face lost an attachment vertex");
    };
    auto insert_after = [&](int v, int after_edge, int new_edge) {
      auto& r = rot[v];
      for (size_t i = 0; i < r.size(); ++i)
        if (r[i] == after_edge) {
          r.insert(r.begin() + i + 1, new_edge);
          return;
        }
      fail(Err::InternalCounterexample, "rotation lost an edge");
    };
    insert_after(a, arriving(a), path.front());
    insert_after(b, arriving(b), path.back());
    int v = a;
    for (size_t i = 0; i + 1 < path.size(); ++i) {
      int w = other(path[i], v);
      rot[w] = {path[i], path[i + 1]};
      embedded_v[w] = 1;
      v = w;
    }
    for (int e : path) embedded_e[e] = 1;
  }

  void seed_cycle() {
    // Build a search tree until a non-tree edge closes a cycle; the cycle is
    // the tree path between the edge's endpoints plus the edge itself (cross
    // edges are possible with a stack-based search, so walk both endpoints up
    // to their meeting vertex instead of assuming ancestry).
    int s = edges[block_edges.front()].u;
    for (int e : block_edges) s = std::min({s, edges[e].u, edges[e].v});
    const int nv = static_cast<int>(embedded_v.size());
    std::vector<int> par_edge(nv, -1);
    std::vector<char> vis(nv, 0);
    std::vector<int> st{s};
    vis[s] = 1;
    int cyc_from = -1, cyc_edge = -1;
    while (!st.empty() && cyc_edge == -1) {
      int v = st.back();
      st.pop_back();
      for (int e : inc[v]) {
        if (!in_block_e[e] || e == par_edge[v]) continue;
        int w = other(e, v);
        if (!vis[w]) {
          vis[w] = 1;
          par_edge[w] = e;
          st.push_back(w);
        } else {
          cyc_from = v;
          cyc_edge = e;
          break;
        }
      }
    }
    if (cyc_edge == -1) fail(Err::InternalCounterexample, "2-connected block without a cycle");
    int target = other(cyc_edge, cyc_from);
    std::vector<int> chain_a{cyc_from};
    {
      int v = cyc_from;
      while (par_edge[v] != -1) {
        v = other(par_edge[v], v);
        chain_a.push_back(v);
      }
    }
    std::vector<int> pos_a(nv, -1);
    for (int i = 0; i < static_cast<int>(chain_a.size()); ++i) pos_a[chain_a[i]] = i;
    std::vector<int> chain_b{target};
    {
      int v = target;
      while (pos_a[v] == -1) {
        v = other(par_edge[v], v);
        chain_b.push_back(v);
      }
    }
    const int meet_pos = pos_a[chain_b.back()];
    // Cycle vertices: cyc_from .. meet along chain_a, then back down chain_b
    // (excluding meet) to target; edge i joins vertex i and vertex i+1 (mod k).
    std::vector<int> cyc_verts(chain_a.begin(), chain_a.begin() + meet_pos + 1);
    std::vector<int> cyc_edges;
    for (int i = 0; i < meet_pos; ++i) cyc_edges.push_back(par_edge[chain_a[i]]);
    for (int i = static_cast<int>(chain_b.size()) - 2; i >= 0; --i) {
      cyc_edges.push_back(par_edge[chain_b[i]]);
      cyc_verts.push_back(chain_b[i]);
    }
    cyc_edges.push_back(cyc_edge);
    const int k = static_cast<int>(cyc_verts.size());
    for (int i = 0; i < k; ++i) {
      int a = cyc_verts[i];
      rot[a] = {cyc_edges[(i + k - 1) % k], cyc_edges[i]};
      embedded_v[a] = 1;
    }
    for (int e : cyc_edges) embedded_e[e] = 1;
  }

  struct Fragment {
    std::vector<int> frag_edges;  // sorted
    std::set<int> attachments;    // embedded vertices touched
    std::vector<int> interior;    // unembedded vertices (may be empty)
  };

  std::vector<Fragment> fragments() const {
    std::vector<Fragment> out;
    // Single unembedded edges between embedded vertices.
    for (int e : block_edges) {
      if (embedded_e[e]) continue;
      if (embedded_v[edges[e].u] && embedded_v[edges[e].v]) {
        Fragment f;
        f.frag_edges = {e};
        f.attachments = {edges[e].u, edges[e].v};
        out.push_back(std::move(f));
      }
    }
    // Components of unembedded block vertices.
    std::set<int> unemb;
    for (int e : block_edges) {
      if (!embedded_v[edges[e].u]) unemb.insert(edges[e].u);
      if (!embedded_v[edges[e].v]) unemb.insert(edges[e].v);
    }
    std::set<int> seen;
    for (int s : unemb) {
      if (seen.count(s)) continue;
      Fragment f;
      std::vector<int> st{s};
      seen.insert(s);
      std::set<int> fedges;
      while (!st.empty()) {
        int v = st.back();
        st.pop_back();
        f.interior.push_back(v);
        for (int e : inc[v]) {
          if (!in_block_e[e]) continue;
          fedges.insert(e);
          int w = other(e, v);
          if (embedded_v[w]) {
            f.attachments.insert(w);
          } else if (!seen.count(w)) {
            seen.insert(w);
            st.push_back(w);
          }
        }
      }
      f.frag_edges.assign(fedges.begin(), fedges.end());
      std::sort(f.interior.begin(), f.interior.end());
      out.push_back(std::move(f));
    }
    std::sort(out.begin(), out.end(),
              [](const Fragment& a, const Fragment& b) { return a.frag_edges < b.frag_edges; });
    return out;
  }

  // Path between two distinct attachments through fragment interior.
  std::vector<int> alpha_path(const Fragment& f, int& a, int& b) const {
    if (f.frag_edges.size() == 1) {
      a = edges[f.frag_edges[0]].u;
      b = edges[f.frag_edges[0]].v;
      return {f.frag_edges[0]};
    }
    a = *f.attachments.begin();
    std::vector<int> par_edge(embedded_v.size(), -1);
    std::vector<char> vis(embedded_v.size(), 0);
    std::vector<int> q;
    // BFS over interior vertices starting with a's fragment edges.
    std::set<int> fset(f.frag_edges.begin(), f.frag_edges.end());
    for (int e : inc[a]) {
      if (!fset.count(e)) continue;
      int w = other(e, a);
      if (!embedded_v[w] && !vis[w]) {
        vis[w] = 1;
        par_edge[w] = e;
        q.push_back(w);
      }
    }
    for (size_t qi = 0; qi < q.size(); ++qi) {
      int v = q[qi];
      for (int e : inc[v]) {
        if (!fset.count(e) || e == par_edge[v]) continue;
        int w = other(e, v);
        if (embedded_v[w]) {
          if (w == a) continue;
          // Reconstruct a..v..w.
          b = w;
          std::vector<int> rev{e};
          int x = v;
          while (x != a) {
            rev.push_back(par_edge[x]);
            x = other(par_edge[x], x);
          }
          std::reverse(rev.begin(), rev.end());
          return rev;
        }
        if (!vis[w]) {
          vis[w] = 1;
          par_edge[w] = e;
          q.push_back(w);
        }
      }
    }
    fail(Err::InternalCounterexample, "fragment with a single attachment in 2-connected block");
  }

  void run(const std::vector<int>& blk) {
    block_edges = blk;
    for (int e : blk) in_block_e[e] = 1;
    if (blk.size() == 1) {
      int e = blk[0];
      rot[edges[e].u].push_back(e);
      rot[edges[e].v].push_back(e);
      return;
    }
    seed_cycle();
    while (true) {
      bool done = true;
      for (int e : block_edges)
        if (!embedded_e[e]) { done = false; break; }
      if (done) break;
      auto frs = fragments();
      auto fcs = faces();
      // Admissible faces per fragment.
      std::vector<std::vector<int>> adm(frs.size());
      for (size_t i = 0; i < frs.size(); ++i) {
        for (size_t j = 0; j < fcs.size(); ++j) {
          bool ok = true;
          for (int v : frs[i].attachments)
            if (!fcs[j].verts.count(v)) { ok = false; break; }
          if (ok) adm[i].push_back(static_cast<int>(j));
        }
        if (adm[i].empty()) {
          std::string att;
          for (int v : frs[i].attachments) att += " " + std::to_string(v);
          fail(Err::NonPlanar, "fragment with attachments{" + att +
                                   " } fits no face of the partial embedding");
        }
      }
      size_t pick = 0;
      for (size_t i = 0; i < frs.size(); ++i)
        if (adm[i].size() == 1) { pick = i; break; }
      int a, b;
      std::vector<int> path = alpha_path(frs[pick], a, b);
      insert_path(fcs[adm[pick][0]], path, a, b);
    }
    for (int e : blk) in_block_e[e] = 0;
  }
};

}  // namespace

PlaneMultigraph embed_edge_list(int n, const std::vector<Edge>& edges) {
  for (size_t e = 0; e < edges.size(); ++e) {
    if (edges[e].u < 0 || edges[e].u >= n || edges[e].v < 0 || edges[e].v >= n)
      fail(Err::IndexOutOfRange, "edge " + std::to_string(e) + " endpoint out of range");
    if (edges[e].u == edges[e].v)
      fail(Err::LoopEdge, "edge " + std::to_string(e) + " is a loop");
  }
  std::vector<std::vector<int>> inc(n);
  for (size_t e = 0; e < edges.size(); ++e) {
    inc[edges[e].u].push_back(static_cast<int>(e));
    inc[edges[e].v].push_back(static_cast<int>(e));
  }
  auto blocks = blocks_of(n, edges, inc);
  std::sort(blocks.begin(), blocks.end());
  // Embed each block independently; rotations concatenate at cut vertices,
  // which is always planar (each block occupies its own corner of the vertex).
  std::vector<std::vector<int>> rot(n);
  for (const auto& blk : blocks) {
    BlockEmbedder be(edges, inc, n);
    be.run(blk);
    for (int e : blk) {
      for (int v : {edges[e].u, edges[e].v}) {
        if (!be.rot[v].empty()) {
          rot[v].insert(rot[v].end(), be.rot[v].begin(), be.rot[v].end());
          be.rot[v].clear();
        }
      }
    }
  }
  PlaneMultigraph g = make_graph(n, edges, std::move(rot));
  return g;
}

}  // namespace sec
