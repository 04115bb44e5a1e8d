#include "sec/discharging.hpp"

#include <algorithm>
#include <string>

#include "sec/core.hpp"

namespace sec {

std::string Fifths::str() const {
  if (num % 5 == 0) return std::to_string(num / 5);
  return std::to_string(num) + "/5";
}

namespace {

void require_charge_input(const PlaneMultigraph& g) {
  auto [comp, count] = components_of(g);
  if (count != 1)
    fail(Err::Disconnected, "charge rules need a connected graph (got " + std::to_string(count) +
                                " components)");
  if (!bridge_edges(g).empty())
    fail(Err::HasBridge, "charge rules need a bridgeless graph (a bridge meets its face twice, "
                         "skewing face lengths)");
}

}  // namespace

ChargeReport charges(const PlaneMultigraph& g) {
  require_charge_input(g);
  ChargeReport r;
  r.faces = trace_faces(g);
  // A single isolated vertex has an empty rotation, hence no darts; its one
  // face is recorded with an empty walk so the identity still reads -12.
  if (g.edge_count() == 0 && r.faces.faces.empty()) r.faces.faces.push_back(Face{});

  r.vertex_initial.resize(static_cast<size_t>(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v)
    r.vertex_initial[static_cast<size_t>(v)] = Fifths::whole(2 * g.degree(v) - 6);
  r.face_initial.resize(r.faces.faces.size());
  for (size_t f = 0; f < r.faces.faces.size(); ++f)
    r.face_initial[f] = Fifths::whole(r.faces.faces[f].length() - 6);
  r.vertex_final = r.vertex_initial;
  r.face_final = r.face_initial;

  // R1: per incidence of a face with a 2-vertex.
  for (size_t f = 0; f < r.faces.faces.size(); ++f)
    for (const Dart& d : r.faces.faces[f].walk) {
      int v = dart_tail(g, d);
      if (g.degree(v) == 2) {
        r.face_final[f] -= Fifths::whole(1);
        r.vertex_final[static_cast<size_t>(v)] += Fifths::whole(1);
      }
    }
  // R2: per edge shared with a 5-face.
  for (int e = 0; e < g.edge_count(); ++e) {
    int f1 = r.faces.side[static_cast<size_t>(e)][0];
    int f2 = r.faces.side[static_cast<size_t>(e)][1];
    if (f1 == f2) continue;  // only at a bridge, which is refused above
    if (r.faces.faces[static_cast<size_t>(f1)].length() == 5) {
      r.face_final[static_cast<size_t>(f2)] -= Fifths::fifths(1);
      r.face_final[static_cast<size_t>(f1)] += Fifths::fifths(1);
    }
    if (r.faces.faces[static_cast<size_t>(f2)].length() == 5) {
      r.face_final[static_cast<size_t>(f1)] -= Fifths::fifths(1);
      r.face_final[static_cast<size_t>(f2)] += Fifths::fifths(1);
    }
  }

  for (const Fifths& c : r.vertex_initial) r.total_initial += c;
  for (const Fifths& c : r.face_initial) r.total_initial += c;
  for (const Fifths& c : r.vertex_final) r.total_final += c;
  for (const Fifths& c : r.face_final) r.total_final += c;
  if (r.total_initial != Fifths::whole(-12) || r.total_final != Fifths::whole(-12))
    fail(Err::InternalCounterexample,
         "charge total is " + r.total_initial.str() + " before and " + r.total_final.str() +
             " after the rules; the Euler identity demands -12");
  return r;
}

namespace {

std::string vertex_list(const std::vector<int>& vs) {
  std::string s;
  for (size_t i = 0; i < vs.size(); ++i) s += (i ? "," : "") + std::to_string(vs[i]);
  return s;
}

// Distances from a source, capped at `cap`.
std::vector<int> bfs_dist(const PlaneMultigraph& g, int src, int cap) {
  std::vector<int> dist(static_cast<size_t>(g.vertex_count()), -1);
  std::vector<int> queue{src};
  dist[static_cast<size_t>(src)] = 0;
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int v = queue[qi];
    if (dist[static_cast<size_t>(v)] >= cap) continue;
    for (int e : g.rot[static_cast<size_t>(v)]) {
      int w = g.other(e, v);
      if (dist[static_cast<size_t>(w)] >= 0) continue;
      dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(v)] + 1;
      queue.push_back(w);
    }
  }
  return dist;
}

}  // namespace

AuditReport audit(const PlaneMultigraph& g) {
  AuditReport rep;
  rep.charge = charges(g);
  const FaceSet& fs = rep.charge.faces;
  auto cycles = simple_cycles_up_to(g, 6);
  std::vector<int> twos;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) == 2) twos.push_back(v);

  auto add = [&](const std::string& name, bool holds, const std::string& witness) {
    rep.predicates.push_back(PredicateResult{name, holds, holds ? "" : witness});
    if (!holds) rep.failing.push_back(name);
  };

  {
    bool holds = true;
    std::string w;
    for (int v = 0; v < g.vertex_count() && holds; ++v) {
      const auto& r = g.rot[static_cast<size_t>(v)];
      for (size_t i = 0; i < r.size() && holds; ++i)
        for (size_t j = i + 1; j < r.size() && holds; ++j)
          if (g.other(r[i], v) == g.other(r[j], v)) {
            holds = false;
            w = "edges " + std::to_string(std::min(r[i], r[j])) + " and " +
                std::to_string(std::max(r[i], r[j])) + " join vertices " + std::to_string(v) +
                " and " + std::to_string(g.other(r[i], v));
          }
    }
    add("no parallel edges", holds, w);
  }
  {
    bool holds = true;
    std::string w;
    for (int v = 0; v < g.vertex_count() && holds; ++v)
      if (g.degree(v) < 2) {
        holds = false;
        w = "vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v));
      }
    add("minimum degree at least 2", holds, w);
  }
  {
    bool holds = true;
    std::string w;
    for (int e = 0; e < g.edge_count() && holds; ++e) {
      for (int f : bridge_edges(g, e)) {
        if (f <= e) continue;
        const Edge& a = g.edges[static_cast<size_t>(e)];
        const Edge& b = g.edges[static_cast<size_t>(f)];
        if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) continue;
        holds = false;
        w = "removing edges " + std::to_string(e) + " and " + std::to_string(f) +
            " disconnects the graph";
        break;
      }
    }
    add("no nonadjacent two-edge cut", holds, w);
  }
  {
    bool holds = true;
    std::string w;
    for (const auto& c : cycles)
      if (c.size() == 3) {
        holds = false;
        w = "triangle " + vertex_list(c);
        break;
      }
    add("no triangles", holds, w);
  }
  {
    bool holds = true;
    std::string w;
    for (const auto& c : cycles)
      if (c.size() == 4) {
        holds = false;
        w = "4-cycle " + vertex_list(c);
        break;
      }
    add("no four-cycles", holds, w);
  }
  {
    bool holds = true;
    std::string w;
    for (size_t i = 0; i < twos.size() && holds; ++i) {
      auto dist = bfs_dist(g, twos[i], 2);
      for (size_t j = i + 1; j < twos.size() && holds; ++j) {
        int d = dist[static_cast<size_t>(twos[j])];
        if (d >= 0 && d <= 2) {
          holds = false;
          w = "2-vertices " + std::to_string(twos[i]) + " and " + std::to_string(twos[j]) +
              " are at distance " + std::to_string(d);
        }
      }
    }
    add("no two 2-vertices at distance at most 2", holds, w);
  }
  {
    bool holds = true;
    std::string w;
    for (const auto& c : cycles) {
      if (c.size() != 5) continue;
      for (int v : c)
        if (g.degree(v) == 2) {
          holds = false;
          w = "2-vertex " + std::to_string(v) + " on 5-cycle " + vertex_list(c);
          break;
        }
      if (!holds) break;
    }
    add("no 2-vertex on a 5-cycle", holds, w);
  }
  {
    bool holds = true;
    std::string w;
    for (size_t i = 0; i < twos.size() && holds; ++i) {
      auto dist = bfs_dist(g, twos[i], 3);
      for (size_t j = i + 1; j < twos.size() && holds; ++j)
        if (dist[static_cast<size_t>(twos[j])] == 3) {
          holds = false;
          w = "2-vertices " + std::to_string(twos[i]) + " and " + std::to_string(twos[j]) +
              " are at distance 3";
        }
    }
    add("no two 2-vertices at distance exactly 3", holds, w);
  }
  {
    bool holds = true;
    std::string w;
    for (const Face& f : fs.faces) {
      int len = f.length();
      std::vector<int> ps;
      for (int p = 0; p < len; ++p)
        if (g.degree(dart_tail(g, f.walk[static_cast<size_t>(p)])) == 2) ps.push_back(p);
      for (size_t i = 0; i < ps.size() && holds; ++i)
        for (size_t j = i + 1; j < ps.size() && holds; ++j) {
          int d = ps[j] - ps[i];
          if (std::min(d, len - d) == 4) {
            holds = false;
            w = "2-vertices " + std::to_string(dart_tail(g, f.walk[static_cast<size_t>(ps[i])])) +
                " and " + std::to_string(dart_tail(g, f.walk[static_cast<size_t>(ps[j])])) +
                " at boundary distance 4 on a " + std::to_string(len) + "-face";
          }
        }
      if (!holds) break;
    }
    add("no two 2-vertices at face-boundary distance 4", holds, w);
  }
  {
    bool holds = true;
    std::string w;
    for (const auto& c : cycles) {
      if (c.size() != 6) continue;
      for (int v : c)
        if (g.degree(v) == 2) {
          holds = false;
          w = "2-vertex " + std::to_string(v) + " on 6-cycle " + vertex_list(c);
          break;
        }
      if (!holds) break;
    }
    add("no 2-vertex on a 6-cycle", holds, w);
  }
  {
    bool holds = true;
    std::string w;
    for (const Face& f : fs.faces) {
      if (f.length() != 7) continue;
      for (const Dart& d : f.walk)
        if (g.degree(dart_tail(g, d)) == 2) {
          holds = false;
          w = "2-vertex " + std::to_string(dart_tail(g, d)) + " on a 7-face";
          break;
        }
      if (!holds) break;
    }
    add("no 2-vertex on a 7-face", holds, w);
  }
  {
    bool holds = true;
    std::string w;
    for (int e = 0; e < g.edge_count() && holds; ++e) {
      int f1 = fs.side[static_cast<size_t>(e)][0], f2 = fs.side[static_cast<size_t>(e)][1];
      if (f1 != f2 && fs.faces[static_cast<size_t>(f1)].length() == 5 &&
          fs.faces[static_cast<size_t>(f2)].length() == 5) {
        holds = false;
        w = "5-faces " + std::to_string(f1) + " and " + std::to_string(f2) + " share edge " +
            std::to_string(e);
      }
    }
    add("no two 5-faces share an edge", holds, w);
  }
  {
    bool holds = true;
    std::string w;
    for (int e = 0; e < g.edge_count() && holds; ++e) {
      int f1 = fs.side[static_cast<size_t>(e)][0], f2 = fs.side[static_cast<size_t>(e)][1];
      if (f1 == f2) continue;
      int l1 = fs.faces[static_cast<size_t>(f1)].length(), l2 = fs.faces[static_cast<size_t>(f2)].length();
      if ((l1 == 5 && l2 == 6) || (l1 == 6 && l2 == 5)) {
        holds = false;
        w = "faces " + std::to_string(f1) + " and " + std::to_string(f2) +
            " of lengths 5 and 6 share edge " + std::to_string(e);
      }
    }
    add("no 5-face shares an edge with a 6-face", holds, w);
  }

  if (rep.failing.empty())
    fail(Err::DetectorGap,
         "all " + std::to_string(rep.predicates.size()) +
             " structural predicates hold, yet the charge total is -12 — some final charge must "
             "be negative, so a reducible configuration exists that this audit failed to name");

  auto cfg = find_configuration(g);
  rep.detector_found = cfg.has_value();
  if (cfg) {
    rep.detector_name = config_kind_name(cfg->kind);
    rep.detector_witness = cfg->summary();
  }
  rep.agreement = rep.detector_found == !rep.failing.empty();
  return rep;
}

}  // namespace sec
