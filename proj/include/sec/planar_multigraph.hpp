#pragma once

#include <array>
#include <optional>
#include <vector>

#include "sec/core.hpp"

namespace sec {

// Endpoints of an edge.  Parallel edges are distinct edge ids with the same
// endpoint set; loops are rejected everywhere.
struct Edge {
  int u = -1;
  int v = -1;
};

// A plane multigraph: the abstract multigraph plus a rotation system (the
// cyclic order of incident edge ids around every vertex).  Because the graph
// is loopless, a dart is identified by (edge id, direction); direction 0
// leaves edges[e].u, direction 1 leaves edges[e].v.
struct PlaneMultigraph {
  std::vector<Edge> edges;
  std::vector<std::vector<int>> rot;  // rot[v] = incident edge ids in cyclic order

  int vertex_count() const { return static_cast<int>(rot.size()); }
  int edge_count() const { return static_cast<int>(edges.size()); }
  int degree(int v) const { return static_cast<int>(rot[v].size()); }
  int other(int e, int v) const { return edges[e].u == v ? edges[e].v : edges[e].u; }
  bool incident(int e, int v) const { return edges[e].u == v || edges[e].v == v; }
  // Position of edge e in the rotation at endpoint v (each edge occurs exactly
  // once per endpoint, validated at construction).
  int rot_pos(int v, int e) const;
};

// Validates and returns the graph: ids in range, loopless, every edge listed
// exactly once in the rotation of each endpoint, and the rotation system has
// genus 0 (Euler's formula holds on every component with at least one edge).
PlaneMultigraph make_graph(int n, std::vector<Edge> edges,
                           std::vector<std::vector<int>> rotations);

// Same checks as make_graph on an already-assembled struct.
void validate_graph(const PlaneMultigraph& g);

// Entry points that color or discharge require degree <= 3.
void require_subcubic(const PlaneMultigraph& g);

struct Dart {
  int edge = -1;
  int dir = 0;  // 0: leaves edges[edge].u, 1: leaves edges[edge].v
};
inline int dart_tail(const PlaneMultigraph& g, Dart d) {
  return d.dir == 0 ? g.edges[d.edge].u : g.edges[d.edge].v;
}
inline int dart_head(const PlaneMultigraph& g, Dart d) {
  return d.dir == 0 ? g.edges[d.edge].v : g.edges[d.edge].u;
}

// One face of the embedding: the closed dart walk.  Convention: leaving v
// along e, the walk continues at the far endpoint w along the successor of e
// in the rotation at w.  A bridge has both darts on the same face, so its
// edge counts twice toward that face's length.
struct Face {
  std::vector<Dart> walk;
  int length() const { return static_cast<int>(walk.size()); }
};

struct FaceSet {
  std::vector<Face> faces;
  // For each edge, the face ids containing dart dir 0 / dir 1.
  std::vector<std::array<int, 2>> side;
  // face_of_vertex entries: every face whose walk leaves v at least once.
  std::vector<std::vector<int>> faces_at_vertex;
};

FaceSet trace_faces(const PlaneMultigraph& g);

// Vertex sequence of a face walk (tails in walk order).
std::vector<int> face_vertices(const PlaneMultigraph& g, const Face& f);

// Minimum number of boundary edges separating occurrences of v1 and v2 along
// the face walk, in either direction.  Errors with NotOnFace if a vertex does
// not occur on the walk.
int boundary_distance(const PlaneMultigraph& g, const Face& f, int v1, int v2);

struct StructureReport {
  std::vector<int> degree;
  std::vector<int> component;  // component id per vertex
  int component_count = 0;
  std::vector<int> bridges;        // edge ids
  std::vector<int> two_vertices;   // vertices of degree exactly 2
  std::vector<int> low_vertices;   // vertices of degree <= 1
  std::vector<int> parallel_pairs; // one representative edge id per duplicated pair
  // All simple cycles of length 3..7, as canonical vertex sequences.
  std::vector<std::vector<int>> short_cycles;
  std::optional<int> girth;  // nullopt when acyclic
};

StructureReport structure_report(const PlaneMultigraph& g);

// --- small graph utilities shared across modules ---

// Component id per vertex plus count.
std::pair<std::vector<int>, int> components_of(const PlaneMultigraph& g);

// Bridge edge ids (multigraph-aware: a parallel pair is never a bridge).
// Bridges of g, ascending; with skip_edge >= 0, bridges of g minus that edge.
std::vector<int> bridge_edges(const PlaneMultigraph& g, int skip_edge = -1);

// All simple cycles with 3 <= length <= max_len, canonical vertex sequences
// (lowest vertex first, smaller neighbor second), ascending lexicographic.
std::vector<std::vector<int>> simple_cycles_up_to(const PlaneMultigraph& g, int max_len);

// Exact girth (2 when a parallel pair exists), nullopt for forests.
std::optional<int> exact_girth(const PlaneMultigraph& g);

}  // namespace sec
