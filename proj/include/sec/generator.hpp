#pragma once

#include <cstdint>
#include <string>

#include "sec/planar_multigraph.hpp"

namespace sec {

struct GenSpec {
  int target_vertices = 12;
  std::uint64_t seed = 0;
  double two_vertex_fraction = 0.3;  // subdivision probability per move
  bool allow_parallel = false;
};

// Canonical fixed instances: prism, k4, cube, dodecahedron, c5, c6, c7,
// theta, doubled_edge_path.
PlaneMultigraph named_instance(const std::string& name);

// Seeded random loopless subcubic plane multigraph grown from a triangle by
// face-local moves (edge subdivision, chord insertion, parallel duplication).
PlaneMultigraph generate(const GenSpec& spec);

}  // namespace sec
