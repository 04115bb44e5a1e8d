#pragma once

#include <vector>

#include "sec/planar_multigraph.hpp"

namespace sec {

// Computes a planar rotation system for a raw edge list, or raises NonPlanar
// with a certificate (a fragment whose attachment vertices fit no face of the
// partial embedding).  Incremental face-based embedding per biconnected
// block; quadratic, which is fine at desk scale.  Deterministic: same input,
// same embedding.
PlaneMultigraph embed_edge_list(int n, const std::vector<Edge>& edges);

}  // namespace sec
