#pragma once

#include <optional>

#include "sec/planar_multigraph.hpp"
#include "sec/strong_coloring.hpp"

namespace sec {

struct ExactResult {
  std::optional<int> chi_s;              // nullopt ⇒ exceeds the requested kmax
  std::optional<PartialColoring> witness;  // passes verify_strong with palette chi_s
  long long nodes = 0;
};

// Size of a greedily grown clique in the conflict graph: a valid lower bound
// on the strong chromatic index (all clique edges need distinct colors).
int conflict_clique_lower(const PlaneMultigraph& g);

// Decision version: a strong k-edge-coloring, or nullopt iff none exists.
// Guard: |E| ≤ 60 unless force.  Errors: TooLarge, InputInvalid (k < 0).
std::optional<PartialColoring> exact_coloring(const PlaneMultigraph& g, int k, bool force = false);

// Exact minimum over k = lower bound .. kmax by branch and bound; each value
// below the answer is exhausted, certifying optimality.  Deterministic.
ExactResult strong_chromatic_index(const PlaneMultigraph& g, int kmax = 13, bool force = false);

}  // namespace sec
