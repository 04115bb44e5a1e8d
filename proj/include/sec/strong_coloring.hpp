#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "sec/planar_multigraph.hpp"

namespace sec {

// Partial assignment of colors to edges.  color[e] == 0 means uncolored;
// assigned values lie in 1..palette.
struct PartialColoring {
  int palette = 9;
  std::vector<int> color;

  explicit PartialColoring(int edge_count = 0, int k = 9) : palette(k), color(edge_count, 0) {}
  bool assigned(int e) const { return color[static_cast<size_t>(e)] != 0; }
};

// adj[e] = sorted set of edge ids that e sees (shares an endpoint with, or
// some edge shares an endpoint with both).  Symmetric, irreflexive.
struct ConflictGraph {
  std::vector<std::vector<int>> adj;
};

bool sees(const PlaneMultigraph& g, int e, int f);
ConflictGraph conflict_graph(const PlaneMultigraph& g);

// Two edges seeing each other carry the same color.
struct Violation {
  int e = -1;
  int f = -1;
  int color = 0;
};

// Exhaustive violation list for a *total* coloring; empty means every color
// class is an induced matching.  Errors: UncoloredEdge, ColorOutOfRange.
std::vector<Violation> verify_strong(const PlaneMultigraph& g, const PartialColoring& c);

// True iff assigned colors are in range and no two assigned edges that see
// each other share a color.  Uncolored edges are fine.
bool is_good_partial(const PlaneMultigraph& g, const PartialColoring& c);

// Colors of assigned edges incident to v.
std::vector<int> used_at(const PlaneMultigraph& g, const PartialColoring& c, int v);
// Colors of assigned edges incident to v other than edge e.
std::vector<int> used_other(const PlaneMultigraph& g, const PartialColoring& c, int v, int e);

// Colors whose assignment to e keeps the coloring good.  Pre: c good, e
// uncolored.  Errors: AlreadyColored, InvalidColoring.
std::vector<int> available_colors(const PlaneMultigraph& g, const PartialColoring& c, int e);

// System of distinct representatives via bipartite matching: assigns each
// demand a color from its set, all pairwise distinct.  nullopt iff Hall's
// condition fails.  Deterministic.
std::optional<std::vector<std::pair<int, int>>> sdr_extend(
    const std::vector<std::pair<int, std::vector<int>>>& demands);

struct SearchStats {
  long long nodes = 0;
};

// Exact backtracking completion of `frontier` (the currently uncolored edges
// to finish), with forward checking and minimum-remaining-values ordering;
// lowest color first.  nullopt only if no completion exists.
// Errors: FrontierTooLarge (> 20), AlreadyColored, InvalidColoring.
std::optional<PartialColoring> extend_by_search(const PlaneMultigraph& g,
                                                const PartialColoring& partial,
                                                std::vector<int> frontier,
                                                SearchStats* stats = nullptr);

// First-fit along `order` (a permutation of all edges).  Palette of the result
// is max(9, highest color used); on subcubic input at most 13 colors appear.
PartialColoring greedy_strong(const PlaneMultigraph& g, const std::vector<int>& order);

// Largest color class of a verified ≤ 9-color strong coloring; an induced
// matching of size ≥ ⌈|E|/9⌉.  Errors: InvalidColoring.
std::vector<int> induced_matching_lower(const PlaneMultigraph& g, const PartialColoring& c);

}  // namespace sec
