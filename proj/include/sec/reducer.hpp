#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sec/planar_multigraph.hpp"
#include "sec/strong_coloring.hpp"

namespace sec {

// Reducible configurations in the fixed detection order.  The order is load
// bearing: each kind's reduction is valid only when all earlier kinds are
// absent (e.g. a 4-cycle is guaranteed to be a face with four distinct
// off-cycle neighbors only once cuts, triangles, and low-degree vertices are
// gone).
enum class ConfigKind : int {
  Disconnected = 0,
  ParallelEdge,
  DegreeLeqOne,
  CutEdge,
  NonAdjacentTwoEdgeCut,
  TriangleWith2Vertex,
  Triangle,
  FourCycleWith2Vertex,
  FourCycle,
  TwoVerticesAtDistance1or2,
  TwoVertexOn5Face,
  TwoVerticesAtDistance3,
  FaceBoundaryDistance4Pair,
  TwoVertexOn6Face,
  TwoVertexOn7Face,
  AdjacentFiveFiveFaces,
  FiveSixAdjacentFaces,
};

constexpr int kConfigKindCount = 17;
const char* config_kind_name(ConfigKind k);

// A detected configuration with labeled witness ids (labels follow the
// construction's vertex names: x_i, y_i, u_i, v_i, w_i).
struct Configuration {
  ConfigKind kind{};
  std::vector<std::pair<std::string, int>> vertices;  // label -> vertex id
  std::vector<std::pair<std::string, int>> edges;     // label -> edge id

  int vertex(const std::string& label) const;  // Errors: InputInvalid if absent
  int edge(const std::string& label) const;
  std::string summary() const;  // one line: kind plus label=id pairs
};

// First configuration in detection order; nullopt only for the empty graph.
// Pre: valid loopless subcubic PlaneMultigraph.
std::optional<Configuration> find_configuration(const PlaneMultigraph& g);

// One graph of a reduction's output, with maps back to the parent.
struct ReducedPart {
  PlaneMultigraph graph;
  std::vector<int> edge_to_parent;    // per edge: parent edge id, or -1 if auxiliary
  std::vector<int> vertex_to_parent;  // per vertex: parent vertex id, or -1 if new
};

// "Color parent edge `removed_edge` with the color the reduced graph's
// auxiliary edge `aux_edge` received."
struct SeedDirective {
  int removed_edge;  // parent edge id
  int aux_edge;      // edge id in parts[0].graph
};

struct AddedLabel {
  std::string label;
  int part = 0;
  int id = -1;
};

struct ReductionStep {
  Configuration config;
  std::vector<int> removed_vertices;  // parent ids, sorted
  std::vector<int> removed_edges;     // parent ids, sorted
  std::vector<ReducedPart> parts;     // one part (deletion) or two (split)
  std::vector<AddedLabel> added_vertices;
  std::vector<AddedLabel> added_edges;
  std::vector<SeedDirective> seeds;
  std::vector<int> frontier;      // parent edge ids to (re)color; == removed_edges
  std::vector<int> shared_edges;  // split only: parent edge ids present in both parts

  bool is_split() const { return parts.size() == 2; }
};

// Build the reduced graph(s) for cfg, revalidating all invariants (loopless,
// subcubic, planar, strictly smaller).  Errors: InvalidConfiguration.
ReductionStep apply_reduction(const PlaneMultigraph& g, const Configuration& cfg);

struct LiftStats {
  long long nodes = 0;
  bool widened = false;  // seeded first pass failed; full frontier searched
};

// Turn good 9-colorings of the parts into a good 9-coloring of the parent:
// copy surviving edges, apply the seeding plan, complete the frontier by
// exact search (widening to the full frontier if the seeded pass fails); for
// splits, merge under a palette permutation matching the shared edges.
// Errors: ExtensionImpossible (a would-be counterexample; never expected).
PartialColoring lift_and_extend(const PlaneMultigraph& g, const ReductionStep& step,
                                const std::vector<PartialColoring>& sub_colorings,
                                LiftStats* stats = nullptr);

struct TraceStep {
  ConfigKind kind{};
  std::string witness;
  int frontier_size = 0;
  long long nodes = 0;
  bool widened = false;
};

struct ReductionTrace {
  std::vector<TraceStep> steps;    // in application order
  std::vector<int> base_sizes;     // |V| of each exact-solver base case
};

struct ColorResult {
  PartialColoring coloring;  // total, palette 9, verified
  ReductionTrace trace;
};

// The constructive strong 9-coloring: reduce until |V| <= 12, solve exactly,
// lift back.  Errors: InputInvalid (not subcubic); InternalCounterexample.
ColorResult color_graph(const PlaneMultigraph& g);

}  // namespace sec
