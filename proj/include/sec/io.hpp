#pragma once

#include <string>

#include "sec/planar_multigraph.hpp"
#include "sec/strong_coloring.hpp"

namespace sec {

// Parses either format: PMG (header "pmg 1", explicit rotations) or EL (one
// "u v" pair per line, embedded via embed_edge_list).  '#' starts a comment.
PlaneMultigraph parse_graph(const std::string& text);

// Canonical PMG serialization; parse_graph(serialize_graph(g)) reproduces g
// and serialize o parse is the identity on canonical files.
std::string serialize_graph(const PlaneMultigraph& g);

// Coloring file: "k <palette>" then one "c <edge id> <color>" per assigned
// edge, ascending.  Colors are 1-based.
PartialColoring parse_coloring(const std::string& text);
std::string serialize_coloring(const PartialColoring& c);

// Command-line driver.  Exit codes: 0 success, 1 input error, 2 verification
// failure, 3 internal invariant breach.
int run_cli(int argc, const char* const* argv);

}  // namespace sec
