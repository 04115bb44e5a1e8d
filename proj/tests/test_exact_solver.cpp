#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>

#include "fixtures.hpp"
#include "sec/exact_solver.hpp"
#include "sec/generator.hpp"

using namespace sec;
using fixtures::ref_chi_strong;
using fixtures::ref_colorable;
using fixtures::ref_valid_strong;

namespace {

Err kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return Err::InputInvalid;
}

void check_exact(const PlaneMultigraph& g, int expected) {
  ExactResult r = strong_chromatic_index(g);
  REQUIRE(r.chi_s.has_value());
  CHECK(*r.chi_s == expected);
  if (g.edge_count() > 0) {
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->palette == expected);
    CHECK(verify_strong(g, *r.witness).empty());
    CHECK(ref_valid_strong(g, r.witness->color, expected));
  }
}

}  // namespace

// The reference values below come from the independent enumerator in
// fixtures.hpp, written before the solver: plain depth-first search straight
// from the definition of a strong edge coloring.

TEST_CASE("reference enumerator pins the small cycle values") {
  CHECK(ref_chi_strong(fixtures::cycle_graph(5)) == 5);
  CHECK(ref_chi_strong(fixtures::cycle_graph(6)) == 3);
  CHECK(ref_chi_strong(fixtures::cycle_graph(7)) == 4);
  CHECK(ref_chi_strong(fixtures::path_graph(3)) == 2);
}

TEST_CASE("solver agrees with the frozen small values") {
  check_exact(named_instance("c5"), 5);
  check_exact(named_instance("c6"), 3);
  check_exact(named_instance("c7"), 4);
  check_exact(fixtures::path_graph(3), 2);
}

TEST_CASE("prism needs exactly nine colors") {
  PlaneMultigraph g = named_instance("prism");
  check_exact(g, 9);
  CHECK(!exact_coloring(g, 8).has_value());
  CHECK(!ref_colorable(g, 8));
  CHECK(ref_colorable(g, 9));
}

TEST_CASE("solver matches the reference on assorted small graphs") {
  std::vector<PlaneMultigraph> gs;
  gs.push_back(named_instance("k4"));
  gs.push_back(named_instance("theta"));
  gs.push_back(named_instance("doubled_edge_path"));
  gs.push_back(fixtures::path_graph(5));
  gs.push_back(fixtures::cycle_graph(4));
  gs.push_back(fixtures::cycle_graph(9));
  for (std::uint64_t seed : {21, 22}) {
    GenSpec spec;
    spec.target_vertices = 8;
    spec.seed = seed;
    spec.allow_parallel = true;
    gs.push_back(generate(spec));
  }
  for (const PlaneMultigraph& g : gs) {
    int expect = ref_chi_strong(g);
    REQUIRE(expect >= 0);
    check_exact(g, expect);
  }
}

TEST_CASE("decision version is monotone in k") {
  PlaneMultigraph g = named_instance("k4");
  int chi = ref_chi_strong(g);
  for (int k = 1; k <= 9; ++k) {
    bool feasible = exact_coloring(g, k).has_value();
    CHECK(feasible == (k >= chi));
    CHECK(feasible == ref_colorable(g, k));
  }
}

TEST_CASE("edgeless graphs have index zero") {
  PlaneMultigraph g = make_graph(4, {}, {{}, {}, {}, {}});
  ExactResult r = strong_chromatic_index(g);
  REQUIRE(r.chi_s.has_value());
  CHECK(*r.chi_s == 0);
}

TEST_CASE("kmax exhaustion reports nullopt") {
  PlaneMultigraph g = named_instance("prism");
  ExactResult r = strong_chromatic_index(g, 8);
  CHECK(!r.chi_s.has_value());
  CHECK(!r.witness.has_value());
}

TEST_CASE("clique lower bound is valid and tight on the prism") {
  for (const char* name : {"prism", "k4", "cube", "c5", "c7", "theta"}) {
    PlaneMultigraph g = named_instance(name);
    int lb = conflict_clique_lower(g);
    ExactResult r = strong_chromatic_index(g);
    REQUIRE(r.chi_s.has_value());
    CHECK(lb <= *r.chi_s);
  }
  CHECK(conflict_clique_lower(named_instance("prism")) == 9);
}

TEST_CASE("size guard and force") {
  GenSpec spec;
  spec.target_vertices = 61;  // at least 61 edges: 3 + one per added vertex
  spec.seed = 7;
  PlaneMultigraph g = generate(spec);
  REQUIRE(g.edge_count() > 60);
  CHECK(kind_of([&] { strong_chromatic_index(g); }) == Err::TooLarge);
  CHECK(kind_of([&] { exact_coloring(g, 9); }) == Err::TooLarge);
}

TEST_CASE("input validation") {
  PlaneMultigraph g = named_instance("c5");
  CHECK(kind_of([&] { exact_coloring(g, -1); }) == Err::InputInvalid);
  CHECK(kind_of([&] { strong_chromatic_index(g, 0); }) == Err::InputInvalid);
  CHECK(!exact_coloring(g, 0).has_value());
}

TEST_CASE("determinism: identical reruns") {
  PlaneMultigraph g = named_instance("cube");
  ExactResult a = strong_chromatic_index(g);
  ExactResult b = strong_chromatic_index(g);
  REQUIRE(a.chi_s.has_value());
  CHECK(*a.chi_s == *b.chi_s);
  REQUIRE(a.witness.has_value());
  CHECK(a.witness->color == b.witness->color);
  CHECK(a.nodes == b.nodes);
}

TEST_CASE("cube value cross-checked against the reference") {
  PlaneMultigraph g = named_instance("cube");
  int expect = ref_chi_strong(g);
  REQUIRE(expect > 0);
  check_exact(g, expect);
}
