#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <functional>

#include "fixtures.hpp"
#include "sec/embed.hpp"
#include "sec/generator.hpp"
#include "sec/io.hpp"

using namespace sec;

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

}  // namespace

TEST_CASE("named instances: sizes and regularity") {
  struct Row {
    const char* name;
    int v, e, girth;
  };
  for (Row r : std::vector<Row>{{"prism", 6, 9, 3},
                                {"k4", 4, 6, 3},
                                {"cube", 8, 12, 4},
                                {"dodecahedron", 20, 30, 5},
                                {"c5", 5, 5, 5},
                                {"c6", 6, 6, 6},
                                {"c7", 7, 7, 7},
                                {"theta", 5, 6, 4},
                                {"doubled_edge_path", 4, 4, 2}}) {
    CAPTURE(r.name);
    PlaneMultigraph g = named_instance(r.name);
    CHECK_NOTHROW(validate_graph(g));
    CHECK_NOTHROW(require_subcubic(g));
    CHECK(g.vertex_count() == r.v);
    CHECK(g.edge_count() == r.e);
    REQUIRE(exact_girth(g).has_value());
    CHECK(*exact_girth(g) == r.girth);
    CHECK(components_of(g).second == 1);
  }
  CHECK(kind_of([] { named_instance("nope"); }) == Err::UnknownName);
}

TEST_CASE("named cubic instances are 3-regular") {
  for (const char* name : {"prism", "k4", "cube", "dodecahedron"}) {
    PlaneMultigraph g = named_instance(name);
    for (int v = 0; v < g.vertex_count(); ++v) CHECK(g.degree(v) == 3);
  }
}

TEST_CASE("dodecahedron has twelve pentagonal faces") {
  FaceSet fs = trace_faces(named_instance("dodecahedron"));
  REQUIRE(fs.faces.size() == 12);
  for (const Face& f : fs.faces) CHECK(f.length() == 5);
}

TEST_CASE("truncated icosahedron fixture is the C60 fullerene") {
  PlaneMultigraph g = fixtures::truncated_icosahedron();
  CHECK(g.vertex_count() == 60);
  CHECK(g.edge_count() == 90);
  for (int v = 0; v < 60; ++v) CHECK(g.degree(v) == 3);
  FaceSet fs = trace_faces(g);
  int pent = 0, hexa = 0;
  for (const Face& f : fs.faces) {
    if (f.length() == 5) ++pent;
    if (f.length() == 6) ++hexa;
  }
  CHECK(pent == 12);
  CHECK(hexa == 20);
  CHECK(static_cast<int>(fs.faces.size()) == 32);
  REQUIRE(exact_girth(g).has_value());
  CHECK(*exact_girth(g) == 5);
}

TEST_CASE("generate hits the requested vertex count") {
  for (int n : {3, 4, 12, 33, 80}) {
    GenSpec spec;
    spec.target_vertices = n;
    spec.seed = 17;
    PlaneMultigraph g = generate(spec);
    CHECK(g.vertex_count() == n);
    CHECK_NOTHROW(validate_graph(g));
    CHECK_NOTHROW(require_subcubic(g));
    CHECK(components_of(g).second == 1);
  }
}

TEST_CASE("generate is deterministic per spec") {
  GenSpec spec;
  spec.target_vertices = 40;
  spec.seed = 424242;
  spec.two_vertex_fraction = 0.5;
  spec.allow_parallel = true;
  std::string a = serialize_graph(generate(spec));
  std::string b = serialize_graph(generate(spec));
  CHECK(a == b);
  spec.seed = 424243;
  CHECK(serialize_graph(generate(spec)) != a);
}

TEST_CASE("parallel edges appear only when allowed") {
  bool saw_parallel = false;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    GenSpec off;
    off.target_vertices = 25;
    off.seed = seed;
    off.allow_parallel = false;
    CHECK(structure_report(generate(off)).parallel_pairs.empty());
    GenSpec on = off;
    on.allow_parallel = true;
    if (!structure_report(generate(on)).parallel_pairs.empty()) saw_parallel = true;
  }
  CHECK(saw_parallel);
}

TEST_CASE("two_vertex_fraction steers the 2-vertex share") {
  long long rich = 0, poor = 0;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    GenSpec spec;
    spec.target_vertices = 40;
    spec.seed = seed;
    spec.two_vertex_fraction = 0.9;
    rich += static_cast<long long>(structure_report(generate(spec)).two_vertices.size());
    spec.two_vertex_fraction = 0.0;
    poor += static_cast<long long>(structure_report(generate(spec)).two_vertices.size());
  }
  CHECK(rich > poor);
  CHECK(rich > 0);
}

TEST_CASE("generate validates its spec") {
  GenSpec bad;
  bad.target_vertices = 2;
  CHECK(kind_of([&] { generate(bad); }) == Err::InfeasibleSpec);
  bad.target_vertices = 10;
  bad.two_vertex_fraction = -0.1;
  CHECK(kind_of([&] { generate(bad); }) == Err::InfeasibleSpec);
  bad.two_vertex_fraction = 1.5;
  CHECK(kind_of([&] { generate(bad); }) == Err::InfeasibleSpec);
}

TEST_CASE("generated graphs pass the independent planarity oracle") {
  for (std::uint64_t seed = 50; seed < 54; ++seed) {
    GenSpec spec;
    spec.target_vertices = 13;
    spec.seed = seed;
    spec.allow_parallel = seed % 2 == 0;
    PlaneMultigraph g = generate(spec);
    CHECK(fixtures::oracle_planar_subcubic(g.vertex_count(), g.edges));
  }
}

TEST_CASE("planarity oracle sanity on known graphs") {
  CHECK(fixtures::oracle_planar_subcubic(6, named_instance("prism").edges));
  CHECK(fixtures::oracle_planar_subcubic(8, named_instance("cube").edges));
  CHECK(fixtures::oracle_planar_subcubic(4, named_instance("doubled_edge_path").edges));
  CHECK(!fixtures::oracle_planar_subcubic(10, fixtures::petersen_edges()));
  CHECK(!fixtures::oracle_planar_subcubic(6, fixtures::k33_edges()));
}

TEST_CASE("embed_edge_list embeds planar inputs and certifies the rest") {
  PlaneMultigraph k4 = embed_edge_list(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  CHECK_NOTHROW(validate_graph(k4));
  CHECK(trace_faces(k4).faces.size() == 4);

  CHECK(kind_of([] { embed_edge_list(10, fixtures::petersen_edges()); }) == Err::NonPlanar);
  CHECK(kind_of([] { embed_edge_list(6, fixtures::k33_edges()); }) == Err::NonPlanar);
}

TEST_CASE("embed_edge_list handles bridges, parallels, and forests") {
  PlaneMultigraph path = embed_edge_list(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(bridge_edges(path) == std::vector<int>{0, 1, 2});
  PlaneMultigraph par = embed_edge_list(2, {{0, 1}, {0, 1}});
  CHECK(trace_faces(par).faces.size() == 2);
  PlaneMultigraph forest = embed_edge_list(5, {{0, 1}, {2, 3}});
  CHECK(components_of(forest).second == 3);
  CHECK_NOTHROW(validate_graph(forest));
  PlaneMultigraph lonely = embed_edge_list(1, {});
  CHECK(lonely.vertex_count() == 1);
}

TEST_CASE("embed_edge_list is deterministic") {
  std::vector<Edge> edges = fixtures::icosahedron_edges();
  CHECK(serialize_graph(embed_edge_list(12, edges)) == serialize_graph(embed_edge_list(12, edges)));
}

TEST_CASE("embed rejects loops and bad ids") {
  CHECK(kind_of([] { embed_edge_list(2, {{0, 0}}); }) == Err::LoopEdge);
  CHECK(kind_of([] { embed_edge_list(2, {{0, 5}}); }) == Err::IndexOutOfRange);
}

TEST_CASE("generator output colors cleanly at scale") {
  GenSpec spec;
  spec.target_vertices = 120;
  spec.seed = 8;
  spec.two_vertex_fraction = 0.4;
  spec.allow_parallel = true;
  PlaneMultigraph g = generate(spec);
  CHECK(g.vertex_count() == 120);
  StructureReport r = structure_report(g);
  CHECK(r.component_count == 1);
  CHECK(std::all_of(r.degree.begin(), r.degree.end(), [](int d) { return d >= 2 && d <= 3; }));
}
