#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <functional>

#include "fixtures.hpp"
#include "sec/discharging.hpp"
#include "sec/generator.hpp"

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

Fifths sum(const std::vector<Fifths>& v) {
  Fifths s;
  for (Fifths x : v) s += x;
  return s;
}

}  // namespace

TEST_CASE("fifths arithmetic and formatting") {
  CHECK(Fifths::whole(3).str() == "3");
  CHECK(Fifths::whole(-12).str() == "-12");
  CHECK(Fifths::fifths(7).str() == "7/5");
  CHECK(Fifths::fifths(-3).str() == "-3/5");
  CHECK(Fifths::fifths(10).str() == "2");
  CHECK(Fifths::whole(1) + Fifths::fifths(2) == Fifths::fifths(7));
  CHECK(Fifths::whole(2) - Fifths::fifths(1) == Fifths::fifths(9));
  CHECK(Fifths::fifths(-1) < Fifths::whole(0));
  Fifths a = Fifths::whole(1);
  a += Fifths::fifths(1);
  a -= Fifths::fifths(6);
  CHECK(a == Fifths::whole(0));
}

TEST_CASE("charges refuses disconnected and bridged graphs") {
  CHECK(kind_of([] { charges(fixtures::instance_for_kind(0)); }) == Err::Disconnected);
  CHECK(kind_of([] { charges(fixtures::path_graph(3)); }) == Err::HasBridge);
  CHECK(kind_of([] { charges(fixtures::instance_for_kind(3)); }) == Err::HasBridge);
  CHECK(kind_of([] { charges(named_instance("doubled_edge_path")); }) == Err::HasBridge);
}

TEST_CASE("single vertex carries the whole deficit") {
  ChargeReport r = charges(make_graph(1, {}, {{}}));
  REQUIRE(r.vertex_initial.size() == 1);
  REQUIRE(r.face_initial.size() == 1);
  CHECK(r.vertex_initial[0] == Fifths::whole(-6));
  CHECK(r.face_initial[0] == Fifths::whole(-6));
  CHECK(r.total_initial == Fifths::whole(-12));
  CHECK(r.total_final == Fifths::whole(-12));
}

TEST_CASE("K4 hand values") {
  ChargeReport r = charges(named_instance("k4"));
  for (Fifths c : r.vertex_initial) CHECK(c == Fifths::whole(0));
  for (Fifths c : r.vertex_final) CHECK(c == Fifths::whole(0));
  REQUIRE(r.face_initial.size() == 4);
  for (Fifths c : r.face_initial) CHECK(c == Fifths::whole(-3));
  for (Fifths c : r.face_final) CHECK(c == Fifths::whole(-3));
  CHECK(r.total_initial == Fifths::whole(-12));
  CHECK(r.total_final == Fifths::whole(-12));
}

TEST_CASE("cube hand values") {
  ChargeReport r = charges(named_instance("cube"));
  for (Fifths c : r.vertex_final) CHECK(c == Fifths::whole(0));
  REQUIRE(r.face_final.size() == 6);
  for (Fifths c : r.face_final) CHECK(c == Fifths::whole(-2));
  CHECK(r.total_final == Fifths::whole(-12));
}

TEST_CASE("dodecahedron hand values: R2 is a wash between pentagons") {
  ChargeReport r = charges(named_instance("dodecahedron"));
  for (Fifths c : r.vertex_final) CHECK(c == Fifths::whole(0));
  REQUIRE(r.face_final.size() == 12);
  for (Fifths c : r.face_initial) CHECK(c == Fifths::whole(-1));
  for (Fifths c : r.face_final) CHECK(c == Fifths::whole(-1));
  CHECK(r.total_final == Fifths::whole(-12));
}

TEST_CASE("C60 hand values: pentagons end at zero, hexagons at -3/5") {
  ChargeReport r = charges(fixtures::truncated_icosahedron());
  int pent = 0, hexa = 0;
  for (size_t f = 0; f < r.faces.faces.size(); ++f) {
    if (r.faces.faces[f].length() == 5) {
      ++pent;
      CHECK(r.face_initial[f] == Fifths::whole(-1));
      CHECK(r.face_final[f] == Fifths::whole(0));
    } else {
      ++hexa;
      REQUIRE(r.faces.faces[f].length() == 6);
      CHECK(r.face_initial[f] == Fifths::whole(0));
      CHECK(r.face_final[f] == Fifths::fifths(-3));
    }
  }
  CHECK(pent == 12);
  CHECK(hexa == 20);
  for (Fifths c : r.vertex_final) CHECK(c == Fifths::whole(0));
  CHECK(r.total_final == Fifths::whole(-12));
}

TEST_CASE("C5 hand values: R1 moves face charge onto 2-vertices") {
  ChargeReport r = charges(fixtures::cycle_graph(5));
  for (Fifths c : r.vertex_initial) CHECK(c == Fifths::whole(-2));
  for (Fifths c : r.vertex_final) CHECK(c == Fifths::whole(0));
  REQUIRE(r.face_final.size() == 2);
  for (Fifths c : r.face_initial) CHECK(c == Fifths::whole(-1));
  for (Fifths c : r.face_final) CHECK(c == Fifths::whole(-6));
  CHECK(r.total_final == Fifths::whole(-12));
}

TEST_CASE("theta hand values") {
  ChargeReport r = charges(named_instance("theta"));
  REQUIRE(r.face_final.size() == 3);
  for (Fifths c : r.face_initial) CHECK(c == Fifths::whole(-2));
  for (Fifths c : r.face_final) CHECK(c == Fifths::whole(-4));
  for (int v = 0; v < 5; ++v)
    CHECK(r.vertex_final[static_cast<size_t>(v)] == Fifths::whole(0));
  CHECK(r.total_final == Fifths::whole(-12));
}

TEST_CASE("conservation across a generated corpus") {
  for (std::uint64_t seed = 200; seed < 230; ++seed) {
    GenSpec spec;
    spec.target_vertices = 10 + static_cast<int>(seed % 20);
    spec.seed = seed;
    spec.two_vertex_fraction = (seed % 4) * 0.2;
    spec.allow_parallel = seed % 3 == 0;
    PlaneMultigraph g = generate(spec);
    if (!bridge_edges(g).empty()) continue;
    CAPTURE(seed);
    ChargeReport r = charges(g);
    CHECK(r.total_initial == Fifths::whole(-12));
    CHECK(r.total_final == Fifths::whole(-12));
    CHECK(sum(r.vertex_final) + sum(r.face_final) == Fifths::whole(-12));
    CHECK(sum(r.vertex_initial) + sum(r.face_initial) == Fifths::whole(-12));
  }
}

TEST_CASE("audit predicate names and order are fixed") {
  AuditReport r = audit(named_instance("prism"));
  const std::vector<std::string> want{
      "no parallel edges",
      "minimum degree at least 2",
      "no nonadjacent two-edge cut",
      "no triangles",
      "no four-cycles",
      "no two 2-vertices at distance at most 2",
      "no 2-vertex on a 5-cycle",
      "no two 2-vertices at distance exactly 3",
      "no two 2-vertices at face-boundary distance 4",
      "no 2-vertex on a 6-cycle",
      "no 2-vertex on a 7-face",
      "no two 5-faces share an edge",
      "no 5-face shares an edge with a 6-face",
  };
  REQUIRE(r.predicates.size() == want.size());
  for (size_t i = 0; i < want.size(); ++i) CHECK(r.predicates[i].name == want[i]);
}

TEST_CASE("audit pinpoints the prism triangle") {
  AuditReport r = audit(named_instance("prism"));
  REQUIRE(!r.failing.empty());
  CHECK(std::find(r.failing.begin(), r.failing.end(), "no triangles") != r.failing.end());
  CHECK(r.detector_found);
  CHECK(r.detector_name == "Triangle");
  CHECK(r.agreement);
  for (const PredicateResult& p : r.predicates)
    if (!p.holds) CHECK(!p.witness.empty());
}

TEST_CASE("audit on the dodecahedron: only the 5-5 adjacency fails") {
  AuditReport r = audit(named_instance("dodecahedron"));
  REQUIRE(r.failing.size() == 1);
  CHECK(r.failing[0] == "no two 5-faces share an edge");
  CHECK(r.detector_name == "AdjacentFiveFiveFaces");
  CHECK(r.agreement);
}

TEST_CASE("audit on C60: only the 5-6 adjacency fails") {
  AuditReport r = audit(fixtures::truncated_icosahedron());
  REQUIRE(r.failing.size() == 1);
  CHECK(r.failing[0] == "no 5-face shares an edge with a 6-face");
  CHECK(r.detector_name == "FiveSixAdjacentFaces");
  CHECK(r.agreement);
}

TEST_CASE("audit agrees with the detector on every eligible fixture") {
  for (int k = 4; k < kConfigKindCount; ++k) {
    CAPTURE(k);
    PlaneMultigraph g = fixtures::instance_for_kind(k);
    AuditReport r = audit(g);
    CHECK(!r.failing.empty());
    CHECK(r.detector_found);
    CHECK(r.agreement);
    CHECK(r.detector_name == config_kind_name(static_cast<ConfigKind>(k)));
    CHECK(!r.detector_witness.empty());
  }
}

TEST_CASE("audit agrees across a generated corpus") {
  int audited = 0;
  for (std::uint64_t seed = 300; seed < 340; ++seed) {
    GenSpec spec;
    spec.target_vertices = 12 + static_cast<int>(seed % 25);
    spec.seed = seed;
    spec.two_vertex_fraction = (seed % 5) * 0.2;
    spec.allow_parallel = seed % 2 == 0;
    PlaneMultigraph g = generate(spec);
    if (components_of(g).second != 1 || !bridge_edges(g).empty()) continue;
    CAPTURE(seed);
    AuditReport r = audit(g);
    CHECK(!r.failing.empty());
    CHECK(r.detector_found);
    CHECK(r.agreement);
    ++audited;
  }
  CHECK(audited > 10);
}

TEST_CASE("audit requires subcubic input") {
  PlaneMultigraph ico = embed_edge_list(12, fixtures::icosahedron_edges());
  CHECK(kind_of([&] { audit(ico); }) == Err::InputInvalid);
}
