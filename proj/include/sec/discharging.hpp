#pragma once

#include <string>
#include <vector>

#include "sec/planar_multigraph.hpp"
#include "sec/reducer.hpp"

namespace sec {

// Exact rational charge, stored as a multiple of 1/5.
struct Fifths {
  long long num = 0;  // value = num / 5

  static Fifths whole(long long w) { return Fifths{5 * w}; }
  static Fifths fifths(long long f) { return Fifths{f}; }
  Fifths operator+(Fifths o) const { return Fifths{num + o.num}; }
  Fifths operator-(Fifths o) const { return Fifths{num - o.num}; }
  Fifths& operator+=(Fifths o) { num += o.num; return *this; }
  Fifths& operator-=(Fifths o) { num -= o.num; return *this; }
  bool operator==(const Fifths&) const = default;
  bool operator<(Fifths o) const { return num < o.num; }
  std::string str() const;
};

// Charges from the Euler identity: sum over vertices of (2 d(v) - 6) plus sum
// over faces of (len(f) - 6) equals -12 on a connected plane multigraph.
struct ChargeReport {
  FaceSet faces;
  std::vector<Fifths> vertex_initial, vertex_final;
  std::vector<Fifths> face_initial, face_final;
  Fifths total_initial, total_final;
};

// Initial charges plus the two discharging rules:
//   R1: every face sends 1 to each incidence with a 2-vertex;
//   R2: every face sends 1/5 to each 5-face across each shared edge.
// Both rules count multiplicity per face occurrence / per shared edge.
ChargeReport charges(const PlaneMultigraph& g);

struct PredicateResult {
  std::string name;
  bool holds = true;
  std::string witness;  // set when the predicate fails
};

// Structural audit: every predicate below holding would force all final
// charges to be nonnegative, contradicting the -12 total.  So on every valid
// input at least one predicate fails, and the failing set is cross-checked
// against find_configuration.
struct AuditReport {
  ChargeReport charge;
  std::vector<PredicateResult> predicates;
  std::vector<std::string> failing;     // names of failing predicates, in order
  bool detector_found = false;
  std::string detector_name;            // configuration kind name when found
  std::string detector_witness;
  bool agreement = false;               // failing nonempty == detector found
};

AuditReport audit(const PlaneMultigraph& g);

}  // namespace sec
