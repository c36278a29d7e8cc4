#pragma once

// Complete simplicial fans given by primitive rays and maximal cones.
// Ray indices are 1-based in files and messages, 0-based internally.

#include <map>
#include <set>
#include <string>
#include <vector>

#include "fanring/lattice.hpp"

namespace fanring {

// A cone of the fan, identified by its sorted set of ray indices
// (0-based).  The empty set is the zero cone.
struct ConeRef {
  std::vector<int> rays;

  ConeRef() = default;
  explicit ConeRef(std::vector<int> r);

  int dim() const { return static_cast<int>(rays.size()); }
  bool contains(int ray) const;
  bool subset_of(const ConeRef& other) const;

  auto operator<=>(const ConeRef&) const = default;
};

ConeRef cone_union(const ConeRef& a, const ConeRef& b);
ConeRef cone_intersection(const ConeRef& a, const ConeRef& b);
ConeRef cone_difference(const ConeRef& a, const ConeRef& b);
// Render as {i, j, ...} with 1-based ray indices.
std::string cone_to_string(const ConeRef& c);

struct Fan {
  int dim = 0;                       // rank n of the lattice
  std::vector<LatticeVector> rays;   // primitive generators v_1..v_d
  std::vector<ConeRef> max_cones;    // maximal cones by ray index set

  int ray_count() const { return static_cast<int>(rays.size()); }
  int max_cone_count() const { return static_cast<int>(max_cones.size()); }

  bool operator==(const Fan&) const = default;
};

// Structural sanity: index ranges, lengths, duplicates inside a cone.
// Throws input_error with a location; everything past this point may
// assume indices are usable.
void check_structure(const Fan& fan);

struct ValidationReport {
  bool rays_ok = false;        // primitive, nonzero, pairwise distinct
  bool simplicial = false;     // each max cone's rays are independent
  bool smooth = false;         // each max cone's rays extend to a Z-basis
  bool pure = false;           // every max cone has exactly n rays
  bool complete = false;       // pure and every wall on exactly two cones
  bool fan_condition = false;  // pairwise intersections are common faces
  std::vector<std::string> diagnostics;

  // Good for every downstream computation in this library.
  bool ok() const {
    return rays_ok && simplicial && smooth && pure && complete && fan_condition;
  }
};

// Full validation; throws input_error only for structural breakage,
// everything mathematical lands in the report.
ValidationReport validate(const Fan& fan);

// All faces of all maximal cones, including the zero cone.
std::set<ConeRef> all_faces(const Fan& fan);

// Inclusion-minimal ray sets spanning no cone of the fan.  Every
// superset of a returned set is again a non-face.
std::vector<ConeRef> minimal_nonfaces(const Fan& fan);

// Adjacency lists over maximal-cone indices; two cones are adjacent
// iff they share a wall, i.e. n-1 common rays.  For n = 1 the shared
// wall is the zero cone, so any two maximal cones are adjacent.
std::vector<std::vector<int>> wall_graph(const Fan& fan);

}  // namespace fanring
