#pragma once

// Generating relations for the two quotient rings attached to a fan
// with an ordered set of maximal cones.  Both modes share the monomial
// relations, one squarefree monomial per minimal non-face.  On top of
// those the additive side adds n linear relations
//
//   y_i = sum_j <u_i, v_j> x_j - r_i
//
// with u_1..u_n the dual basis of the last cone, and the multiplicative
// side adds, for every u in the set of positive and negative dual basis
// vectors of all maximal cones,
//
//   z(u) = prod_{<u,v_j> > 0} (1-x_j)^{<u,v_j>}
//        - r(u) * prod_{<u,v_j> < 0} (1-x_j)^{-<u,v_j>}
//
// where r(u) = prod r_i^{a_i} for u = sum a_i u_i.

#include <optional>
#include <vector>

#include "fanring/algebra.hpp"
#include "fanring/fan.hpp"
#include "fanring/shelling.hpp"

namespace fanring {

enum class RelationKind { monomial, linear, product };

struct Relation {
  RelationKind kind = RelationKind::monomial;
  XPolynomial poly;
  // Exactly one of the two is set, recording where the relation came
  // from: the non-face for monomial relations, u for the others.
  std::optional<ConeRef> nonface;
  std::optional<DualVector> u;

  bool operator==(const Relation&) const = default;
};

struct Presentation {
  Mode mode = Mode::additive;
  int d = 0;
  int n = 0;
  std::vector<Relation> relations;  // monomial relations first

  bool operator==(const Presentation&) const = default;
};

// Both builders need an order satisfying the first interval condition
// (unsupported_fan_error otherwise; the data carries the flag).
Presentation build_additive(const Fan& fan, const ShellingData& data);
Presentation build_multiplicative(const Fan& fan, const ShellingData& data);

// The z(u) polynomial for an arbitrary dual vector, usable for
// cross-checks with u outside the built-in generating set.
XPolynomial z_of_u(const Fan& fan, const ShellingData& data,
                   const DualVector& u);

}  // namespace fanring
