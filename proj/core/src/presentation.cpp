#include "fanring/presentation.hpp"

#include <set>

#include "fanring/errors.hpp"

namespace fanring {

namespace {

void require_usable(const Fan& fan, const ShellingData& data) {
  if (data.size() != fan.max_cone_count() ||
      static_cast<int>(data.sigma_m_dual.size()) != fan.dim)
    throw dimension_error("order data does not match the fan");
  if (!data.star_ok) throw unsupported_fan_error("order does not satisfy (*)");
}

// u's coordinates with respect to the dual basis of the last cone:
// pair u against that cone's rays.
std::vector<Int> dual_coordinates(const Fan& fan, const ShellingData& data,
                                  const DualVector& u) {
  std::vector<Int> a;
  for (int idx : data.sigma.back().rays) a.push_back(pairing(u, fan.rays[idx]));
  return a;
}

std::vector<Relation> monomial_relations(const Fan& fan, Mode mode) {
  std::vector<Relation> out;
  for (const auto& nf : minimal_nonfaces(fan)) {
    Relation rel;
    rel.kind = RelationKind::monomial;
    rel.nonface = nf;
    std::vector<int> exp(fan.ray_count(), 0);
    for (int j : nf.rays) exp[j] = 1;
    rel.poly = XPolynomial(mode, fan.ray_count(), fan.dim);
    rel.poly.add_term(std::move(exp),
                      CoeffElem::constant(mode, fan.dim, 1));
    out.push_back(std::move(rel));
  }
  return out;
}

}  // namespace

Presentation build_additive(const Fan& fan, const ShellingData& data) {
  require_usable(fan, data);
  const int d = fan.ray_count(), n = fan.dim;
  Presentation pres;
  pres.mode = Mode::additive;
  pres.d = d;
  pres.n = n;
  pres.relations = monomial_relations(fan, Mode::additive);

  for (int i = 0; i < n; ++i) {
    const DualVector& u = data.sigma_m_dual[i];
    Relation rel;
    rel.kind = RelationKind::linear;
    rel.u = u;
    rel.poly = XPolynomial(Mode::additive, d, n);
    for (int j = 0; j < d; ++j) {
      Int c = pairing(u, fan.rays[j]);
      if (c == 0) continue;
      std::vector<int> exp(d, 0);
      exp[j] = 1;
      rel.poly.add_term(std::move(exp),
                        CoeffElem::constant(Mode::additive, n, c));
    }
    rel.poly.add_term(std::vector<int>(d, 0),
                      -CoeffElem::r(Mode::additive, n, i));
    pres.relations.push_back(std::move(rel));
  }
  return pres;
}

XPolynomial z_of_u(const Fan& fan, const ShellingData& data,
                   const DualVector& u) {
  const int d = fan.ray_count(), n = fan.dim;
  auto pos = XPolynomial::one(Mode::multiplicative, d, n);
  auto neg = pos;
  for (int j = 0; j < d; ++j) {
    Int c = pairing(u, fan.rays[j]);
    if (c == 0) continue;
    auto factor = XPolynomial::one(Mode::multiplicative, d, n) -
                  XPolynomial::variable(Mode::multiplicative, d, n, j);
    for (Int k = 0; k < (c > 0 ? c : Int(-c)); ++k) {
      if (c > 0)
        pos = pos * factor;
      else
        neg = neg * factor;
    }
  }
  auto ru = r_u_multiplicative(n, dual_coordinates(fan, data, u));
  return pos - ru * neg;
}

Presentation build_multiplicative(const Fan& fan, const ShellingData& data) {
  require_usable(fan, data);
  const int d = fan.ray_count(), n = fan.dim;
  Presentation pres;
  pres.mode = Mode::multiplicative;
  pres.d = d;
  pres.n = n;
  pres.relations = monomial_relations(fan, Mode::multiplicative);

  std::set<std::vector<Int>> seen;
  for (const auto& cone : fan.max_cones) {
    std::vector<LatticeVector> gens;
    for (int idx : cone.rays) gens.push_back(fan.rays[idx]);
    for (const auto& dual : dual_basis(gens)) {
      for (int sign : {1, -1}) {
        std::vector<Int> coords = dual.coords;
        if (sign < 0)
          for (Int& c : coords) c = -c;
        if (!seen.insert(coords).second) continue;
        DualVector u(std::move(coords));
        Relation rel;
        rel.kind = RelationKind::product;
        rel.u = u;
        rel.poly = z_of_u(fan, data, u);
        if (rel.poly.is_zero()) continue;
        pres.relations.push_back(std::move(rel));
      }
    }
  }
  return pres;
}

}  // namespace fanring
