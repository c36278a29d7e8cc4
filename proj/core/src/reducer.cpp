#include "fanring/reducer.hpp"

#include <algorithm>
#include <utility>

#include "fanring/errors.hpp"

namespace fanring {

namespace {

constexpr long kNodeBudget = 10'000'000;

void require_compatible(const NormalForm& a, const NormalForm& b) {
  if (a.mode != b.mode) {
    throw mode_error("cannot mix additive and multiplicative values");
  }
  if (a.n != b.n || a.size() != b.size()) {
    throw dimension_error("normal forms have different shapes");
  }
}

}  // namespace

bool NormalForm::is_zero() const {
  for (const CoeffElem& c : coeffs) {
    if (!c.is_zero()) return false;
  }
  return true;
}

NormalForm operator+(const NormalForm& a, const NormalForm& b) {
  require_compatible(a, b);
  NormalForm out = a;
  for (int i = 0; i < out.size(); ++i) out.coeffs[i] = out.coeffs[i] + b.coeffs[i];
  return out;
}

NormalForm operator-(const NormalForm& a, const NormalForm& b) {
  require_compatible(a, b);
  NormalForm out = a;
  for (int i = 0; i < out.size(); ++i) out.coeffs[i] = out.coeffs[i] - b.coeffs[i];
  return out;
}

NormalForm operator*(const CoeffElem& c, const NormalForm& a) {
  NormalForm out = a;
  for (CoeffElem& entry : out.coeffs) entry = c * entry;
  return out;
}

NormalForm operator*(const Int& c, const NormalForm& a) {
  NormalForm out = a;
  for (CoeffElem& entry : out.coeffs) entry = c * entry;
  return out;
}

Reducer::Reducer(const Fan& fan, const ShellingData& data, Mode mode)
    : fan_(fan), data_(data), mode_(mode) {
  if (!data_.star_ok) {
    throw unsupported_fan_error("order does not satisfy (*)");
  }
  faces_ = all_faces(fan_);
  locate_ = interval_map(fan_, data_);
  cone_duals_.reserve(data_.size());
  for (const ConeRef& sigma : data_.sigma) {
    std::vector<LatticeVector> rays;
    rays.reserve(sigma.rays.size());
    for (int r : sigma.rays) rays.push_back(fan_.rays[r]);
    cone_duals_.push_back(dual_basis(rays));
  }
  for (int r : data_.sigma.back().rays) last_cone_rays_.push_back(fan_.rays[r]);
}

NormalForm Reducer::unit(int i) const {
  NormalForm out(mode_, fan_.dim, data_.size());
  out.coeffs[i] = CoeffElem::constant(mode_, fan_.dim, 1);
  return out;
}

CoeffElem Reducer::r_of_u(const DualVector& u) const {
  std::vector<Int> a;
  a.reserve(last_cone_rays_.size());
  for (const LatticeVector& w : last_cone_rays_) a.push_back(pairing(u, w));
  return mode_ == Mode::additive ? r_u_additive(fan_.dim, a)
                                 : r_u_multiplicative(fan_.dim, a);
}

const DualVector& Reducer::dual_in_cone(int i, int ray) const {
  const std::vector<int>& rays = data_.sigma[i].rays;
  auto it = std::lower_bound(rays.begin(), rays.end(), ray);
  if (it == rays.end() || *it != ray) {
    throw internal_error("ray is not part of the chosen maximal cone");
  }
  return cone_duals_[i][it - rays.begin()];
}

void Reducer::warm_up() {
  long nodes = 0;
  for (const ConeRef& face : faces_) squarefree(face, nodes);
}

NormalForm Reducer::reduce(const XPolynomial& p) const {
  if (p.mode != mode_) {
    throw mode_error("polynomial mode does not match this reducer");
  }
  if (p.d != fan_.ray_count() || p.n != fan_.dim) {
    throw dimension_error("polynomial shape does not match the fan");
  }
  long nodes = 0;
  return reduce_poly(p, nodes);
}

NormalForm Reducer::reduce_poly(const XPolynomial& p, long& nodes) const {
  NormalForm out(mode_, fan_.dim, data_.size());
  for (const auto& [exp, coeff] : p.terms) {
    out = out + coeff * reduce_monomial(exp, nodes);
  }
  return out;
}

NormalForm Reducer::reduce_monomial(const std::vector<int>& exp,
                                    long& nodes) const {
  if (++nodes > kNodeBudget) {
    throw internal_error("reduction exceeded its node budget");
  }
  std::vector<int> support_rays;
  int repeated = -1;
  for (int j = 0; j < static_cast<int>(exp.size()); ++j) {
    if (exp[j] > 0) support_rays.push_back(j);
    if (exp[j] > 1 && repeated < 0) repeated = j;
  }
  ConeRef support(std::move(support_rays));
  if (!faces_.count(support)) {
    return NormalForm(mode_, fan_.dim, data_.size());
  }
  if (repeated < 0) return squarefree(support, nodes);

  // Substitute for one copy of x_j through the relation dual to v_j in
  // the first maximal cone over the support.
  int i = locate_.at(support);
  const ConeRef& beta = data_.sigma[i];
  const DualVector& u = dual_in_cone(i, repeated);
  std::vector<int> rest = exp;
  rest[repeated] -= 1;

  if (mode_ == Mode::additive) {
    NormalForm out = r_of_u(u) * reduce_monomial(rest, nodes);
    for (int k = 0; k < fan_.ray_count(); ++k) {
      if (beta.contains(k)) continue;
      Int c = pairing(u, fan_.rays[k]);
      if (c == 0) continue;
      if (!faces_.count(cone_union(support, ConeRef({k})))) continue;
      std::vector<int> side = rest;
      side[k] += 1;
      out = out - c * reduce_monomial(side, nodes);
    }
    return out;
  }

  std::vector<std::pair<int, Int>> pos, neg;
  for (int k = 0; k < fan_.ray_count(); ++k) {
    if (beta.contains(k)) continue;
    Int c = pairing(u, fan_.rays[k]);
    if (c == 0) continue;
    if (!faces_.count(cone_union(support, ConeRef({k})))) continue;
    (c > 0 ? pos : neg).emplace_back(k, c > 0 ? c : -c);
  }
  XPolynomial p = face_product(support, pos);
  XPolynomial q = face_product(support, neg);
  XPolynomial mono_rest(mode_, fan_.ray_count(), fan_.dim);
  mono_rest.add_term(rest, CoeffElem::constant(mode_, fan_.dim, 1));
  XPolynomial mono_full(mode_, fan_.ray_count(), fan_.dim);
  mono_full.add_term(exp, CoeffElem::constant(mode_, fan_.dim, 1));
  XPolynomial one = XPolynomial::one(mode_, fan_.ray_count(), fan_.dim);
  XPolynomial rhs =
      mono_rest * p - r_of_u(u) * (mono_rest * q) - mono_full * (p - one);
  return reduce_poly(rhs, nodes);
}

const NormalForm& Reducer::squarefree(const ConeRef& gamma, long& nodes) const {
  auto it = memo_.find(gamma);
  if (it != memo_.end()) return it->second;
  NormalForm value = peel(gamma, locate_.at(gamma), nodes);
  return memo_.emplace(gamma, std::move(value)).first->second;
}

NormalForm Reducer::peel(const ConeRef& cur, int interval, long& nodes) const {
  if (++nodes > kNodeBudget) {
    throw internal_error("reduction exceeded its node budget");
  }
  const ConeRef& tau = data_.tau[interval];
  if (cur == tau) return unit(interval);

  int j = -1;
  for (int r : cur.rays) {
    if (!tau.contains(r)) {
      j = r;
      break;
    }
  }
  const ConeRef& beta = data_.sigma[interval];
  const DualVector& u = dual_in_cone(interval, j);
  ConeRef sub = cone_difference(cur, ConeRef({j}));

  if (mode_ == Mode::additive) {
    NormalForm out = r_of_u(u) * peel(sub, interval, nodes);
    for (int k = 0; k < fan_.ray_count(); ++k) {
      if (beta.contains(k)) continue;
      Int c = pairing(u, fan_.rays[k]);
      if (c == 0) continue;
      ConeRef side = cone_union(sub, ConeRef({k}));
      if (!faces_.count(side)) continue;
      out = out - c * squarefree(side, nodes);
    }
    return out;
  }

  std::vector<std::pair<int, Int>> pos, neg;
  for (int k = 0; k < fan_.ray_count(); ++k) {
    if (beta.contains(k)) continue;
    Int c = pairing(u, fan_.rays[k]);
    if (c == 0) continue;
    if (!faces_.count(cone_union(sub, ConeRef({k})))) continue;
    (c > 0 ? pos : neg).emplace_back(k, c > 0 ? c : -c);
  }
  XPolynomial p = face_product(sub, pos);
  XPolynomial q = face_product(sub, neg);
  std::vector<int> sub_exp(fan_.ray_count(), 0);
  for (int r : sub.rays) sub_exp[r] = 1;
  std::vector<int> cur_exp = sub_exp;
  cur_exp[j] = 1;
  XPolynomial mono_sub(mode_, fan_.ray_count(), fan_.dim);
  mono_sub.add_term(sub_exp, CoeffElem::constant(mode_, fan_.dim, 1));
  XPolynomial mono_cur(mode_, fan_.ray_count(), fan_.dim);
  mono_cur.add_term(cur_exp, CoeffElem::constant(mode_, fan_.dim, 1));
  XPolynomial one = XPolynomial::one(mode_, fan_.ray_count(), fan_.dim);
  XPolynomial rhs =
      mono_sub * p - r_of_u(u) * (mono_sub * q) - mono_cur * (p - one);

  // The bare x(sub) term continues the walk inside this interval; all
  // other terms leave sigma_interval and reduce on their own.
  NormalForm out(mode_, fan_.dim, data_.size());
  for (const auto& [exp, coeff] : rhs.terms) {
    if (exp == sub_exp) {
      out = out + coeff * peel(sub, interval, nodes);
    } else {
      out = out + coeff * reduce_monomial(exp, nodes);
    }
  }
  return out;
}

XPolynomial Reducer::face_product(
    const ConeRef& base,
    const std::vector<std::pair<int, Int>>& factors) const {
  XPolynomial out = XPolynomial::one(mode_, fan_.ray_count(), fan_.dim);
  for (const auto& [ray, count] : factors) {
    long reps = count.convert_to<long>();
    for (long t = 0; t < reps; ++t) {
      XPolynomial next(mode_, fan_.ray_count(), fan_.dim);
      for (const auto& [exp, coeff] : out.terms) {
        next.add_term(exp, coeff);
        if (exp[ray] == 0) {
          std::vector<int> grown = base.rays;
          for (int j = 0; j < static_cast<int>(exp.size()); ++j) {
            if (exp[j] > 0) grown.push_back(j);
          }
          grown.push_back(ray);
          std::sort(grown.begin(), grown.end());
          grown.erase(std::unique(grown.begin(), grown.end()), grown.end());
          if (!faces_.count(ConeRef(std::move(grown)))) continue;
        }
        std::vector<int> shifted = exp;
        shifted[ray] += 1;
        next.add_term(std::move(shifted), -coeff);
      }
      out = std::move(next);
    }
  }
  return out;
}

}  // namespace fanring
