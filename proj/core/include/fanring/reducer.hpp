#pragma once

// Rewrites polynomials onto the module basis x(tau_1)..x(tau_m).
//
// A monomial reduces in three phases.  Monomials whose support is not
// a face vanish.  A repeated factor x_j^2 is rewritten through the
// relation attached to the dual of v_j in the first maximal cone
// containing the support; the substitution either lowers the degree or
// strictly enlarges the support.  A squarefree cone monomial x(gamma)
// is expanded within its interval i = locate_interval(gamma): peeling
// rays of gamma \ tau_i one at a time walks down to x(tau_i), and all
// side terms have supports containing tau_i but leaving sigma_i, which
// places them in strictly later intervals.  That downward walk over
// intervals is what makes the recursion finite; squarefree results are
// memoized per support.

#include <map>
#include <set>
#include <vector>

#include "fanring/algebra.hpp"
#include "fanring/fan.hpp"
#include "fanring/shelling.hpp"

namespace fanring {

// Coordinates of a ring element over the basis x(tau_1)..x(tau_m).
struct NormalForm {
  Mode mode = Mode::additive;
  int n = 0;
  std::vector<CoeffElem> coeffs;

  NormalForm() = default;
  NormalForm(Mode m, int n_, int size)
      : mode(m), n(n_), coeffs(size, CoeffElem(m, n_)) {}

  int size() const { return static_cast<int>(coeffs.size()); }
  bool is_zero() const;

  bool operator==(const NormalForm&) const = default;
};

NormalForm operator+(const NormalForm& a, const NormalForm& b);
NormalForm operator-(const NormalForm& a, const NormalForm& b);
NormalForm operator*(const CoeffElem& c, const NormalForm& a);
NormalForm operator*(const Int& c, const NormalForm& a);

class Reducer {
 public:
  // Needs an order satisfying the first interval condition
  // (unsupported_fan_error otherwise).
  Reducer(const Fan& fan, const ShellingData& data, Mode mode);

  Mode mode() const { return mode_; }
  int basis_size() const { return data_.size(); }

  // Fills the squarefree memo for every face.  reduce is lazily
  // memoizing either way; after warm_up it is read-only and safe to
  // call from several threads.
  void warm_up();

  NormalForm reduce(const XPolynomial& p) const;

 private:
  NormalForm unit(int i) const;
  CoeffElem r_of_u(const DualVector& u) const;
  const DualVector& dual_in_cone(int i, int ray) const;

  NormalForm reduce_poly(const XPolynomial& p, long& nodes) const;
  NormalForm reduce_monomial(const std::vector<int>& exp, long& nodes) const;
  const NormalForm& squarefree(const ConeRef& gamma, long& nodes) const;
  NormalForm peel(const ConeRef& cur, int interval, long& nodes) const;

  // Product of (1 - x_p)^{c_p}, keeping only monomials whose support
  // together with base stays a face.
  XPolynomial face_product(const ConeRef& base,
                           const std::vector<std::pair<int, Int>>& factors)
      const;

  Fan fan_;
  ShellingData data_;
  Mode mode_;
  std::set<ConeRef> faces_;
  std::map<ConeRef, int> locate_;
  std::vector<std::vector<DualVector>> cone_duals_;  // by order position
  std::vector<LatticeVector> last_cone_rays_;
  mutable std::map<ConeRef, NormalForm> memo_;
};

}  // namespace fanring
