#pragma once

// Independent cross-checks for the reducer, by brute-force linear
// algebra over the rationals.  Nothing here shares code with the
// rewriting engine: the quotient is rebuilt from the presentation as a
// big sparse system and row-reduced exactly.
//
// The additive check works degree by degree, with x_j and r_i both of
// degree one; columns are pairs (x-monomial, r-monomial) with a face
// x-support, rows are monomial multiples of the linear relations.  The
// multiplicative check first sends r_1..r_n to random nonzero integers,
// then truncates by x-degree and grows the truncation window until the
// quotient dimension repeats; coordinates live over the rationals at
// that specialization.
//
// Either way the surviving quotient must match the interval basis
// x(tau_1)..x(tau_m) exactly; any discrepancy in dimension, and any
// residue that fails to land on the basis, raises
// freeness_violation_error rather than being papered over.

#include <map>
#include <memory>
#include <set>
#include <utility>
#include <vector>

#include "fanring/algebra.hpp"
#include "fanring/fan.hpp"
#include "fanring/presentation.hpp"
#include "fanring/reducer.hpp"
#include "fanring/shelling.hpp"

namespace fanring {

class AdditiveOracle {
 public:
  AdditiveOracle(const Fan& fan, const ShellingData& data);
  ~AdditiveOracle();

  // Normal form of an additive polynomial, computed by row reduction
  // alone.  Agreement with Reducer::reduce is the point.
  NormalForm reduce(const XPolynomial& p);

  // Dimension of the degree-k slice of the quotient as the row
  // reduction sees it.  Building the slice already verifies it against
  // predicted_dimension.
  long quotient_dimension(int degree);
  // Count of basis elements x(tau_i) * r-monomial in degree k.
  long predicted_dimension(int degree) const;

 private:
  using ColKey = std::pair<std::vector<int>, std::vector<int>>;
  struct Slice;

  Slice& ensure(int degree);

  Fan fan_;
  ShellingData data_;
  Presentation pres_;
  std::set<ConeRef> faces_;
  std::map<ConeRef, int> tau_index_;
  std::map<int, Slice> slices_;
};

class MultiplicativeOracle {
 public:
  MultiplicativeOracle(const Fan& fan, const ShellingData& data,
                       unsigned seed);
  ~MultiplicativeOracle();

  const std::vector<Rat>& r_values() const { return rvals_; }

  // Coordinates of p over x(tau_1)..x(tau_m) at the random
  // specialization of the r-parameters.
  std::vector<Rat> reduce(const XPolynomial& p);

  // A reducer result evaluated at the same specialization, for direct
  // comparison with reduce.
  std::vector<Rat> specialize(const NormalForm& nf) const;

  // The dimension the truncated quotient settles on (always the number
  // of maximal cones; anything else throws while building).
  long stable_dimension();

 private:
  struct Context;

  void ensure(int xdegree);
  long dimension_at(int window, int bigwindow, Context* keep);

  Fan fan_;
  ShellingData data_;
  Presentation pres_;
  std::set<ConeRef> faces_;
  std::vector<Rat> rvals_;
  std::vector<std::vector<int>> tau_exps_;
  std::unique_ptr<Context> ctx_;
};

}  // namespace fanring
