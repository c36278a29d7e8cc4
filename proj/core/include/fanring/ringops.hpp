#pragma once

// Ring-level outputs built on the normal-form engine: multiplication
// tables over the basis x(tau_1)..x(tau_m), Betti numbers of the fiber
// at r = 0, the pairing against the complementary faces tau'_j, and
// substitution of the parameters r_i by concrete values.  Targets for
// substitution are either plain integers or polynomials in nilpotent
// variables t_1..t_s subject to t_j^{cap_j} = 0; the latter model
// cohomology rings of product-of-projective-space bases.

#include <map>
#include <string>
#include <vector>

#include "fanring/fan.hpp"
#include "fanring/reducer.hpp"
#include "fanring/shelling.hpp"

namespace fanring {

// Products of basis elements, row-major: at(i, j) is the normal form
// of x(tau_{i+1}) * x(tau_{j+1}).
struct MultTable {
  Mode mode = Mode::additive;
  int n = 0;
  int size = 0;
  std::vector<NormalForm> entries;

  const NormalForm& at(int i, int j) const { return entries[i * size + j]; }
  NormalForm& at(int i, int j) { return entries[i * size + j]; }

  bool operator==(const MultTable&) const = default;
};

// Reduces every product of two basis elements.  With jobs > 1 the
// entries are filled by that many worker threads after a shared
// warm-up pass; the result does not depend on the thread count.
MultTable mult_table(const Fan& fan, const ShellingData& data, Mode mode,
                     int jobs = 1);

// Product of two already-reduced elements through the table:
// sum over i, j of a_i * b_j * at(i, j).
NormalForm table_mul(const MultTable& table, const NormalForm& a,
                     const NormalForm& b);

// Even Betti numbers b_0, b_2, .., b_{2n} of the fiber: the entry for
// 2k counts interval bottoms tau_i of dimension k.  Odd Betti numbers
// all vanish, so they are not listed.
std::vector<int> betti(const Fan& fan, const ShellingData& data);

// Outcome of pairing x(tau_i) against x(tau'_j) at r = 0.  The matrix
// stores the coefficient on the top basis element x(sigma_m);
// triangular means every product with j < i reduced to zero outright,
// and unit_diagonal means every diagonal product reduced to exactly
// plus or minus the top basis element.
struct DualityReport {
  int size = 0;
  std::vector<Int> pairing;  // row-major size x size
  bool triangular = false;
  bool unit_diagonal = false;

  const Int& at(int i, int j) const { return pairing[i * size + j]; }
  bool ok() const { return triangular && unit_diagonal; }
};

// Needs an order satisfying both (*) and (*'), since the tau'_j only
// behave for such orders (unsupported_fan_error otherwise).
DualityReport duality_check(const Fan& fan, const ShellingData& data);

// A polynomial in the truncation variables of a specialization target.
// The all-zero exponent is the constant term; a target with no
// variables makes every value a plain integer.
struct TruncPoly {
  std::map<std::vector<int>, Int> terms;

  static TruncPoly constant(int vars, Int value);
  // scale * t_{j+1}
  static TruncPoly variable(int vars, int j, Int scale = 1);

  bool is_zero() const { return terms.empty(); }
  Int constant_part() const;

  bool operator==(const TruncPoly&) const = default;
};

TruncPoly trunc_add(const TruncPoly& a, const TruncPoly& b);
TruncPoly trunc_scale(const Int& c, const TruncPoly& a);
// Drops every product term whose exponent reaches a cap.
TruncPoly trunc_mul(const TruncPoly& a, const TruncPoly& b,
                    const std::vector<int>& caps);

std::string to_string(const TruncPoly& p);

// Assignment r_i -> value in Z[t_1..t_s] / (t_j^{cap_j}).  A
// multiplicative target needs every value invertible, which over these
// coefficients means constant term +1 or -1 (specialization_error
// otherwise); inverses are computed once up front.
class SpecializationTarget {
 public:
  static SpecializationTarget integers(Mode mode, std::vector<Int> values);
  static SpecializationTarget truncated(Mode mode, std::vector<int> caps,
                                        std::vector<TruncPoly> values);
  // Every r_i mapped to the same integer (the r = 0 and r = 1 cases).
  static SpecializationTarget all_equal(Mode mode, int n, const Int& value);

  Mode mode() const { return mode_; }
  int nparams() const { return static_cast<int>(values_.size()); }
  int vars() const { return static_cast<int>(caps_.size()); }
  const std::vector<int>& caps() const { return caps_; }
  const TruncPoly& value(int i) const { return values_[i]; }
  const TruncPoly& inverse(int i) const;

 private:
  SpecializationTarget() = default;

  Mode mode_ = Mode::additive;
  std::vector<int> caps_;
  std::vector<TruncPoly> values_;
  std::vector<TruncPoly> inverses_;
};

// Applies the target to each coefficient of a normal form; the result
// has one value per basis element.
std::vector<TruncPoly> specialize(const NormalForm& nf,
                                  const SpecializationTarget& target);

struct SpecTable {
  int size = 0;
  std::vector<std::vector<TruncPoly>> entries;  // row-major

  const std::vector<TruncPoly>& at(int i, int j) const {
    return entries[i * size + j];
  }

  bool operator==(const SpecTable&) const = default;
};

SpecTable specialize(const MultTable& table, const SpecializationTarget& target);

// One line per product, basis elements labeled by their tau ray sets.
std::string table_text(const MultTable& table, const ShellingData& data);

}  // namespace fanring
