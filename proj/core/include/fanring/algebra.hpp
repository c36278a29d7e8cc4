#pragma once

// Exact arithmetic for the coefficient ring Z[r_1..r_n] and for
// polynomials in x_1..x_d over it.  Every value carries a mode tag:
// additive values keep r-exponents nonnegative, multiplicative values
// may use negative r-exponents (Laurent terms).  Mixing modes in one
// operation is an error, not a coercion.

#include <map>
#include <string>
#include <vector>

#include "fanring/lattice.hpp"

namespace fanring {

enum class Mode { additive, multiplicative };

std::string to_string(Mode mode);

// An element of the coefficient ring: finitely many r-exponent vectors
// (length nvars) with nonzero integer coefficients.
struct CoeffElem {
  Mode mode = Mode::additive;
  int nvars = 0;
  std::map<std::vector<int>, Int> terms;

  CoeffElem() = default;
  CoeffElem(Mode m, int n) : mode(m), nvars(n) {}

  static CoeffElem constant(Mode m, int n, Int value);
  // The generator r_{i+1} raised to a power; negative powers need
  // multiplicative mode.
  static CoeffElem r(Mode m, int n, int i, int power = 1);

  bool is_zero() const { return terms.empty(); }
  bool is_constant() const;
  // Coefficient of the exponent-zero term (0 when absent).
  Int constant_part() const;

  // Merges one term in, keeping the no-zero-coefficient invariant.
  void add_term(std::vector<int> exponent, Int coefficient);

  bool operator==(const CoeffElem&) const = default;
};

CoeffElem operator-(const CoeffElem& a);
CoeffElem operator+(const CoeffElem& a, const CoeffElem& b);
CoeffElem operator-(const CoeffElem& a, const CoeffElem& b);
CoeffElem operator*(const CoeffElem& a, const CoeffElem& b);
CoeffElem operator*(const Int& c, const CoeffElem& a);

// Sum a_i r_i for u = sum a_i u_i in dual coordinates.
CoeffElem r_u_additive(int n, const std::vector<Int>& a);
// Product r_i^{a_i}, a Laurent monomial.
CoeffElem r_u_multiplicative(int n, const std::vector<Int>& a);

// Value at r = rvals.  Multiplicative elements need every rvals[i]
// nonzero (specialization_error otherwise).
Rat eval(const CoeffElem& c, const std::vector<Rat>& rvals);

std::string to_string(const CoeffElem& c);

// A polynomial in x_1..x_d with CoeffElem coefficients, all of one
// mode and r-variable count.
struct XPolynomial {
  Mode mode = Mode::additive;
  int d = 0;
  int n = 0;
  std::map<std::vector<int>, CoeffElem> terms;

  XPolynomial() = default;
  XPolynomial(Mode m, int d_, int n_) : mode(m), d(d_), n(n_) {}

  static XPolynomial zero(Mode m, int d, int n);
  static XPolynomial one(Mode m, int d, int n);
  // The generator x_{j+1}.
  static XPolynomial variable(Mode m, int d, int n, int j);
  static XPolynomial scalar(int d, CoeffElem c);

  bool is_zero() const { return terms.empty(); }
  int x_degree() const;

  void add_term(std::vector<int> exponent, CoeffElem coefficient);

  bool operator==(const XPolynomial&) const = default;
};

XPolynomial operator-(const XPolynomial& p);
XPolynomial operator+(const XPolynomial& p, const XPolynomial& q);
XPolynomial operator-(const XPolynomial& p, const XPolynomial& q);
XPolynomial operator*(const XPolynomial& p, const XPolynomial& q);
XPolynomial operator*(const CoeffElem& c, const XPolynomial& p);
XPolynomial operator*(const Int& c, const XPolynomial& p);

// Splits an additive-mode polynomial by total degree, counting both
// x_j and r_i as degree one.  Summing the parts gives back the input.
std::map<int, XPolynomial> graded_parts(const XPolynomial& p);

std::string to_string(const XPolynomial& p);

}  // namespace fanring
