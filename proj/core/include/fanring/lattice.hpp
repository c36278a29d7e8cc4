#pragma once

// Exact integer lattice arithmetic: the lattice N of one-parameter
// subgroups, its dual M of characters, and the unimodularity tests
// everything else relies on.  All arithmetic is arbitrary precision.

#include <boost/multiprecision/gmp.hpp>

#include <compare>
#include <vector>

#include "fanring/errors.hpp"

namespace fanring {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

// Point of N, written in the fixed coordinates of N = Z^n.
struct LatticeVector {
  std::vector<Int> coords;

  LatticeVector() = default;
  explicit LatticeVector(std::vector<Int> c) : coords(std::move(c)) {}
  LatticeVector(std::initializer_list<long> c) {
    for (long v : c) coords.emplace_back(v);
  }

  std::size_t size() const { return coords.size(); }
  bool operator==(const LatticeVector&) const = default;
};

// Point of the dual lattice M = Hom(N, Z).  Kept as a distinct type so
// that a character is never silently used as a one-parameter subgroup.
struct DualVector {
  std::vector<Int> coords;

  DualVector() = default;
  explicit DualVector(std::vector<Int> c) : coords(std::move(c)) {}
  DualVector(std::initializer_list<long> c) {
    for (long v : c) coords.emplace_back(v);
  }

  std::size_t size() const { return coords.size(); }
  bool operator==(const DualVector&) const = default;
};

// <u, v> under the canonical pairing M x N -> Z.
// Throws dimension_error on length mismatch.
Int pairing(const DualVector& u, const LatticeVector& v);

// True iff gcd of the coordinates is 1, i.e. v generates N cap (Q * v).
// Throws invalid_ray_error on the zero vector.
bool is_primitive(const LatticeVector& v);

// Elementary divisors d_1 | d_2 | ... of the k x n matrix whose rows are
// the given vectors, padded with zeros up to min(k, n) entries.
// Nonnegative, and zeros indicate a rank deficit.
std::vector<Int> elementary_divisors(const std::vector<LatticeVector>& vs);

// True iff the k given vectors extend to a Z-basis of N, i.e. all k
// elementary divisors equal 1.  Dependent input yields false.
bool is_unimodular(const std::vector<LatticeVector>& vs);

// For n vectors forming a Z-basis, returns u_1..u_n in M with
// <u_i, v_j> = delta_ij.  Throws not_smooth_error if the input is not a
// Z-basis, dimension_error if it is not square.
std::vector<DualVector> dual_basis(const std::vector<LatticeVector>& vs);

}  // namespace fanring
