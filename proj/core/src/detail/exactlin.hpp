#pragma once

// Shared exact linear algebra helpers (not installed): Smith-style
// elementary divisors over Z, dense Gauss-Jordan over Q, and a small
// Fourier-Motzkin feasibility test for rational inequality systems.

#include <optional>
#include <utility>
#include <vector>

#include "fanring/lattice.hpp"

namespace fanring::detail {

using ZMat = std::vector<std::vector<Int>>;
using QMat = std::vector<std::vector<Rat>>;

// Diagonal of the Smith normal form, nonnegative, d_1 | d_2 | ...,
// padded with zeros to min(rows, cols).
std::vector<Int> smith_elementary_divisors(ZMat a);

// Inverse of a square rational matrix, or nullopt if singular.
std::optional<QMat> qinverse(const QMat& a);

// Solve a * x = b exactly; nullopt if no unique solution.
std::optional<std::vector<Rat>> qsolve(QMat a, std::vector<Rat> b);

// One linear constraint  sum_i coeff[i] * x_i >= rhs.
struct QConstraint {
  std::vector<Rat> coeff;
  Rat rhs;
};

// Feasibility over Q of a finite conjunction of weak inequalities,
// decided by Fourier-Motzkin elimination.  Intended for small systems
// (the fan validator's pairwise cone checks).
bool fm_feasible(std::vector<QConstraint> sys);

}  // namespace fanring::detail
