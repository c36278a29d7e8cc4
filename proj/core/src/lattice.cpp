#include "fanring/lattice.hpp"

#include <boost/multiprecision/gmp.hpp>

#include "detail/exactlin.hpp"

namespace fanring {

using boost::multiprecision::gcd;

Int pairing(const DualVector& u, const LatticeVector& v) {
  if (u.size() != v.size())
    throw dimension_error("pairing: length mismatch (" +
                          std::to_string(u.size()) + " vs " +
                          std::to_string(v.size()) + ")");
  Int acc = 0;
  for (std::size_t i = 0; i < u.size(); ++i) acc += u.coords[i] * v.coords[i];
  return acc;
}

bool is_primitive(const LatticeVector& v) {
  Int g = 0;
  for (const Int& c : v.coords) g = gcd(g, c);
  if (g == 0) throw invalid_ray_error("is_primitive: zero vector");
  return g == 1;
}

std::vector<Int> elementary_divisors(const std::vector<LatticeVector>& vs) {
  detail::ZMat a;
  a.reserve(vs.size());
  std::size_t n = vs.empty() ? 0 : vs[0].size();
  for (const auto& v : vs) {
    if (v.size() != n)
      throw dimension_error("elementary_divisors: ragged input");
    a.push_back(v.coords);
  }
  return detail::smith_elementary_divisors(std::move(a));
}

bool is_unimodular(const std::vector<LatticeVector>& vs) {
  if (vs.empty()) return true;  // empty set extends to any basis
  std::size_t n = vs[0].size();
  if (vs.size() > n) return false;
  auto divs = elementary_divisors(vs);
  if (divs.size() != vs.size()) return false;
  for (const Int& d : divs)
    if (d != 1) return false;  // d == 0 covers dependent input
  return true;
}

std::vector<DualVector> dual_basis(const std::vector<LatticeVector>& vs) {
  std::size_t n = vs.size();
  for (const auto& v : vs)
    if (v.size() != n)
      throw dimension_error("dual_basis: need n vectors of length n");
  if (!is_unimodular(vs))
    throw not_smooth_error("dual_basis: vectors are not a Z-basis");

  // Rays as columns of A; the dual basis is the rows of A^{-1}.
  detail::QMat a(n, std::vector<Rat>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rat(vs[j].coords[i]);
  auto inv = detail::qinverse(a);
  if (!inv) throw internal_error("dual_basis: unimodular matrix not invertible");

  std::vector<DualVector> duals(n);
  for (std::size_t i = 0; i < n; ++i) {
    duals[i].coords.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
      const Rat& e = (*inv)[i][j];
      if (denominator(e) != 1)
        throw internal_error("dual_basis: non-integral inverse entry");
      duals[i].coords[j] = numerator(e);
    }
  }
  return duals;
}

}  // namespace fanring
