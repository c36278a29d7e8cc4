#include "detail/exactlin.hpp"

#include <algorithm>
#include <map>

namespace fanring::detail {

namespace {

using boost::multiprecision::abs;
using boost::multiprecision::gcd;

// Position of an entry with minimal nonzero absolute value in the
// submatrix a[t..][t..], or nullopt if that submatrix is zero.
std::optional<std::pair<std::size_t, std::size_t>> min_nonzero(const ZMat& a,
                                                              std::size_t t) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  Int best_abs = 0;
  for (std::size_t i = t; i < a.size(); ++i)
    for (std::size_t j = t; j < a[i].size(); ++j) {
      if (a[i][j] == 0) continue;
      Int v = abs(a[i][j]);
      if (!best || v < best_abs) {
        best = {i, j};
        best_abs = v;
      }
    }
  return best;
}

}  // namespace

std::vector<Int> smith_elementary_divisors(ZMat a) {
  std::size_t rows = a.size();
  std::size_t cols = rows ? a[0].size() : 0;
  std::size_t k = std::min(rows, cols);
  std::vector<Int> divisors;

  for (std::size_t t = 0; t < k; ++t) {
    for (;;) {
      auto pos = min_nonzero(a, t);
      if (!pos) {
        // Remaining block is zero; pad below.
        for (std::size_t s = t; s < k; ++s) divisors.emplace_back(0);
        return divisors;
      }
      std::swap(a[t], a[pos->first]);
      for (std::size_t i = t; i < rows; ++i)
        std::swap(a[i][t], a[i][pos->second]);

      // Reduce column t, then row t, against the pivot.
      bool again = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        Int q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) again = true;  // remainder smaller than pivot
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        Int q = a[t][j] / a[t][t];
        for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) again = true;
      }
      if (again) continue;

      // Pivot must divide every remaining entry; if not, fold the
      // offending row in and restart the reduction.
      bool fixed = true;
      for (std::size_t i = t + 1; i < rows && fixed; ++i)
        for (std::size_t j = t + 1; j < cols && fixed; ++j)
          if (a[i][j] % a[t][t] != 0) {
            for (std::size_t c = t; c < cols; ++c) a[t][c] += a[i][c];
            fixed = false;
          }
      if (fixed) break;
    }
    divisors.push_back(abs(a[t][t]));
  }
  return divisors;
}

std::optional<QMat> qinverse(const QMat& a) {
  std::size_t n = a.size();
  QMat work = a;
  QMat inv(n, std::vector<Rat>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) return std::nullopt;
    inv[i][i] = 1;
  }

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && work[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(work[piv], work[col]);
    std::swap(inv[piv], inv[col]);
    Rat lead = work[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      work[col][j] /= lead;
      inv[col][j] /= lead;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || work[i][col] == 0) continue;
      Rat f = work[i][col];
      for (std::size_t j = 0; j < n; ++j) {
        work[i][j] -= f * work[col][j];
        inv[i][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

std::optional<std::vector<Rat>> qsolve(QMat a, std::vector<Rat> b) {
  std::size_t n = a.size();
  if (b.size() != n) return std::nullopt;
  for (auto& row : a)
    if (row.size() != n) return std::nullopt;

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    Rat lead = a[col][col];
    for (std::size_t j = col; j < n; ++j) a[col][j] /= lead;
    b[col] /= lead;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a[i][col] == 0) continue;
      Rat f = a[i][col];
      for (std::size_t j = col; j < n; ++j) a[i][j] -= f * a[col][j];
      b[i] -= f * b[col];
    }
  }
  return b;
}

namespace {

// Scale so the first nonzero coefficient has absolute value 1 and
// denominators clear; used only to deduplicate constraints.
void normalize_constraint(QConstraint& c) {
  Rat scale = 0;
  for (const Rat& v : c.coeff)
    if (v != 0) {
      scale = abs(v);
      break;
    }
  if (scale == 0) {
    if (c.rhs != 0) scale = abs(c.rhs);
    else return;
  }
  for (Rat& v : c.coeff) v /= scale;
  c.rhs /= scale;
}

}  // namespace

bool fm_feasible(std::vector<QConstraint> sys) {
  if (sys.empty()) return true;
  std::size_t nvars = sys[0].coeff.size();

  for (std::size_t var = nvars; var-- > 0;) {
    std::vector<QConstraint> pos, neg, rest;
    for (auto& c : sys) {
      if (c.coeff[var] > 0) pos.push_back(std::move(c));
      else if (c.coeff[var] < 0) neg.push_back(std::move(c));
      else rest.push_back(std::move(c));
    }
    // x_var >= rhs/p from pos rows, x_var <= rhs/n from neg rows;
    // pair them up and drop the variable.
    for (const auto& p : pos)
      for (const auto& q : neg) {
        QConstraint c;
        c.coeff.assign(var, 0);
        Rat pf = p.coeff[var], qf = -q.coeff[var];
        for (std::size_t j = 0; j < var; ++j)
          c.coeff[j] = p.coeff[j] * qf + q.coeff[j] * pf;
        c.rhs = p.rhs * qf + q.rhs * pf;
        normalize_constraint(c);
        rest.push_back(std::move(c));
      }
    for (auto& c : rest) c.coeff.resize(var);

    // Deduplicate; Fourier-Motzkin blows up otherwise.
    std::map<std::pair<std::vector<Rat>, Rat>, bool> seen;
    sys.clear();
    for (auto& c : rest) {
      auto key = std::make_pair(c.coeff, c.rhs);
      if (seen.emplace(std::move(key), true).second) sys.push_back(std::move(c));
    }
  }

  for (const auto& c : sys)
    if (c.rhs > 0) return false;  // 0 >= rhs fails
  return true;
}

}  // namespace fanring::detail
