#include "fanring/algebra.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "fanring/errors.hpp"

namespace fanring {

std::string to_string(Mode mode) {
  return mode == Mode::additive ? "additive" : "multiplicative";
}

namespace {

void require_same(const CoeffElem& a, const CoeffElem& b) {
  if (a.mode != b.mode)
    throw mode_error("cannot mix additive and multiplicative values");
  if (a.nvars != b.nvars)
    throw dimension_error("coefficient rings have different r-counts");
}

void require_same(const XPolynomial& p, const XPolynomial& q) {
  if (p.mode != q.mode)
    throw mode_error("cannot mix additive and multiplicative values");
  if (p.d != q.d || p.n != q.n)
    throw dimension_error("polynomial rings have different variable counts");
}

void check_exponent(Mode mode, int nvars, const std::vector<int>& exp) {
  if (static_cast<int>(exp.size()) != nvars)
    throw dimension_error("r-exponent vector has wrong length");
  if (mode == Mode::additive)
    for (int e : exp)
      if (e < 0)
        throw mode_error("negative r-exponent requires multiplicative mode");
}

// Print order: ascending total degree, ties broken by descending
// exponent vector, so "1 - r1" and "r1 - r2" both come out naturally.
template <typename Map>
std::vector<typename Map::const_iterator> print_order(const Map& terms) {
  std::vector<typename Map::const_iterator> out;
  for (auto it = terms.begin(); it != terms.end(); ++it) out.push_back(it);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    int da = std::accumulate(a->first.begin(), a->first.end(), 0);
    int db = std::accumulate(b->first.begin(), b->first.end(), 0);
    if (da != db) return da < db;
    return a->first > b->first;
  });
  return out;
}

// Renders |coefficient| * r-monomial without a sign.
std::string term_magnitude(const std::vector<int>& exp, const Int& coeff) {
  std::ostringstream os;
  Int c = coeff < 0 ? Int(-coeff) : coeff;
  bool monomial = std::any_of(exp.begin(), exp.end(),
                              [](int e) { return e != 0; });
  if (c != 1 || !monomial) os << c.str();
  bool first = !(c != 1 || !monomial);
  for (std::size_t i = 0; i < exp.size(); ++i) {
    if (exp[i] == 0) continue;
    if (!first) os << '*';
    first = false;
    os << 'r' << i + 1;
    if (exp[i] != 1) os << '^' << exp[i];
  }
  return os.str();
}

}  // namespace

CoeffElem CoeffElem::constant(Mode m, int n, Int value) {
  CoeffElem c(m, n);
  c.add_term(std::vector<int>(n, 0), std::move(value));
  return c;
}

CoeffElem CoeffElem::r(Mode m, int n, int i, int power) {
  if (i < 0 || i >= n) throw input_error("r index out of range");
  CoeffElem c(m, n);
  std::vector<int> exp(n, 0);
  exp[i] = power;
  c.add_term(std::move(exp), 1);
  return c;
}

bool CoeffElem::is_constant() const {
  return terms.empty() ||
         (terms.size() == 1 &&
          terms.begin()->first == std::vector<int>(nvars, 0));
}

Int CoeffElem::constant_part() const {
  auto it = terms.find(std::vector<int>(nvars, 0));
  return it == terms.end() ? Int(0) : it->second;
}

void CoeffElem::add_term(std::vector<int> exponent, Int coefficient) {
  check_exponent(mode, nvars, exponent);
  if (coefficient == 0) return;
  auto [it, inserted] = terms.try_emplace(std::move(exponent), coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms.erase(it);
  }
}

CoeffElem operator-(const CoeffElem& a) {
  CoeffElem out(a.mode, a.nvars);
  for (const auto& [exp, c] : a.terms) out.terms.emplace(exp, -c);
  return out;
}

CoeffElem operator+(const CoeffElem& a, const CoeffElem& b) {
  require_same(a, b);
  CoeffElem out = a;
  for (const auto& [exp, c] : b.terms) out.add_term(exp, c);
  return out;
}

CoeffElem operator-(const CoeffElem& a, const CoeffElem& b) {
  return a + (-b);
}

CoeffElem operator*(const CoeffElem& a, const CoeffElem& b) {
  require_same(a, b);
  CoeffElem out(a.mode, a.nvars);
  for (const auto& [ea, ca] : a.terms)
    for (const auto& [eb, cb] : b.terms) {
      std::vector<int> exp(a.nvars);
      for (int i = 0; i < a.nvars; ++i) exp[i] = ea[i] + eb[i];
      out.add_term(std::move(exp), ca * cb);
    }
  return out;
}

CoeffElem operator*(const Int& c, const CoeffElem& a) {
  CoeffElem out(a.mode, a.nvars);
  if (c == 0) return out;
  for (const auto& [exp, v] : a.terms) out.terms.emplace(exp, c * v);
  return out;
}

CoeffElem r_u_additive(int n, const std::vector<Int>& a) {
  if (static_cast<int>(a.size()) != n)
    throw dimension_error("dual coordinate vector has wrong length");
  CoeffElem out(Mode::additive, n);
  for (int i = 0; i < n; ++i) {
    std::vector<int> exp(n, 0);
    exp[i] = 1;
    out.add_term(std::move(exp), a[i]);
  }
  return out;
}

CoeffElem r_u_multiplicative(int n, const std::vector<Int>& a) {
  if (static_cast<int>(a.size()) != n)
    throw dimension_error("dual coordinate vector has wrong length");
  CoeffElem out(Mode::multiplicative, n);
  std::vector<int> exp(n);
  for (int i = 0; i < n; ++i) exp[i] = static_cast<int>(a[i]);
  out.add_term(std::move(exp), 1);
  return out;
}

Rat eval(const CoeffElem& c, const std::vector<Rat>& rvals) {
  if (static_cast<int>(rvals.size()) != c.nvars)
    throw dimension_error("evaluation point has wrong length");
  Rat total = 0;
  for (const auto& [exp, coeff] : c.terms) {
    Rat prod = Rat(coeff);
    for (int i = 0; i < c.nvars; ++i) {
      if (exp[i] == 0) continue;
      if (exp[i] < 0 && rvals[i] == 0)
        throw specialization_error("r" + std::to_string(i + 1) +
                                   " must be nonzero here");
      Rat base = exp[i] > 0 ? rvals[i] : Rat(1) / rvals[i];
      for (int k = 0; k < std::abs(exp[i]); ++k) prod *= base;
    }
    total += prod;
  }
  return total;
}

std::string to_string(const CoeffElem& c) {
  if (c.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it : print_order(c.terms)) {
    const bool neg = it->second < 0;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    os << term_magnitude(it->first, it->second);
  }
  return os.str();
}

XPolynomial XPolynomial::zero(Mode m, int d, int n) {
  return XPolynomial(m, d, n);
}

XPolynomial XPolynomial::one(Mode m, int d, int n) {
  XPolynomial p(m, d, n);
  p.add_term(std::vector<int>(d, 0), CoeffElem::constant(m, n, 1));
  return p;
}

XPolynomial XPolynomial::variable(Mode m, int d, int n, int j) {
  if (j < 0 || j >= d) throw input_error("x index out of range");
  XPolynomial p(m, d, n);
  std::vector<int> exp(d, 0);
  exp[j] = 1;
  p.add_term(std::move(exp), CoeffElem::constant(m, n, 1));
  return p;
}

XPolynomial XPolynomial::scalar(int d, CoeffElem c) {
  XPolynomial p(c.mode, d, c.nvars);
  p.add_term(std::vector<int>(d, 0), std::move(c));
  return p;
}

int XPolynomial::x_degree() const {
  int deg = 0;
  for (const auto& [exp, c] : terms)
    deg = std::max(deg, std::accumulate(exp.begin(), exp.end(), 0));
  return deg;
}

void XPolynomial::add_term(std::vector<int> exponent, CoeffElem coefficient) {
  if (static_cast<int>(exponent.size()) != d)
    throw dimension_error("x-exponent vector has wrong length");
  if (coefficient.mode != mode)
    throw mode_error("cannot mix additive and multiplicative values");
  if (coefficient.nvars != n)
    throw dimension_error("coefficient rings have different r-counts");
  for (int e : exponent)
    if (e < 0) throw input_error("negative x-exponent");
  if (coefficient.is_zero()) return;
  auto [it, inserted] = terms.try_emplace(std::move(exponent), coefficient);
  if (!inserted) {
    it->second = it->second + coefficient;
    if (it->second.is_zero()) terms.erase(it);
  }
}

XPolynomial operator-(const XPolynomial& p) {
  XPolynomial out(p.mode, p.d, p.n);
  for (const auto& [exp, c] : p.terms) out.terms.emplace(exp, -c);
  return out;
}

XPolynomial operator+(const XPolynomial& p, const XPolynomial& q) {
  require_same(p, q);
  XPolynomial out = p;
  for (const auto& [exp, c] : q.terms) out.add_term(exp, c);
  return out;
}

XPolynomial operator-(const XPolynomial& p, const XPolynomial& q) {
  return p + (-q);
}

XPolynomial operator*(const XPolynomial& p, const XPolynomial& q) {
  require_same(p, q);
  XPolynomial out(p.mode, p.d, p.n);
  for (const auto& [ep, cp] : p.terms)
    for (const auto& [eq, cq] : q.terms) {
      std::vector<int> exp(p.d);
      for (int j = 0; j < p.d; ++j) exp[j] = ep[j] + eq[j];
      out.add_term(std::move(exp), cp * cq);
    }
  return out;
}

XPolynomial operator*(const CoeffElem& c, const XPolynomial& p) {
  if (c.is_zero()) return XPolynomial::zero(p.mode, p.d, p.n);
  XPolynomial out(p.mode, p.d, p.n);
  for (const auto& [exp, v] : p.terms) out.add_term(exp, c * v);
  return out;
}

XPolynomial operator*(const Int& c, const XPolynomial& p) {
  XPolynomial out(p.mode, p.d, p.n);
  if (c == 0) return out;
  for (const auto& [exp, v] : p.terms) out.terms.emplace(exp, c * v);
  return out;
}

std::map<int, XPolynomial> graded_parts(const XPolynomial& p) {
  if (p.mode != Mode::additive)
    throw mode_error("grading by total degree needs additive mode");
  std::map<int, XPolynomial> parts;
  for (const auto& [xexp, c] : p.terms) {
    int xdeg = std::accumulate(xexp.begin(), xexp.end(), 0);
    for (const auto& [rexp, coeff] : c.terms) {
      int deg = xdeg + std::accumulate(rexp.begin(), rexp.end(), 0);
      auto [it, inserted] =
          parts.emplace(deg, XPolynomial(p.mode, p.d, p.n));
      CoeffElem single(p.mode, p.n);
      single.add_term(rexp, coeff);
      it->second.add_term(xexp, std::move(single));
    }
  }
  return parts;
}

std::string to_string(const XPolynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it : print_order(p.terms)) {
    const auto& [exp, c] = *it;
    // Single-term coefficients fold their sign into the join; anything
    // longer is parenthesized and joined with a plus.
    bool neg = c.terms.size() == 1 && c.terms.begin()->second < 0;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;

    std::string mono;
    for (int j = 0; j < p.d; ++j) {
      if (exp[j] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += 'x' + std::to_string(j + 1);
      if (exp[j] != 1) mono += '^' + std::to_string(exp[j]);
    }

    std::string coeff;
    bool unit = false;
    if (c.terms.size() == 1) {
      coeff = term_magnitude(c.terms.begin()->first, c.terms.begin()->second);
      unit = coeff == "1";
    } else {
      coeff = '(' + to_string(c) + ')';
    }

    if (mono.empty())
      os << coeff;
    else if (unit)
      os << mono;
    else
      os << coeff << '*' << mono;
  }
  return os.str();
}

}  // namespace fanring
