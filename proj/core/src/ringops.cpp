#include "fanring/ringops.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <thread>

#include "fanring/errors.hpp"

namespace fanring {

namespace {

std::vector<int> face_exponent(int d, const ConeRef& a, const ConeRef& b) {
  std::vector<int> exp(d, 0);
  for (int ray : a.rays) ++exp[ray];
  for (int ray : b.rays) ++exp[ray];
  return exp;
}

XPolynomial basis_product(Mode mode, const Fan& fan, const ConeRef& a,
                          const ConeRef& b) {
  XPolynomial p(mode, fan.ray_count(), fan.dim);
  p.add_term(face_exponent(fan.ray_count(), a, b),
             CoeffElem::constant(mode, fan.dim, 1));
  return p;
}

}  // namespace

MultTable mult_table(const Fan& fan, const ShellingData& data, Mode mode,
                     int jobs) {
  Reducer red(fan, data, mode);
  red.warm_up();
  const int m = data.size();
  MultTable table;
  table.mode = mode;
  table.n = fan.dim;
  table.size = m;
  table.entries.assign(static_cast<std::size_t>(m) * m,
                       NormalForm(mode, fan.dim, m));

  std::vector<std::pair<int, int>> todo;
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) todo.emplace_back(i, j);

  auto fill = [&](const std::pair<int, int>& ij) {
    auto [i, j] = ij;
    NormalForm nf =
        red.reduce(basis_product(mode, fan, data.tau[i], data.tau[j]));
    table.at(i, j) = nf;
    if (i != j) table.at(j, i) = std::move(nf);
  };

  int workers = std::min<int>(std::max(jobs, 1), static_cast<int>(todo.size()));
  if (workers <= 1) {
    for (const auto& ij : todo) fill(ij);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t k = next++; k < todo.size(); k = next++) fill(todo[k]);
      });
    for (auto& t : pool) t.join();
  }
  return table;
}

NormalForm table_mul(const MultTable& table, const NormalForm& a,
                     const NormalForm& b) {
  if (a.mode != table.mode || b.mode != table.mode)
    throw mode_error("normal form mode does not match the table");
  if (a.size() != table.size || b.size() != table.size || a.n != table.n ||
      b.n != table.n)
    throw dimension_error("normal form shape does not match the table");
  NormalForm out(table.mode, table.n, table.size);
  for (int i = 0; i < table.size; ++i) {
    if (a.coeffs[i].is_zero()) continue;
    for (int j = 0; j < table.size; ++j) {
      if (b.coeffs[j].is_zero()) continue;
      out = out + (a.coeffs[i] * b.coeffs[j]) * table.at(i, j);
    }
  }
  return out;
}

std::vector<int> betti(const Fan& fan, const ShellingData& data) {
  if (!data.star_ok)
    throw unsupported_fan_error("order does not satisfy (*)");
  std::vector<int> b(fan.dim + 1, 0);
  for (const ConeRef& t : data.tau) ++b[t.dim()];
  return b;
}

DualityReport duality_check(const Fan& fan, const ShellingData& data) {
  if (!data.star_ok || !data.star_prime_ok)
    throw unsupported_fan_error("order does not satisfy (*) and (*')");
  Reducer red(fan, data, Mode::additive);
  red.warm_up();
  const int m = data.size();
  auto zero = SpecializationTarget::all_equal(Mode::additive, fan.dim, 0);

  DualityReport report;
  report.size = m;
  report.pairing.assign(static_cast<std::size_t>(m) * m, 0);
  report.triangular = true;
  report.unit_diagonal = true;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      NormalForm nf = red.reduce(basis_product(Mode::additive, fan, data.tau[i],
                                               data.tau_prime[j]));
      std::vector<TruncPoly> coords = specialize(nf, zero);
      report.pairing[i * m + j] = coords[m - 1].constant_part();
      bool rest_zero = true;
      for (int l = 0; l + 1 < m; ++l)
        if (!coords[l].is_zero()) rest_zero = false;
      if (j < i && !(rest_zero && coords[m - 1].is_zero()))
        report.triangular = false;
      if (j == i) {
        Int c = coords[m - 1].constant_part();
        if (!rest_zero || (c != 1 && c != -1)) report.unit_diagonal = false;
      }
    }
  }
  return report;
}

TruncPoly TruncPoly::constant(int vars, Int value) {
  TruncPoly p;
  if (value != 0) p.terms.emplace(std::vector<int>(vars, 0), std::move(value));
  return p;
}

TruncPoly TruncPoly::variable(int vars, int j, Int scale) {
  if (j < 0 || j >= vars) throw input_error("t index out of range");
  TruncPoly p;
  if (scale != 0) {
    std::vector<int> exp(vars, 0);
    exp[j] = 1;
    p.terms.emplace(std::move(exp), std::move(scale));
  }
  return p;
}

Int TruncPoly::constant_part() const {
  for (const auto& [exp, c] : terms)
    if (std::all_of(exp.begin(), exp.end(), [](int e) { return e == 0; }))
      return c;
  return 0;
}

TruncPoly trunc_add(const TruncPoly& a, const TruncPoly& b) {
  TruncPoly out = a;
  for (const auto& [exp, c] : b.terms) {
    auto [it, inserted] = out.terms.try_emplace(exp, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) out.terms.erase(it);
    }
  }
  return out;
}

TruncPoly trunc_scale(const Int& c, const TruncPoly& a) {
  TruncPoly out;
  if (c == 0) return out;
  for (const auto& [exp, v] : a.terms) out.terms.emplace(exp, Int(c * v));
  return out;
}

TruncPoly trunc_mul(const TruncPoly& a, const TruncPoly& b,
                    const std::vector<int>& caps) {
  TruncPoly out;
  for (const auto& [ea, ca] : a.terms) {
    for (const auto& [eb, cb] : b.terms) {
      std::vector<int> exp(ea.size());
      bool keep = true;
      for (std::size_t k = 0; k < exp.size(); ++k) {
        exp[k] = ea[k] + eb[k];
        if (exp[k] >= caps[k]) keep = false;
      }
      if (!keep) continue;
      Int prod = ca * cb;
      auto [it, inserted] = out.terms.try_emplace(std::move(exp), prod);
      if (!inserted) {
        it->second += prod;
        if (it->second == 0) out.terms.erase(it);
      }
    }
  }
  return out;
}

std::string to_string(const TruncPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [exp, c] : p.terms) {
    const bool neg = c < 0;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    std::string mono;
    for (std::size_t j = 0; j < exp.size(); ++j) {
      if (exp[j] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += 't' + std::to_string(j + 1);
      if (exp[j] != 1) mono += '^' + std::to_string(exp[j]);
    }
    Int mag = neg ? Int(-c) : c;
    if (mono.empty())
      os << mag.str();
    else if (mag == 1)
      os << mono;
    else
      os << mag.str() << '*' << mono;
  }
  return os.str();
}

namespace {

// Truncated inverse of v = c + N with c = +-1 and N nilpotent:
// v^{-1} = c * sum over k of (-c N)^k.
TruncPoly trunc_inverse(const TruncPoly& v, const std::vector<int>& caps) {
  Int c = v.constant_part();
  if (c != 1 && c != -1)
    throw specialization_error(
        "multiplicative target value is not invertible (constant term " +
        c.str() + ")");
  int vars = static_cast<int>(caps.size());
  TruncPoly nil = trunc_add(v, TruncPoly::constant(vars, -c));
  TruncPoly step = trunc_scale(-c, nil);
  TruncPoly acc = TruncPoly::constant(vars, c);
  TruncPoly power = TruncPoly::constant(vars, 1);
  long budget = std::accumulate(caps.begin(), caps.end(), 1L);
  for (long k = 0; k < budget; ++k) {
    power = trunc_mul(power, step, caps);
    if (power.is_zero()) break;
    acc = trunc_add(acc, trunc_scale(c, power));
  }
  return acc;
}

TruncPoly clean_value(TruncPoly v, const std::vector<int>& caps) {
  for (auto it = v.terms.begin(); it != v.terms.end();) {
    if (it->first.size() != caps.size())
      throw dimension_error("t-exponent vector has wrong length");
    bool keep = true;
    for (std::size_t k = 0; k < caps.size(); ++k) {
      if (it->first[k] < 0) throw input_error("negative t-exponent");
      if (it->first[k] >= caps[k]) keep = false;
    }
    it = keep ? std::next(it) : v.terms.erase(it);
  }
  return v;
}

}  // namespace

SpecializationTarget SpecializationTarget::integers(Mode mode,
                                                    std::vector<Int> values) {
  SpecializationTarget t;
  t.mode_ = mode;
  for (Int& v : values) {
    if (mode == Mode::multiplicative && v != 1 && v != -1)
      throw specialization_error(
          "multiplicative target value is not invertible (constant term " +
          v.str() + ")");
    t.values_.push_back(TruncPoly::constant(0, std::move(v)));
  }
  if (mode == Mode::multiplicative) t.inverses_ = t.values_;
  return t;
}

SpecializationTarget SpecializationTarget::truncated(
    Mode mode, std::vector<int> caps, std::vector<TruncPoly> values) {
  for (int cap : caps)
    if (cap < 1) throw input_error("exponent cap must be at least 1");
  SpecializationTarget t;
  t.mode_ = mode;
  t.caps_ = std::move(caps);
  for (TruncPoly& v : values)
    t.values_.push_back(clean_value(std::move(v), t.caps_));
  if (mode == Mode::multiplicative)
    for (const TruncPoly& v : t.values_)
      t.inverses_.push_back(trunc_inverse(v, t.caps_));
  return t;
}

SpecializationTarget SpecializationTarget::all_equal(Mode mode, int n,
                                                     const Int& value) {
  return integers(mode, std::vector<Int>(n, value));
}

const TruncPoly& SpecializationTarget::inverse(int i) const {
  if (mode_ != Mode::multiplicative)
    throw mode_error("additive targets do not carry inverses");
  return inverses_[i];
}

std::vector<TruncPoly> specialize(const NormalForm& nf,
                                  const SpecializationTarget& target) {
  if (nf.mode != target.mode())
    throw mode_error("normal form mode does not match the target");
  if (nf.n != target.nparams())
    throw dimension_error("target assigns a different number of parameters");
  const auto& caps = target.caps();
  int vars = target.vars();
  std::vector<TruncPoly> out;
  out.reserve(nf.coeffs.size());
  for (const CoeffElem& c : nf.coeffs) {
    TruncPoly acc;
    for (const auto& [exp, coef] : c.terms) {
      TruncPoly term = TruncPoly::constant(vars, coef);
      for (int i = 0; i < nf.n; ++i) {
        const TruncPoly& base =
            exp[i] < 0 ? target.inverse(i) : target.value(i);
        for (int k = 0; k < std::abs(exp[i]); ++k)
          term = trunc_mul(term, base, caps);
      }
      acc = trunc_add(acc, term);
    }
    out.push_back(std::move(acc));
  }
  return out;
}

SpecTable specialize(const MultTable& table, const SpecializationTarget& target) {
  SpecTable out;
  out.size = table.size;
  out.entries.reserve(table.entries.size());
  for (const NormalForm& nf : table.entries)
    out.entries.push_back(specialize(nf, target));
  return out;
}

std::string table_text(const MultTable& table, const ShellingData& data) {
  std::ostringstream os;
  os << to_string(table.mode) << " multiplication table, basis size "
     << table.size << "\n";
  for (int i = 0; i < table.size; ++i) {
    os << "b" << i + 1 << " = x({";
    const auto& rays = data.tau[i].rays;
    for (std::size_t k = 0; k < rays.size(); ++k)
      os << (k ? "," : "") << rays[k] + 1;
    os << "})\n";
  }
  for (int i = 0; i < table.size; ++i) {
    for (int j = i; j < table.size; ++j) {
      os << "b" << i + 1 << "*b" << j + 1 << " =";
      const NormalForm& nf = table.at(i, j);
      bool any = false;
      for (int l = 0; l < table.size; ++l) {
        if (nf.coeffs[l].is_zero()) continue;
        os << (any ? " + " : " ") << "(" << to_string(nf.coeffs[l]) << ")*b"
           << l + 1;
        any = true;
      }
      if (!any) os << " 0";
      os << "\n";
    }
  }
  return os.str();
}

}  // namespace fanring
