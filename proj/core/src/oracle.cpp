#include "fanring/oracle.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "detail/exactlin.hpp"
#include "fanring/errors.hpp"

namespace fanring {

namespace {

using SparseRow = std::map<int, Rat>;

void subtract(SparseRow& a, const Rat& c, const SparseRow& b) {
  for (const auto& [col, val] : b) {
    auto [it, inserted] = a.try_emplace(col, 0);
    (void)inserted;
    it->second -= c * val;
    if (it->second == 0) a.erase(it);
  }
}

// Incremental exact row echelon over Q; tidy() back-substitutes so each
// stored row touches only its own leading column and free columns.
struct Eliminator {
  std::map<int, SparseRow> pivots;

  void insert(SparseRow row) {
    while (!row.empty()) {
      auto lead = row.begin();
      auto hit = pivots.find(lead->first);
      if (hit == pivots.end()) {
        Rat c = lead->second;
        for (auto& [col, val] : row) val /= c;
        pivots.emplace(row.begin()->first, std::move(row));
        return;
      }
      Rat c = lead->second;
      subtract(row, c, hit->second);
    }
  }

  void tidy() {
    for (auto pit = pivots.rbegin(); pit != pivots.rend(); ++pit) {
      SparseRow& row = pit->second;
      auto it = row.upper_bound(pit->first);
      while (it != row.end()) {
        auto hit = pivots.find(it->first);
        if (hit == pivots.end()) {
          ++it;
          continue;
        }
        int col = it->first;
        Rat c = it->second;
        subtract(row, c, hit->second);
        it = row.upper_bound(col);
      }
    }
  }

  // Projects v onto the free columns, in place.  Requires tidy().
  void reduce(SparseRow& v) const {
    auto it = v.begin();
    while (it != v.end()) {
      auto hit = pivots.find(it->first);
      if (hit == pivots.end()) {
        ++it;
        continue;
      }
      int col = it->first;
      Rat c = it->second;
      subtract(v, c, hit->second);
      it = v.upper_bound(col);
    }
  }

  long rank() const { return static_cast<long>(pivots.size()); }
};

// All nonnegative integer vectors of the given length summing to total.
void compositions(int total, int length, std::vector<int>& prefix,
                  std::vector<std::vector<int>>& out) {
  if (length == 1) {
    prefix.push_back(total);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int v = 0; v <= total; ++v) {
    prefix.push_back(v);
    compositions(total - v, length - 1, prefix, out);
    prefix.pop_back();
  }
}

std::vector<std::vector<int>> r_exponents(int total, int n) {
  std::vector<std::vector<int>> out;
  if (n == 0) {
    if (total == 0) out.push_back({});
    return out;
  }
  std::vector<int> prefix;
  compositions(total, n, prefix, out);
  return out;
}

// Exponent vectors of the given total degree whose support is a face,
// in lexicographic order.
std::vector<std::vector<int>> face_exponents(const std::set<ConeRef>& faces,
                                             int d, int degree) {
  std::vector<std::vector<int>> out;
  for (const ConeRef& face : faces) {
    int s = face.dim();
    if (s == 0 || s > degree) continue;
    std::vector<std::vector<int>> parts;
    std::vector<int> prefix;
    compositions(degree - s, s, prefix, parts);
    for (const auto& extra : parts) {
      std::vector<int> exp(d, 0);
      for (int i = 0; i < s; ++i) exp[face.rays[i]] = 1 + extra[i];
      out.push_back(std::move(exp));
    }
  }
  if (degree == 0) out.push_back(std::vector<int>(d, 0));
  std::sort(out.begin(), out.end());
  return out;
}

ConeRef support_of(const std::vector<int>& exp) {
  std::vector<int> rays;
  for (int j = 0; j < static_cast<int>(exp.size()); ++j) {
    if (exp[j] > 0) rays.push_back(j);
  }
  return ConeRef(std::move(rays));
}

long binomial(long a, long b) {
  if (b < 0 || b > a) return 0;
  long out = 1;
  for (long i = 1; i <= b; ++i) out = out * (a - b + i) / i;
  return out;
}

// Coordinates of the residue over the basis columns.  The fast path
// applies when the basis columns are exactly the free columns; the
// general path solves for the basis images explicitly.
std::vector<Rat> express(const Eliminator& elim, SparseRow residue,
                         const std::vector<int>& basis_cols,
                         const std::string& where) {
  std::set<int> basis_set(basis_cols.begin(), basis_cols.end());
  bool identity = true;
  for (const auto& [lead, row] : elim.pivots) {
    (void)row;
    if (basis_set.count(lead)) {
      identity = false;
      break;
    }
  }
  std::map<int, int> basis_pos;
  for (int i = 0; i < static_cast<int>(basis_cols.size()); ++i) {
    basis_pos[basis_cols[i]] = i;
  }
  std::vector<Rat> out(basis_cols.size(), 0);
  if (identity) {
    for (const auto& [col, val] : residue) {
      auto it = basis_pos.find(col);
      if (it == basis_pos.end()) {
        throw freeness_violation_error(
            "residue does not land on the interval basis " + where);
      }
      out[it->second] = val;
    }
    return out;
  }

  // Some basis column got eliminated; solve residue = sum l_b * phi(b)
  // with phi(b) the projection of the b-th unit vector.
  std::vector<int> free_cols;
  std::set<int> seen;
  std::vector<SparseRow> phi;
  for (int b : basis_cols) {
    SparseRow e;
    e[b] = 1;
    elim.reduce(e);
    for (const auto& [col, val] : e) {
      (void)val;
      if (seen.insert(col).second) free_cols.push_back(col);
    }
    phi.push_back(std::move(e));
  }
  for (const auto& [col, val] : residue) {
    (void)val;
    if (seen.insert(col).second) free_cols.push_back(col);
  }
  std::sort(free_cols.begin(), free_cols.end());
  std::map<int, int> free_pos;
  for (int i = 0; i < static_cast<int>(free_cols.size()); ++i) {
    free_pos[free_cols[i]] = i;
  }
  detail::QMat a(free_cols.size(),
                 std::vector<Rat>(basis_cols.size(), 0));
  for (int b = 0; b < static_cast<int>(phi.size()); ++b) {
    for (const auto& [col, val] : phi[b]) a[free_pos[col]][b] = val;
  }
  std::vector<Rat> rhs(free_cols.size(), 0);
  for (const auto& [col, val] : residue) rhs[free_pos[col]] = val;
  if (free_cols.size() != basis_cols.size()) {
    // Over- or under-determined: fall back to appending rows/columns
    // is not meaningful, so treat as a basis failure.
    throw freeness_violation_error(
        "interval basis does not span the quotient " + where);
  }
  auto sol = detail::qsolve(a, rhs);
  if (!sol) {
    throw freeness_violation_error(
        "interval basis does not span the quotient " + where);
  }
  return *sol;
}

}  // namespace

struct AdditiveOracle::Slice {
  std::vector<ColKey> columns;
  std::map<ColKey, int> index;
  Eliminator elim;
  std::vector<int> basis_cols;
  // (interval, r-exponent) label per basis column.
  std::vector<std::pair<int, std::vector<int>>> basis_labels;
};

AdditiveOracle::~AdditiveOracle() = default;

AdditiveOracle::AdditiveOracle(const Fan& fan, const ShellingData& data)
    : fan_(fan), data_(data), pres_(build_additive(fan, data)),
      faces_(all_faces(fan)) {
  for (int i = 0; i < data_.size(); ++i) tau_index_[data_.tau[i]] = i;
}

long AdditiveOracle::predicted_dimension(int degree) const {
  long out = 0;
  for (int i = 0; i < data_.size(); ++i) {
    int t = degree - data_.tau[i].dim();
    if (t < 0) continue;
    out += binomial(t + fan_.dim - 1, fan_.dim - 1);
  }
  return out;
}

long AdditiveOracle::quotient_dimension(int degree) {
  Slice& s = ensure(degree);
  return static_cast<long>(s.columns.size()) - s.elim.rank();
}

AdditiveOracle::Slice& AdditiveOracle::ensure(int degree) {
  auto it = slices_.find(degree);
  if (it != slices_.end()) return it->second;
  Slice s;

  std::vector<ColKey> nonbasis;
  std::vector<std::pair<std::pair<int, std::vector<int>>, ColKey>> basis;
  for (int a = 0; a <= degree; ++a) {
    auto xparts = face_exponents(faces_, fan_.ray_count(), a);
    auto rparts = r_exponents(degree - a, fan_.dim);
    for (const auto& xe : xparts) {
      bool squarefree = true;
      for (int v : xe) {
        if (v > 1) squarefree = false;
      }
      int interval = -1;
      if (squarefree) {
        auto hit = tau_index_.find(support_of(xe));
        if (hit != tau_index_.end()) interval = hit->second;
      }
      for (const auto& re : rparts) {
        if (interval >= 0) {
          basis.push_back({{interval, re}, {xe, re}});
        } else {
          nonbasis.push_back({xe, re});
        }
      }
    }
  }
  std::sort(nonbasis.begin(), nonbasis.end());
  std::sort(basis.begin(), basis.end());
  for (const auto& key : nonbasis) {
    s.index[key] = static_cast<int>(s.columns.size());
    s.columns.push_back(key);
  }
  for (const auto& [label, key] : basis) {
    s.basis_cols.push_back(static_cast<int>(s.columns.size()));
    s.basis_labels.push_back(label);
    s.index[key] = static_cast<int>(s.columns.size());
    s.columns.push_back(key);
  }

  if (degree >= 1) {
    for (const Relation& rel : pres_.relations) {
      if (rel.kind == RelationKind::monomial) continue;
      for (int a = 0; a + 1 <= degree; ++a) {
        auto xparts = face_exponents(faces_, fan_.ray_count(), a);
        auto rparts = r_exponents(degree - 1 - a, fan_.dim);
        for (const auto& xa : xparts) {
          for (const auto& rb : rparts) {
            SparseRow row;
            for (const auto& [xe, ce] : rel.poly.terms) {
              std::vector<int> xn = xa;
              for (int j = 0; j < fan_.ray_count(); ++j) xn[j] += xe[j];
              if (!faces_.count(support_of(xn))) continue;
              for (const auto& [re, c] : ce.terms) {
                std::vector<int> rn = rb;
                for (int j = 0; j < fan_.dim; ++j) rn[j] += re[j];
                auto [rit, inserted] =
                    row.try_emplace(s.index.at({xn, rn}), 0);
                (void)inserted;
                rit->second += Rat(c);
                if (rit->second == 0) row.erase(rit);
              }
            }
            s.elim.insert(std::move(row));
          }
        }
      }
    }
  }
  s.elim.tidy();

  long got = static_cast<long>(s.columns.size()) - s.elim.rank();
  long want = static_cast<long>(s.basis_cols.size());
  if (got != want) {
    throw freeness_violation_error(
        "degree " + std::to_string(degree) + " quotient has dimension " +
        std::to_string(got) + ", expected " + std::to_string(want));
  }
  return slices_.emplace(degree, std::move(s)).first->second;
}

NormalForm AdditiveOracle::reduce(const XPolynomial& p) {
  if (p.mode != Mode::additive) {
    throw mode_error("the additive oracle needs an additive polynomial");
  }
  if (p.d != fan_.ray_count() || p.n != fan_.dim) {
    throw dimension_error("polynomial shape does not match the fan");
  }
  NormalForm out(Mode::additive, fan_.dim, data_.size());
  for (const auto& [degree, part] : graded_parts(p)) {
    Slice& s = ensure(degree);
    SparseRow v;
    for (const auto& [xe, ce] : part.terms) {
      if (!faces_.count(support_of(xe))) continue;
      for (const auto& [re, c] : ce.terms) {
        auto [it, inserted] = v.try_emplace(s.index.at({xe, re}), 0);
        (void)inserted;
        it->second += Rat(c);
        if (it->second == 0) v.erase(it);
      }
    }
    s.elim.reduce(v);
    auto coords = express(s.elim, std::move(v), s.basis_cols,
                          "in degree " + std::to_string(degree));
    for (int b = 0; b < static_cast<int>(coords.size()); ++b) {
      if (coords[b] == 0) continue;
      if (denominator(coords[b]) != 1) {
        throw freeness_violation_error(
            "normal form coordinate is not integral in degree " +
            std::to_string(degree));
      }
      const auto& [interval, rexp] = s.basis_labels[b];
      out.coeffs[interval].add_term(rexp, numerator(coords[b]));
    }
  }
  return out;
}

struct MultiplicativeOracle::Context {
  int window = 0;     // reporting degree: reductions stay within it
  int bigwindow = 0;  // working degree for relation multiples
  std::vector<std::vector<int>> columns;
  std::map<std::vector<int>, int> index;
  Eliminator elim;
  int low_start = 0;  // first column of degree <= window
  std::vector<int> basis_cols;
  long dimension = 0;
};

MultiplicativeOracle::~MultiplicativeOracle() = default;

MultiplicativeOracle::MultiplicativeOracle(const Fan& fan,
                                           const ShellingData& data,
                                           unsigned seed)
    : fan_(fan), data_(data), pres_(build_multiplicative(fan, data)),
      faces_(all_faces(fan)) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> magnitude(2, 9);
  std::uniform_int_distribution<int> sign(0, 1);
  for (int i = 0; i < fan_.dim; ++i) {
    int v = magnitude(rng);
    rvals_.push_back(Rat(sign(rng) ? v : -v));
  }
  for (int i = 0; i < data_.size(); ++i) {
    std::vector<int> exp(fan_.ray_count(), 0);
    for (int ray : data_.tau[i].rays) exp[ray] = 1;
    tau_exps_.push_back(std::move(exp));
  }
}

// Dimension of span(face monomials of degree <= window) modulo the
// relation multiples whose kept terms stay within bigwindow.  Columns
// above the window come first, so every echelon row whose lead falls in
// the low block lies entirely in the low block: consequences of
// high-degree multiples surface as low-degree rows.  The low block is
// what makes the number meaningful; without the extra headroom the
// inhomogeneous relations never close up.
long MultiplicativeOracle::dimension_at(int window, int bigwindow,
                                        Context* keep) {
  Context ctx;
  ctx.window = window;
  ctx.bigwindow = bigwindow;

  std::set<std::vector<int>> basis_set(tau_exps_.begin(), tau_exps_.end());
  for (int a = bigwindow; a > window; --a) {
    for (auto& xe : face_exponents(faces_, fan_.ray_count(), a)) {
      ctx.index[xe] = static_cast<int>(ctx.columns.size());
      ctx.columns.push_back(std::move(xe));
    }
  }
  ctx.low_start = static_cast<int>(ctx.columns.size());
  for (int a = window; a >= 0; --a) {
    for (auto& xe : face_exponents(faces_, fan_.ray_count(), a)) {
      if (basis_set.count(xe)) continue;
      ctx.index[xe] = static_cast<int>(ctx.columns.size());
      ctx.columns.push_back(std::move(xe));
    }
  }
  for (const auto& xe : tau_exps_) {
    ctx.basis_cols.push_back(static_cast<int>(ctx.columns.size()));
    ctx.index[xe] = static_cast<int>(ctx.columns.size());
    ctx.columns.push_back(xe);
  }

  // Specialized face-supported terms of each product relation.
  std::vector<std::vector<std::pair<std::vector<int>, Rat>>> rels;
  for (const Relation& rel : pres_.relations) {
    if (rel.kind == RelationKind::monomial) continue;
    std::vector<std::pair<std::vector<int>, Rat>> terms;
    for (const auto& [xe, ce] : rel.poly.terms) {
      if (!faces_.count(support_of(xe))) continue;
      Rat c = eval(ce, rvals_);
      if (c != 0) terms.emplace_back(xe, c);
    }
    if (!terms.empty()) rels.push_back(std::move(terms));
  }

  for (int a = 0; a <= bigwindow; ++a) {
    auto xparts = face_exponents(faces_, fan_.ray_count(), a);
    for (const auto& terms : rels) {
      for (const auto& xa : xparts) {
        SparseRow row;
        bool fits = true;
        for (const auto& [xe, c] : terms) {
          std::vector<int> xn = xa;
          int deg = 0;
          for (int j = 0; j < fan_.ray_count(); ++j) {
            xn[j] += xe[j];
            deg += xn[j];
          }
          if (!faces_.count(support_of(xn))) continue;
          if (deg > bigwindow) {
            fits = false;
            break;
          }
          auto [it, inserted] = row.try_emplace(ctx.index.at(xn), 0);
          (void)inserted;
          it->second += c;
          if (it->second == 0) row.erase(it);
        }
        if (fits && !row.empty()) ctx.elim.insert(std::move(row));
      }
    }
  }
  ctx.elim.tidy();
  long low_cols = static_cast<long>(ctx.columns.size()) - ctx.low_start;
  long low_leads = 0;
  for (const auto& [lead, row] : ctx.elim.pivots) {
    (void)row;
    if (lead >= ctx.low_start) ++low_leads;
  }
  ctx.dimension = low_cols - low_leads;
  long out = ctx.dimension;
  if (keep) *keep = std::move(ctx);
  return out;
}

void MultiplicativeOracle::ensure(int xdegree) {
  int window = std::max(fan_.dim, xdegree);
  if (ctx_ && ctx_->window >= window) return;
  long prev = dimension_at(window, window, nullptr);
  for (int big = window + 1; big <= window + 16; ++big) {
    auto next = std::make_unique<Context>();
    long dim = dimension_at(window, big, next.get());
    if (dim == prev && dim == data_.size()) {
      ctx_ = std::move(next);
      return;
    }
    prev = dim;
  }
  throw freeness_violation_error(
      "quotient dimension did not stabilize at " +
      std::to_string(data_.size()) + " (last value " + std::to_string(prev) +
      ")");
}

long MultiplicativeOracle::stable_dimension() {
  ensure(fan_.dim);
  return ctx_->dimension;
}

std::vector<Rat> MultiplicativeOracle::reduce(const XPolynomial& p) {
  if (p.mode != Mode::multiplicative) {
    throw mode_error(
        "the multiplicative oracle needs a multiplicative polynomial");
  }
  if (p.d != fan_.ray_count() || p.n != fan_.dim) {
    throw dimension_error("polynomial shape does not match the fan");
  }
  ensure(p.x_degree());
  SparseRow v;
  for (const auto& [xe, ce] : p.terms) {
    if (!faces_.count(support_of(xe))) continue;
    Rat c = eval(ce, rvals_);
    if (c == 0) continue;
    auto [it, inserted] = v.try_emplace(ctx_->index.at(xe), 0);
    (void)inserted;
    it->second += c;
    if (it->second == 0) v.erase(it);
  }
  ctx_->elim.reduce(v);
  return express(ctx_->elim, std::move(v), ctx_->basis_cols,
                 "at the specialization");
}

std::vector<Rat> MultiplicativeOracle::specialize(const NormalForm& nf) const {
  if (nf.mode != Mode::multiplicative) {
    throw mode_error("the multiplicative oracle needs multiplicative values");
  }
  if (nf.size() != data_.size() || nf.n != fan_.dim) {
    throw dimension_error("normal form shape does not match the fan");
  }
  std::vector<Rat> out;
  out.reserve(nf.coeffs.size());
  for (const CoeffElem& c : nf.coeffs) out.push_back(eval(c, rvals_));
  return out;
}

}  // namespace fanring
