#include "fanring/fan.hpp"

#include <algorithm>
#include <sstream>

#include "detail/exactlin.hpp"

namespace fanring {

ConeRef::ConeRef(std::vector<int> r) : rays(std::move(r)) {
  std::sort(rays.begin(), rays.end());
  if (std::adjacent_find(rays.begin(), rays.end()) != rays.end())
    throw input_error("cone: duplicate ray index");
}

bool ConeRef::contains(int ray) const {
  return std::binary_search(rays.begin(), rays.end(), ray);
}

bool ConeRef::subset_of(const ConeRef& other) const {
  return std::includes(other.rays.begin(), other.rays.end(), rays.begin(),
                       rays.end());
}

ConeRef cone_union(const ConeRef& a, const ConeRef& b) {
  ConeRef out;
  std::set_union(a.rays.begin(), a.rays.end(), b.rays.begin(), b.rays.end(),
                 std::back_inserter(out.rays));
  return out;
}

ConeRef cone_intersection(const ConeRef& a, const ConeRef& b) {
  ConeRef out;
  std::set_intersection(a.rays.begin(), a.rays.end(), b.rays.begin(),
                        b.rays.end(), std::back_inserter(out.rays));
  return out;
}

ConeRef cone_difference(const ConeRef& a, const ConeRef& b) {
  ConeRef out;
  std::set_difference(a.rays.begin(), a.rays.end(), b.rays.begin(),
                      b.rays.end(), std::back_inserter(out.rays));
  return out;
}

std::string cone_to_string(const ConeRef& c) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < c.rays.size(); ++i) {
    if (i) os << ", ";
    os << c.rays[i] + 1;
  }
  os << '}';
  return os.str();
}

void check_structure(const Fan& fan) {
  if (fan.dim < 1) throw input_error("fan: dimension must be at least 1");
  if (fan.rays.empty()) throw input_error("fan: no rays");
  if (fan.max_cones.empty()) throw input_error("fan: no maximal cones");
  for (std::size_t j = 0; j < fan.rays.size(); ++j)
    if (fan.rays[j].size() != static_cast<std::size_t>(fan.dim))
      throw input_error("fan: ray " + std::to_string(j + 1) +
                        " has wrong length");
  for (std::size_t c = 0; c < fan.max_cones.size(); ++c)
    for (int idx : fan.max_cones[c].rays)
      if (idx < 0 || idx >= fan.ray_count())
        throw input_error("fan: max cone " + std::to_string(c + 1) +
                          " references ray " + std::to_string(idx + 1) +
                          " out of range");
}

namespace {

// Decide whether cone(A) and cone(B) meet in cone(A cap B).  Looks for
// a witness x = sum a_i v_i = sum b_j v_j with a, b >= 0 and a_i >= 1
// for some i in A minus B; such a point lies in both cones but outside
// the shared face, so its existence refutes the fan condition.
bool pair_is_common_face(const Fan& fan, const ConeRef& A, const ConeRef& B) {
  const int n = fan.dim;
  const int ka = A.dim(), kb = B.dim();
  const int nvars = ka + kb;  // a then b

  std::vector<detail::QConstraint> base;
  for (int i = 0; i < nvars; ++i) {
    detail::QConstraint c;
    c.coeff.assign(nvars, Rat(0));
    c.coeff[i] = 1;
    c.rhs = 0;
    base.push_back(std::move(c));  // a, b >= 0
  }
  for (int row = 0; row < n; ++row) {
    detail::QConstraint eq;
    eq.coeff.assign(nvars, Rat(0));
    for (int i = 0; i < ka; ++i)
      eq.coeff[i] = Rat(fan.rays[A.rays[i]].coords[row]);
    for (int j = 0; j < kb; ++j)
      eq.coeff[ka + j] = -Rat(fan.rays[B.rays[j]].coords[row]);
    eq.rhs = 0;
    detail::QConstraint eq_neg = eq;
    for (Rat& v : eq_neg.coeff) v = -v;
    base.push_back(std::move(eq));      // sum a v - sum b w >= 0
    base.push_back(std::move(eq_neg));  // and <= 0
  }

  for (int i = 0; i < ka; ++i) {
    if (B.contains(A.rays[i])) continue;
    auto sys = base;
    detail::QConstraint push;
    push.coeff.assign(nvars, Rat(0));
    push.coeff[i] = 1;
    push.rhs = 1;  // a_i >= 1
    sys.push_back(std::move(push));
    if (detail::fm_feasible(std::move(sys))) return false;
  }
  return true;
}

}  // namespace

ValidationReport validate(const Fan& fan) {
  check_structure(fan);
  ValidationReport rep;
  const int n = fan.dim;

  rep.rays_ok = true;
  for (int j = 0; j < fan.ray_count(); ++j) {
    bool zero = std::all_of(fan.rays[j].coords.begin(),
                            fan.rays[j].coords.end(),
                            [](const Int& c) { return c == 0; });
    if (zero) {
      rep.rays_ok = false;
      rep.diagnostics.push_back("ray " + std::to_string(j + 1) + " is zero");
      continue;
    }
    if (!is_primitive(fan.rays[j])) {
      rep.rays_ok = false;
      rep.diagnostics.push_back("ray " + std::to_string(j + 1) +
                                " is not primitive");
    }
  }
  for (int j = 0; j < fan.ray_count(); ++j)
    for (int k = j + 1; k < fan.ray_count(); ++k)
      if (fan.rays[j] == fan.rays[k]) {
        rep.rays_ok = false;
        rep.diagnostics.push_back("rays " + std::to_string(j + 1) + " and " +
                                  std::to_string(k + 1) + " coincide");
      }
  std::vector<bool> used(fan.ray_count(), false);
  for (const auto& c : fan.max_cones)
    for (int idx : c.rays) used[idx] = true;
  for (int j = 0; j < fan.ray_count(); ++j)
    if (!used[j]) {
      rep.rays_ok = false;
      rep.diagnostics.push_back("ray " + std::to_string(j + 1) +
                                " lies in no maximal cone");
    }

  rep.simplicial = true;
  rep.smooth = true;
  for (int c = 0; c < fan.max_cone_count(); ++c) {
    std::vector<LatticeVector> gens;
    for (int idx : fan.max_cones[c].rays) gens.push_back(fan.rays[idx]);
    auto divs = elementary_divisors(gens);
    bool indep = divs.size() == gens.size() &&
                 std::none_of(divs.begin(), divs.end(),
                              [](const Int& d) { return d == 0; });
    if (!indep) {
      rep.simplicial = false;
      rep.smooth = false;
      rep.diagnostics.push_back("max cone " + cone_to_string(fan.max_cones[c]) +
                                " has dependent rays");
      continue;
    }
    if (!std::all_of(divs.begin(), divs.end(),
                     [](const Int& d) { return d == 1; })) {
      rep.smooth = false;
      rep.diagnostics.push_back("max cone " + cone_to_string(fan.max_cones[c]) +
                                " is not unimodular (index " +
                                divs.back().str() + ")");
    }
  }

  rep.pure = std::all_of(
      fan.max_cones.begin(), fan.max_cones.end(),
      [n](const ConeRef& c) { return c.dim() == n; });
  if (!rep.pure)
    rep.diagnostics.push_back("fan is not pure of dimension " +
                              std::to_string(n));

  // Completeness via wall counts: every (n-1)-face of a maximal cone
  // must lie on exactly two maximal cones.  For n = 1 the only wall is
  // the zero cone, so this forces exactly two maximal cones.
  rep.complete = rep.pure;
  if (rep.pure) {
    std::map<ConeRef, int> wall_count;
    for (const auto& cone : fan.max_cones) {
      for (int drop = 0; drop < cone.dim(); ++drop) {
        ConeRef wall = cone;
        wall.rays.erase(wall.rays.begin() + drop);
        ++wall_count[wall];
      }
      if (cone.dim() == 0) ++wall_count[ConeRef{}];
    }
    if (n == 1) {
      // Each max cone contributes its single 0-dimensional wall.
      wall_count.clear();
      wall_count[ConeRef{}] = fan.max_cone_count();
    }
    for (const auto& [wall, count] : wall_count)
      if (count != 2) {
        rep.complete = false;
        rep.diagnostics.push_back("wall " + cone_to_string(wall) + " on " +
                                  std::to_string(count) + " cone" +
                                  (count == 1 ? "" : "s"));
      }
  }

  rep.fan_condition = rep.simplicial;
  if (rep.simplicial) {
    for (int a = 0; a < fan.max_cone_count() && rep.fan_condition; ++a)
      for (int b = a + 1; b < fan.max_cone_count(); ++b) {
        if (fan.max_cones[a] == fan.max_cones[b]) {
          rep.fan_condition = false;
          rep.diagnostics.push_back("max cones " + std::to_string(a + 1) +
                                    " and " + std::to_string(b + 1) +
                                    " coincide");
          break;
        }
        if (!pair_is_common_face(fan, fan.max_cones[a], fan.max_cones[b])) {
          rep.fan_condition = false;
          rep.diagnostics.push_back(
              "max cones " + cone_to_string(fan.max_cones[a]) + " and " +
              cone_to_string(fan.max_cones[b]) +
              " do not meet in a common face");
          break;
        }
      }
  } else {
    rep.diagnostics.push_back(
        "fan condition not checked: fan is not simplicial");
  }

  return rep;
}

std::set<ConeRef> all_faces(const Fan& fan) {
  std::set<ConeRef> faces;
  for (const auto& cone : fan.max_cones) {
    const int k = cone.dim();
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
      ConeRef f;
      for (int i = 0; i < k; ++i)
        if (mask & (1u << i)) f.rays.push_back(cone.rays[i]);
      faces.insert(std::move(f));
    }
  }
  return faces;
}

namespace {

// Visit all size-k subsets of {0..d-1} in lexicographic order.
template <typename F>
void for_each_subset(int d, int k, F&& visit) {
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  if (k > d) return;
  for (;;) {
    visit(idx);
    int pos = k - 1;
    while (pos >= 0 && idx[pos] == d - k + pos) --pos;
    if (pos < 0) return;
    ++idx[pos];
    for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
  }
}

}  // namespace

std::vector<ConeRef> minimal_nonfaces(const Fan& fan) {
  const int d = fan.ray_count();
  auto faces = all_faces(fan);
  std::vector<ConeRef> mins;
  // A minimal non-face has all proper subsets among the faces, so
  // scanning sizes upward and pruning supersets of found ones is exact.
  for (int size = 2; size <= d; ++size) {
    for_each_subset(d, size, [&](const std::vector<int>& idx) {
      ConeRef s;
      s.rays = idx;
      if (faces.count(s)) return;
      for (const auto& m : mins)
        if (m.subset_of(s)) return;
      mins.push_back(s);
    });
  }
  std::sort(mins.begin(), mins.end());
  return mins;
}

std::vector<std::vector<int>> wall_graph(const Fan& fan) {
  const int m = fan.max_cone_count();
  const int n = fan.dim;
  std::vector<std::vector<int>> adj(m);
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      if (cone_intersection(fan.max_cones[a], fan.max_cones[b]).dim() ==
          n - 1) {
        adj[a].push_back(b);
        adj[b].push_back(a);
      }
  return adj;
}

}  // namespace fanring
