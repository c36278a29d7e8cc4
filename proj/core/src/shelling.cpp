#include "fanring/shelling.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "fanring/errors.hpp"

namespace fanring {

namespace {

void require_usable(const Fan& fan) {
  auto rep = validate(fan);
  if (rep.ok()) return;
  if (!rep.complete)
    throw unsupported_fan_error("ordering requires complete fan");
  throw unsupported_fan_error("ordering requires smooth complete fan");
}

void require_permutation(int m, const std::vector<int>& order) {
  std::vector<bool> seen(m, false);
  bool ok = static_cast<int>(order.size()) == m;
  for (int p : order) {
    if (p < 0 || p >= m || seen[p]) {
      ok = false;
      break;
    }
    seen[p] = true;
  }
  if (!ok)
    throw input_error("order is not a permutation of the maximal cones");
}

struct OrderContext {
  const Fan* fan = nullptr;
  std::vector<std::vector<char>> adjacent;  // share a wall
};

OrderContext make_context(const Fan& fan) {
  OrderContext ctx;
  ctx.fan = &fan;
  const int m = fan.max_cone_count();
  ctx.adjacent.assign(m, std::vector<char>(m, 0));
  auto graph = wall_graph(fan);
  for (int a = 0; a < m; ++a)
    for (int b : graph[a]) ctx.adjacent[a][b] = 1;
  return ctx;
}

ShellingData build_data(const OrderContext& ctx, std::vector<int> order) {
  const Fan& fan = *ctx.fan;
  const int m = fan.max_cone_count();
  ShellingData data;
  data.order = std::move(order);
  data.sigma.reserve(m);
  for (int p : data.order) data.sigma.push_back(fan.max_cones[p]);

  data.tau.resize(m);
  data.tau_prime.resize(m);
  for (int i = 0; i < m; ++i) {
    ConeRef t = data.sigma[i];
    for (int j = i + 1; j < m; ++j)
      if (ctx.adjacent[data.order[i]][data.order[j]])
        t = cone_intersection(t, data.sigma[j]);
    data.tau_prime[i] = cone_difference(data.sigma[i], t);
    data.tau[i] = std::move(t);
  }

  data.star_ok = true;
  data.star_prime_ok = true;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < i && data.star_ok; ++j)
      if (data.tau[i].subset_of(data.sigma[j])) data.star_ok = false;
    for (int j = i + 1; j < m && data.star_prime_ok; ++j)
      if (data.tau_prime[i].subset_of(data.sigma[j]))
        data.star_prime_ok = false;
  }

  std::vector<LatticeVector> last;
  for (int idx : data.sigma.back().rays) last.push_back(fan.rays[idx]);
  data.sigma_m_dual = dual_basis(last);
  return data;
}

}  // namespace

ShellingData make_shelling_data(const Fan& fan, const std::vector<int>& order) {
  require_usable(fan);
  require_permutation(fan.max_cone_count(), order);
  return build_data(make_context(fan), order);
}

int locate_interval(const ShellingData& data, const ConeRef& face) {
  for (int i = 0; i < data.size(); ++i)
    if (data.tau[i].subset_of(face) && face.subset_of(data.sigma[i])) return i;
  throw input_error("no interval contains " + cone_to_string(face));
}

std::map<ConeRef, int> interval_map(const Fan& fan, const ShellingData& data) {
  std::map<ConeRef, int> out;
  for (const auto& face : all_faces(fan))
    out.emplace(face, locate_interval(data, face));
  return out;
}

namespace {

// Fills positions from the back; when position p is placed its tau is
// final because tau depends only on later cones.  A violation of (*)
// means tau_p fits into some cone still waiting for an earlier slot, a
// violation of (*') means tau'_p fits into an already placed cone, and
// both are checked exactly at placement time, so the search never
// revisits a committed prefix.
struct BackFill {
  const OrderContext& ctx;
  bool require_star_prime;
  long node_limit;
  long nodes = 0;
  bool truncated = false;
  std::vector<int> slot;       // slot[p] = cone at position p
  std::vector<char> placed;    // by cone index
  std::optional<std::vector<int>> found;

  BackFill(const OrderContext& c, bool rsp, long limit)
      : ctx(c), require_star_prime(rsp), node_limit(limit) {
    const int m = ctx.fan->max_cone_count();
    slot.assign(m, -1);
    placed.assign(m, 0);
  }

  void run() { descend(ctx.fan->max_cone_count() - 1); }

  void descend(int p) {
    if (found || truncated) return;
    const int m = ctx.fan->max_cone_count();
    if (p < 0) {
      found = slot;
      return;
    }
    for (int c = 0; c < m && !found && !truncated; ++c) {
      if (placed[c]) continue;
      if (++nodes > node_limit) {
        truncated = true;
        return;
      }
      ConeRef tau = ctx.fan->max_cones[c];
      for (int q = p + 1; q < m; ++q)
        if (ctx.adjacent[c][slot[q]])
          tau = cone_intersection(tau, ctx.fan->max_cones[slot[q]]);
      bool ok = true;
      for (int u = 0; u < m && ok; ++u)
        if (!placed[u] && u != c && tau.subset_of(ctx.fan->max_cones[u]))
          ok = false;
      if (ok && require_star_prime) {
        ConeRef tp = cone_difference(ctx.fan->max_cones[c], tau);
        for (int q = p + 1; q < m && ok; ++q)
          if (tp.subset_of(ctx.fan->max_cones[slot[q]])) ok = false;
      }
      if (!ok) continue;
      slot[p] = c;
      placed[c] = 1;
      descend(p - 1);
      placed[c] = 0;
      slot[p] = -1;
    }
  }
};

}  // namespace

SearchResult find_shelling(const Fan& fan, const SearchOptions& opts) {
  require_usable(fan);
  auto ctx = make_context(fan);
  const int m = fan.max_cone_count();
  SearchResult result;

  auto accept = [&](const ShellingData& data) {
    return data.star_ok && (data.star_prime_ok || !opts.require_star_prime);
  };

  // Sweep orders: sort by decreasing height of the cone's ray sum
  // against a random direction.  For fans of projective varieties a
  // generic direction works, so a handful of draws nearly always
  // settles it; ties and unlucky draws fall through to the exhaustive
  // phase.
  std::mt19937 rng(opts.seed);
  std::uniform_int_distribution<int> coord(-9, 9);
  for (int attempt = 0; attempt < opts.heuristic_attempts; ++attempt) {
    ++result.heuristic_attempts;
    std::vector<Int> w(fan.dim);
    bool zero = true;
    for (auto& v : w) {
      v = coord(rng);
      if (v != 0) zero = false;
    }
    if (zero) continue;
    std::vector<Int> height(m, 0);
    for (int c = 0; c < m; ++c)
      for (int idx : fan.max_cones[c].rays)
        for (int k = 0; k < fan.dim; ++k)
          height[c] += w[k] * fan.rays[idx].coords[k];
    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return height[a] > height[b]; });
    auto data = build_data(ctx, order);
    if (accept(data)) {
      result.status = SearchStatus::found;
      result.data = std::move(data);
      return result;
    }
    std::reverse(order.begin(), order.end());
    data = build_data(ctx, std::move(order));
    if (accept(data)) {
      result.status = SearchStatus::found;
      result.data = std::move(data);
      return result;
    }
  }

  BackFill search(ctx, opts.require_star_prime, opts.node_limit);
  search.run();
  result.nodes = search.nodes;
  if (search.found) {
    result.status = SearchStatus::found;
    result.data = build_data(ctx, *search.found);
  } else {
    result.status = search.truncated ? SearchStatus::inconclusive
                                     : SearchStatus::not_found;
  }
  return result;
}

OrderCensus enumerate_orders(const Fan& fan) {
  require_usable(fan);
  const int m = fan.max_cone_count();
  if (m > 8)
    throw input_error(
        "exhaustive enumeration supports at most 8 maximal cones");
  auto ctx = make_context(fan);
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  OrderCensus census;
  do {
    auto data = build_data(ctx, order);
    ++census.total;
    if (data.star_ok) {
      ++census.star_ok;
      if (data.star_prime_ok) ++census.both_ok;
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return census;
}

}  // namespace fanring
