#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <vector>

#include "fanring/catalog.hpp"
#include "fanring/errors.hpp"
#include "fanring/fan.hpp"
#include "fanring/shelling.hpp"

using namespace fanring;

namespace {

Fan small_fan(int dim, std::vector<std::vector<long>> ray_rows,
              std::vector<std::vector<int>> cones_1based) {
  Fan fan;
  fan.dim = dim;
  for (auto& row : ray_rows) {
    std::vector<Int> coords(row.begin(), row.end());
    fan.rays.emplace_back(std::move(coords));
  }
  for (auto& cone : cones_1based) {
    for (int& idx : cone) --idx;
    fan.max_cones.emplace_back(std::move(cone));
  }
  return fan;
}

ConeRef cone1(std::vector<int> rays_1based) {
  for (int& r : rays_1based) --r;
  return ConeRef(std::move(rays_1based));
}

// Checks both conditions straight from their definitions, sharing no
// code with ShellingData: adjacency by counting common rays, tau by
// intersecting, the conditions by scanning all pairs of positions.
struct PlainFlags {
  bool star = false;
  bool star_prime = false;
};

PlainFlags plain_check(const Fan& fan, const std::vector<int>& order) {
  const int m = fan.max_cone_count();
  std::vector<ConeRef> sigma;
  for (int p : order) sigma.push_back(fan.max_cones[p]);
  std::vector<ConeRef> tau(m), tp(m);
  for (int i = 0; i < m; ++i) {
    tau[i] = sigma[i];
    for (int j = i + 1; j < m; ++j)
      if (cone_intersection(sigma[i], sigma[j]).dim() == fan.dim - 1)
        tau[i] = cone_intersection(tau[i], sigma[j]);
    tp[i] = cone_difference(sigma[i], tau[i]);
  }
  PlainFlags flags{true, true};
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (tau[i].subset_of(sigma[j]) && j < i) flags.star = false;
      if (tp[i].subset_of(sigma[j]) && j > i) flags.star_prime = false;
    }
  return flags;
}

std::vector<std::vector<int>> all_orders(int m) {
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(order);
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

}  // namespace

TEST_SUITE_BEGIN("shelling");

TEST_CASE("interval data for the recorded p2 order") {
  const auto& e = catalog::entry("p2");
  auto data = make_shelling_data(e.fan, *e.order);
  CHECK(data.sigma ==
        std::vector<ConeRef>{cone1({1, 2}), cone1({2, 3}), cone1({1, 3})});
  CHECK(data.tau == std::vector<ConeRef>{ConeRef{}, cone1({3}), cone1({1, 3})});
  CHECK(data.tau_prime ==
        std::vector<ConeRef>{cone1({1, 2}), cone1({2}), ConeRef{}});
  CHECK(data.star_ok);
  CHECK(data.star_prime_ok);
  CHECK(data.sigma_m_dual ==
        std::vector<DualVector>{DualVector({1, -1}), DualVector({0, -1})});
}

TEST_CASE("interval data for the other recorded orders") {
  auto data_of = [](const std::string& name) {
    const auto& e = catalog::entry(name);
    return make_shelling_data(e.fan, *e.order);
  };

  auto p1 = data_of("p1");
  CHECK(p1.tau == std::vector<ConeRef>{ConeRef{}, cone1({1})});
  CHECK(p1.sigma_m_dual == std::vector<DualVector>{DualVector({1})});

  auto p3 = data_of("p3");
  CHECK(p3.tau == std::vector<ConeRef>{ConeRef{}, cone1({4}), cone1({3, 4}),
                                       cone1({2, 3, 4})});
  CHECK(p3.tau_prime ==
        std::vector<ConeRef>{cone1({1, 2, 3}), cone1({1, 2}), cone1({1}),
                             ConeRef{}});
  CHECK(p3.sigma_m_dual ==
        std::vector<DualVector>{DualVector({-1, 1, 0}), DualVector({-1, 0, 1}),
                                DualVector({-1, 0, 0})});

  auto pp = data_of("p1xp1");
  CHECK(pp.tau == std::vector<ConeRef>{ConeRef{}, cone1({2}), cone1({4}),
                                       cone1({2, 4})});
  CHECK(pp.sigma_m_dual ==
        std::vector<DualVector>{DualVector({-1, 0}), DualVector({0, -1})});

  auto hz = data_of("hirzebruch_2");
  CHECK(hz.tau == std::vector<ConeRef>{ConeRef{}, cone1({3}), cone1({4}),
                                       cone1({1, 4})});
  CHECK(hz.sigma_m_dual ==
        std::vector<DualVector>{DualVector({1, 0}), DualVector({0, -1})});

  auto bl = data_of("bl_p2");
  CHECK(bl.tau == std::vector<ConeRef>{ConeRef{}, cone1({2}), cone1({3}),
                                       cone1({1, 3})});
  CHECK(bl.tau_prime ==
        std::vector<ConeRef>{cone1({1, 4}), cone1({4}), cone1({2}),
                             ConeRef{}});

  auto oda = data_of("oda_84");
  CHECK(oda.tau ==
        std::vector<ConeRef>{ConeRef{}, cone1({1}), cone1({3}), cone1({6}),
                             cone1({3, 6}), cone1({2}), cone1({5, 6}),
                             cone1({2, 5}), cone1({1, 2}), cone1({1, 2, 3})});
  // The last cone is spanned by the standard basis, so its dual is too.
  CHECK(oda.sigma_m_dual ==
        std::vector<DualVector>{DualVector({1, 0, 0}), DualVector({0, 1, 0}),
                                DualVector({0, 0, 1})});
}

TEST_CASE("recorded orders pass both conditions") {
  for (const auto& e : catalog::entries()) {
    if (!e.order) continue;
    CAPTURE(e.name);
    auto data = make_shelling_data(e.fan, *e.order);
    CHECK(data.star_ok);
    CHECK(data.star_prime_ok);
    CHECK(data.tau.front() == ConeRef{});
    CHECK(data.tau.back() == data.sigma.back());
    auto plain = plain_check(e.fan, *e.order);
    CHECK(plain.star);
    CHECK(plain.star_prime);
    for (int i = 0; i < data.size(); ++i)
      CHECK(data.tau[i].dim() + data.tau_prime[i].dim() == e.fan.dim);
  }
}

TEST_CASE("dual basis of the last cone pairs to the identity") {
  for (const auto& e : catalog::entries()) {
    if (!e.order) continue;
    CAPTURE(e.name);
    auto data = make_shelling_data(e.fan, *e.order);
    const auto& last = data.sigma.back();
    for (int i = 0; i < e.fan.dim; ++i)
      for (int j = 0; j < e.fan.dim; ++j)
        CHECK(pairing(data.sigma_m_dual[i], e.fan.rays[last.rays[j]]) ==
              (i == j ? 1 : 0));
  }
}

TEST_CASE("bad orders and unusable fans are rejected") {
  const auto& p2 = catalog::entry("p2").fan;
  CHECK_THROWS_AS(make_shelling_data(p2, {0, 1}), input_error);
  CHECK_THROWS_AS(make_shelling_data(p2, {0, 1, 1}), input_error);
  CHECK_THROWS_AS(make_shelling_data(p2, {0, 1, 3}), input_error);

  Fan open = p2;
  open.max_cones.pop_back();
  CHECK_THROWS_WITH_AS(make_shelling_data(open, {0, 1}),
                       "ordering requires complete fan", unsupported_fan_error);
  CHECK_THROWS_WITH_AS(find_shelling(open), "ordering requires complete fan",
                       unsupported_fan_error);

  auto singular = small_fan(2, {{1, 0}, {1, 2}, {-1, -1}, {0, -1}},
                            {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
  CHECK_THROWS_WITH_AS(find_shelling(singular),
                       "ordering requires smooth complete fan",
                       unsupported_fan_error);
}

TEST_CASE("reversing an order swaps the two conditions") {
  for (const auto& name : {"p1", "p2", "p3", "p1xp1"}) {
    CAPTURE(name);
    const auto& fan = catalog::entry(name).fan;
    for (const auto& order : all_orders(fan.max_cone_count())) {
      auto fwd = make_shelling_data(fan, order);
      auto rev_order = order;
      std::reverse(rev_order.begin(), rev_order.end());
      auto rev = make_shelling_data(fan, rev_order);
      CHECK(fwd.star_ok == rev.star_prime_ok);
      CHECK(fwd.star_prime_ok == rev.star_ok);
    }
  }
}

TEST_CASE("order census over all permutations") {
  auto census = [](const std::string& name) {
    return enumerate_orders(catalog::entry(name).fan);
  };
  auto p1 = census("p1");
  CHECK(p1.total == 2);
  CHECK(p1.star_ok == 2);
  CHECK(p1.both_ok == 2);

  auto p2 = census("p2");
  CHECK(p2.total == 6);
  CHECK(p2.star_ok == 6);
  CHECK(p2.both_ok == 6);

  auto p3 = census("p3");
  CHECK(p3.total == 24);
  CHECK(p3.star_ok == 24);
  CHECK(p3.both_ok == 24);

  auto pp = census("p1xp1");
  CHECK(pp.total == 24);
  CHECK(pp.star_ok == 16);
  CHECK(pp.both_ok == 16);

  for (const auto& name : {"hirzebruch_1", "bl_p2"}) {
    CAPTURE(name);
    auto c = census(name);
    CHECK(c.total == 24);
    CHECK(c.both_ok >= 1);
    CHECK(c.both_ok <= c.star_ok);
    CHECK(c.star_ok < c.total);  // opposite cones break (*), as on p1xp1
  }

  CHECK_THROWS_AS(enumerate_orders(catalog::entry("oda_84").fan), input_error);
}

TEST_CASE("census agrees with the definition-level checker") {
  for (const auto& name : {"p2", "p1xp1", "hirzebruch_1"}) {
    CAPTURE(name);
    const auto& fan = catalog::entry(name).fan;
    long star = 0, both = 0;
    for (const auto& order : all_orders(fan.max_cone_count())) {
      auto plain = plain_check(fan, order);
      auto data = make_shelling_data(fan, order);
      CHECK(data.star_ok == plain.star);
      CHECK((data.star_ok && data.star_prime_ok) ==
            (plain.star && plain.star_prime));
      if (plain.star) ++star;
      if (plain.star && plain.star_prime) ++both;
    }
    auto c = enumerate_orders(fan);
    CHECK(c.star_ok == star);
    CHECK(c.both_ok == both);
  }
}

TEST_CASE("find_shelling succeeds on every catalog fan") {
  for (const auto& e : catalog::entries()) {
    CAPTURE(e.name);
    auto result = find_shelling(e.fan);
    REQUIRE(result.status == SearchStatus::found);
    REQUIRE(result.data.has_value());
    CHECK(result.data->star_ok);
    CHECK(result.data->star_prime_ok);
    auto plain = plain_check(e.fan, result.data->order);
    CHECK(plain.star);
    CHECK(plain.star_prime);
  }
}

TEST_CASE("the exhaustive phase works without the random sweep") {
  SearchOptions opts;
  opts.heuristic_attempts = 0;
  for (const auto& name : {"p2", "p1xp1", "oda_84"}) {
    CAPTURE(name);
    auto result = find_shelling(catalog::entry(name).fan, opts);
    REQUIRE(result.status == SearchStatus::found);
    CHECK(result.nodes > 0);
    CHECK(result.data->star_ok);
    CHECK(result.data->star_prime_ok);
  }

  opts.node_limit = 1;
  auto tight = find_shelling(catalog::entry("p1xp1").fan, opts);
  CHECK(tight.status == SearchStatus::inconclusive);

  opts.node_limit = 1000000;
  opts.require_star_prime = false;
  auto loose = find_shelling(catalog::entry("p2").fan, opts);
  REQUIRE(loose.status == SearchStatus::found);
  CHECK(loose.data->star_ok);
}

TEST_CASE("intervals partition the faces") {
  for (const auto& e : catalog::entries()) {
    if (!e.order) continue;
    CAPTURE(e.name);
    auto data = make_shelling_data(e.fan, *e.order);
    auto faces = all_faces(e.fan);

    std::size_t covered = 0;
    for (int i = 0; i < data.size(); ++i)
      covered += std::size_t{1} << (e.fan.dim - data.tau[i].dim());
    CHECK(covered == faces.size());

    auto map = interval_map(e.fan, data);
    CHECK(map.size() == faces.size());
    for (const auto& face : faces) {
      int hits = 0;
      int smallest_sigma = -1;
      for (int i = 0; i < data.size(); ++i) {
        if (data.tau[i].subset_of(face) && face.subset_of(data.sigma[i]))
          ++hits;
        if (smallest_sigma < 0 && face.subset_of(data.sigma[i]))
          smallest_sigma = i;
      }
      CHECK(hits == 1);
      CHECK(map.at(face) == smallest_sigma);
    }
    for (int i = 0; i < data.size(); ++i) {
      CHECK(map.at(data.tau[i]) == i);
      CHECK(map.at(data.sigma[i]) == i);
    }
  }
}

TEST_CASE("locate_interval rejects non-faces") {
  const auto& e = catalog::entry("p1xp1");
  auto data = make_shelling_data(e.fan, *e.order);
  CHECK_THROWS_AS(locate_interval(data, cone1({1, 2})), input_error);
}

TEST_SUITE_END();
