#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "fanring/catalog.hpp"
#include "fanring/errors.hpp"
#include "fanring/oracle.hpp"
#include "fanring/presentation.hpp"
#include "fanring/reducer.hpp"

using namespace fanring;

namespace {

constexpr Mode kAdd = Mode::additive;
constexpr Mode kMul = Mode::multiplicative;

struct Ring {
  Fan fan;
  ShellingData data;
};

Ring ring(const std::string& name) {
  const auto& e = catalog::entry(name);
  return {e.fan, make_shelling_data(e.fan, *e.order)};
}

// Random polynomial with x-degree at most 4 and r-degree at most 2 per
// coefficient (negative exponents allowed in multiplicative mode).
XPolynomial random_bounded(std::mt19937& rng, Mode m, int d, int n) {
  std::uniform_int_distribution<int> nterms(1, 4);
  std::uniform_int_distribution<int> xdeg(0, 4);
  std::uniform_int_distribution<int> rdeg(0, 2);
  std::uniform_int_distribution<int> coef(-5, 5);
  std::uniform_int_distribution<int> var(0, d - 1);
  std::uniform_int_distribution<int> rvar(0, n - 1);
  std::uniform_int_distribution<int> flip(0, 1);
  XPolynomial p(m, d, n);
  int t = nterms(rng);
  for (int i = 0; i < t; ++i) {
    std::vector<int> e(d, 0);
    int deg = xdeg(rng);
    for (int j = 0; j < deg; ++j) ++e[var(rng)];
    std::vector<int> re(n, 0);
    int rd = rdeg(rng);
    for (int j = 0; j < rd; ++j) {
      int idx = rvar(rng);
      re[idx] += (m == kMul && flip(rng)) ? -1 : 1;
    }
    Int c = coef(rng);
    if (c == 0) c = 1;
    CoeffElem ce(m, n);
    ce.add_term(std::move(re), c);
    p.add_term(std::move(e), std::move(ce));
  }
  return p;
}

const std::vector<std::string> kAll = {
    "p1",           "p2",           "p3",           "p1xp1",
    "hirzebruch_0", "hirzebruch_1", "hirzebruch_2", "hirzebruch_3",
    "bl_p2",        "oda_84"};

}  // namespace

TEST_SUITE_BEGIN("oracle");

TEST_CASE("additive slice dimensions match the basis prediction") {
  for (const auto& name : kAll) {
    CAPTURE(name);
    auto r = ring(name);
    AdditiveOracle oracle(r.fan, r.data);
    for (int k = 0; k <= r.fan.dim + 2; ++k) {
      CHECK(oracle.quotient_dimension(k) == oracle.predicted_dimension(k));
    }
  }
}

TEST_CASE("pinned slice dimensions") {
  auto p2 = ring("p2");
  AdditiveOracle o2(p2.fan, p2.data);
  CHECK(o2.quotient_dimension(0) == 1);
  CHECK(o2.quotient_dimension(1) == 3);
  CHECK(o2.quotient_dimension(2) == 6);
  CHECK(o2.predicted_dimension(3) == 9);

  auto pp = ring("p1xp1");
  AdditiveOracle opp(pp.fan, pp.data);
  CHECK(opp.quotient_dimension(2) == 8);
}

TEST_CASE("multiplicative quotient stabilizes at the cone count") {
  for (const auto& name : kAll) {
    CAPTURE(name);
    auto r = ring(name);
    for (unsigned seed : {11u, 12u}) {
      MultiplicativeOracle oracle(r.fan, r.data, seed);
      CHECK(oracle.stable_dimension() == r.data.size());
      for (const Rat& v : oracle.r_values()) CHECK(v != 0);
    }
  }
}

TEST_CASE("random specializations are seed-deterministic") {
  auto r = ring("p2");
  MultiplicativeOracle a(r.fan, r.data, 5);
  MultiplicativeOracle b(r.fan, r.data, 5);
  CHECK(a.r_values() == b.r_values());
}

TEST_CASE("oracle and reducer agree on random additive polynomials") {
  std::mt19937 rng(406);
  for (const auto& name : kAll) {
    CAPTURE(name);
    auto r = ring(name);
    AdditiveOracle oracle(r.fan, r.data);
    Reducer red(r.fan, r.data, kAdd);
    for (int t = 0; t < 100; ++t) {
      auto p = random_bounded(rng, kAdd, r.fan.ray_count(), r.fan.dim);
      CHECK(oracle.reduce(p) == red.reduce(p));
    }
  }
}

TEST_CASE("oracle and reducer agree on random multiplicative polynomials") {
  std::mt19937 rng(407);
  for (const auto& name : kAll) {
    CAPTURE(name);
    auto r = ring(name);
    MultiplicativeOracle oracle(r.fan, r.data, 21);
    Reducer red(r.fan, r.data, kMul);
    for (int t = 0; t < 100; ++t) {
      auto p = random_bounded(rng, kMul, r.fan.ray_count(), r.fan.dim);
      CHECK(oracle.reduce(p) == oracle.specialize(red.reduce(p)));
    }
  }
}

TEST_CASE("oracles send relations to zero") {
  std::mt19937 rng(408);
  std::uniform_int_distribution<int> entry(-2, 2);
  for (const auto& name : {"p2", "p1xp1", "bl_p2"}) {
    CAPTURE(name);
    auto r = ring(name);
    AdditiveOracle add(r.fan, r.data);
    for (const auto& rel : build_additive(r.fan, r.data).relations) {
      CHECK(add.reduce(rel.poly).is_zero());
    }
    MultiplicativeOracle mul(r.fan, r.data, 31);
    for (const auto& rel : build_multiplicative(r.fan, r.data).relations) {
      auto coords = mul.reduce(rel.poly);
      for (const Rat& c : coords) CHECK(c == 0);
    }
    for (int t = 0; t < 4; ++t) {
      std::vector<Int> coords(r.fan.dim);
      for (auto& c : coords) c = entry(rng);
      auto z = z_of_u(r.fan, r.data, DualVector(coords));
      for (const Rat& c : mul.reduce(z)) CHECK(c == 0);
    }
  }
}

TEST_CASE("shape and mode mismatches are rejected") {
  auto r = ring("p2");
  AdditiveOracle add(r.fan, r.data);
  CHECK_THROWS_AS(add.reduce(XPolynomial::one(kMul, 3, 2)), mode_error);
  CHECK_THROWS_AS(add.reduce(XPolynomial::one(kAdd, 4, 2)), dimension_error);

  MultiplicativeOracle mul(r.fan, r.data, 3);
  CHECK_THROWS_AS(mul.reduce(XPolynomial::one(kAdd, 3, 2)), mode_error);
  CHECK_THROWS_AS(mul.reduce(XPolynomial::one(kMul, 2, 2)), dimension_error);
  CHECK_THROWS_AS(mul.specialize(NormalForm(kMul, 2, 5)), dimension_error);
  CHECK_THROWS_AS(mul.specialize(NormalForm(kAdd, 2, 3)), mode_error);
}

TEST_SUITE_END();
