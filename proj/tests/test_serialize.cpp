#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fanring/catalog.hpp"
#include "fanring/errors.hpp"
#include "fanring/expr.hpp"
#include "fanring/presentation.hpp"
#include "fanring/reducer.hpp"
#include "fanring/serialize.hpp"

using namespace fanring;

namespace {

constexpr Mode kAdd = Mode::additive;
constexpr Mode kMul = Mode::multiplicative;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

XPolynomial random_poly(std::mt19937& rng, Mode m, int d, int n) {
  std::uniform_int_distribution<int> nterms(1, 5);
  std::uniform_int_distribution<int> xexp(0, 3);
  std::uniform_int_distribution<int> rexp(m == kMul ? -2 : 0, 2);
  std::uniform_int_distribution<int> coef(-9, 9);
  XPolynomial p(m, d, n);
  int t = nterms(rng);
  for (int i = 0; i < t; ++i) {
    std::vector<int> e(d);
    for (int& v : e) v = xexp(rng);
    std::vector<int> re(n);
    for (int& v : re) v = rexp(rng);
    CoeffElem c(m, n);
    c.add_term(std::move(re), coef(rng));
    p.add_term(std::move(e), std::move(c));
  }
  return p;
}

}  // namespace

TEST_SUITE_BEGIN("serialize");

TEST_CASE("fan files round-trip through text") {
  for (const auto& e : catalog::entries()) {
    CAPTURE(e.name);
    FanFile file{e.fan, e.order, e.name};
    CHECK(parse_fan_file(write_fan_file(file)) == file);
  }
}

TEST_CASE("shipped fan files match the catalog") {
  for (const auto& e : catalog::entries()) {
    CAPTURE(e.name);
    FanFile file = parse_fan_file(slurp(std::string(FANRING_DATA_DIR) +
                                        "/fans/" + e.name + ".json"));
    CHECK(file.fan == e.fan);
    CHECK(file.order == e.order);
    CHECK(file.name == e.name);
  }
}

TEST_CASE("fan output keeps keys sorted and integers exact") {
  const auto& e = catalog::entry("p2");
  std::string text = write_fan_file({e.fan, e.order, e.name});
  auto at = [&](const char* key) { return text.find(key); };
  CHECK(at("\"dim\"") < at("\"max_cones\""));
  CHECK(at("\"max_cones\"") < at("\"name\""));
  CHECK(at("\"name\"") < at("\"order\""));
  CHECK(at("\"order\"") < at("\"rays\""));
  CHECK(text.find('.') == std::string::npos);
}

TEST_CASE("syntax errors carry a byte offset") {
  try {
    parse_fan_file("{\"dim\": 2, }");
    FAIL("expected parse_error");
  } catch (const parse_error& e) {
    CHECK(e.offset > 0);
  }
}

TEST_CASE("structural problems are reported by kind") {
  CHECK_THROWS_AS(parse_fan_file("{\"dim\": 1, \"rays\": [[1]]}"), parse_error);
  CHECK_THROWS_AS(
      parse_fan_file(
          "{\"dim\": 1, \"rays\": [[1], [-1]], \"max_cones\": [[1], [7]]}"),
      input_error);
  CHECK_THROWS_AS(
      parse_fan_file("{\"dim\": 1, \"rays\": [[1], [-1]], "
                     "\"max_cones\": [[1], [2]], \"order\": [1, 1]}"),
      input_error);
  CHECK_THROWS_AS(
      parse_fan_file("{\"dim\": 1, \"rays\": [[1], [-1]], "
                     "\"max_cones\": [[1], [2]], \"name\": 7}"),
      parse_error);
}

TEST_CASE("polynomials round-trip through text") {
  std::mt19937 rng(410);
  for (Mode m : {kAdd, kMul}) {
    for (int trial = 0; trial < 25; ++trial) {
      XPolynomial p = random_poly(rng, m, 4, 2);
      CHECK(parse_polynomial(write_polynomial(p)) == p);
    }
  }
}

TEST_CASE("coefficients travel as decimal strings") {
  XPolynomial p(kAdd, 1, 1);
  CoeffElem c(kAdd, 1);
  c.add_term({0}, Int("123456789012345678901234567890"));
  p.add_term({1}, c);
  std::string text = write_polynomial(p);
  CHECK(text.find("\"123456789012345678901234567890\"") != std::string::npos);
  CHECK(parse_polynomial(text) == p);
}

TEST_CASE("presentations round-trip through text") {
  for (const auto& name : {"p2", "p1xp1", "oda_84"}) {
    CAPTURE(name);
    const auto& e = catalog::entry(name);
    auto data = make_shelling_data(e.fan, *e.order);
    for (const Presentation& pres :
         {build_additive(e.fan, data), build_multiplicative(e.fan, data)}) {
      CHECK(parse_presentation(write_presentation(pres)) == pres);
    }
  }
}

TEST_CASE("normal forms round-trip and carry basis labels") {
  const auto& e = catalog::entry("p2");
  auto data = make_shelling_data(e.fan, *e.order);
  for (Mode m : {kAdd, kMul}) {
    Reducer red(e.fan, data, m);
    XPolynomial p(m, 3, 2);
    p.add_term({2, 0, 1}, CoeffElem::constant(m, 2, 3));
    NormalForm nf = red.reduce(p);
    std::string text = write_normal_form(nf, data);
    CHECK(parse_normal_form(text) == nf);
    CHECK(text.find("\"basis\"") != std::string::npos);
  }
  CHECK_THROWS_AS(write_normal_form(NormalForm(kAdd, 2, 5), data),
                  dimension_error);
}

TEST_CASE("multiplication tables round-trip through text") {
  for (const auto& name : {"p2", "p1xp1"}) {
    CAPTURE(name);
    const auto& e = catalog::entry(name);
    auto data = make_shelling_data(e.fan, *e.order);
    for (Mode m : {kAdd, kMul}) {
      MultTable table = mult_table(e.fan, data, m);
      CHECK(parse_mult_table(write_mult_table(table, data)) == table);
    }
  }
}

TEST_CASE("specialized tables round-trip through text") {
  const auto& e = catalog::entry("p1");
  auto data = make_shelling_data(e.fan, *e.order);
  MultTable table = mult_table(e.fan, data, kAdd);

  auto zero = SpecializationTarget::all_equal(kAdd, 1, 0);
  SpecTable s0 = specialize(table, zero);
  CHECK(parse_spec_table(write_spec_table(s0, zero)) == s0);

  auto bundle = SpecializationTarget::truncated(
      kAdd, {2}, {TruncPoly::variable(1, 0, 3)});
  SpecTable s1 = specialize(table, bundle);
  std::string text = write_spec_table(s1, bundle);
  CHECK(parse_spec_table(text) == s1);
  CHECK(text.find("\"caps\"") != std::string::npos);
}

TEST_CASE("expressions build the expected polynomials") {
  CHECK(parse_poly_expr("x1", kAdd, 3, 2) ==
        XPolynomial::variable(kAdd, 3, 2, 0));

  XPolynomial want(kAdd, 3, 2);
  want.add_term({1, 1, 0}, CoeffElem::constant(kAdd, 2, 1));
  CoeffElem c(kAdd, 2);
  c.add_term({2, 0}, -3);
  want.add_term({0, 0, 1}, c);
  CHECK(parse_poly_expr("x1*x2 - 3*r1^2*x3", kAdd, 3, 2) == want);

  XPolynomial square(kAdd, 3, 2);
  square.add_term({2, 0, 0}, CoeffElem::constant(kAdd, 2, 1));
  square.add_term({1, 1, 0}, CoeffElem::constant(kAdd, 2, 2));
  square.add_term({0, 2, 0}, CoeffElem::constant(kAdd, 2, 1));
  CHECK(parse_poly_expr("(x1 + x2)^2", kAdd, 3, 2) == square);

  XPolynomial neg(kAdd, 3, 2);
  neg.add_term({1, 0, 0}, CoeffElem::constant(kAdd, 2, -1));
  neg.add_term({0, 0, 0}, CoeffElem::constant(kAdd, 2, 2));
  CHECK(parse_poly_expr("-x1 + 2", kAdd, 3, 2) == neg);

  CHECK(parse_poly_expr("r1^-1", kMul, 3, 2) ==
        XPolynomial::scalar(3, CoeffElem::r(kMul, 2, 0, -1)));

  CHECK(parse_poly_expr("x1^0", kAdd, 3, 2) == XPolynomial::one(kAdd, 3, 2));
}

TEST_CASE("expression errors name the trouble spot") {
  try {
    parse_poly_expr("x1 + x9", kAdd, 3, 2);
    FAIL("expected parse_error");
  } catch (const parse_error& e) {
    CHECK(std::string(e.what()).find("unknown generator x9") !=
          std::string::npos);
    CHECK(e.offset == 5);
  }
  CHECK_THROWS_AS(parse_poly_expr("r3", kAdd, 3, 2), parse_error);
  CHECK_THROWS_AS(parse_poly_expr("x1 x2", kAdd, 3, 2), parse_error);
  CHECK_THROWS_AS(parse_poly_expr("x1^-1", kAdd, 3, 2), parse_error);
  CHECK_THROWS_AS(parse_poly_expr("x1^99", kAdd, 3, 2), parse_error);
  CHECK_THROWS_AS(parse_poly_expr("r1^-1", kAdd, 3, 2), mode_error);
  CHECK_THROWS_AS(parse_poly_expr("(x1", kAdd, 3, 2), parse_error);
  CHECK_THROWS_AS(parse_poly_expr("", kAdd, 3, 2), parse_error);
}

TEST_SUITE_END();
