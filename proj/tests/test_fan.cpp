#include <doctest.h>

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "fanring/catalog.hpp"
#include "fanring/errors.hpp"
#include "fanring/fan.hpp"

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

bool has_diagnostic(const ValidationReport& rep, const std::string& text) {
  return std::find(rep.diagnostics.begin(), rep.diagnostics.end(), text) !=
         rep.diagnostics.end();
}

}  // namespace

TEST_SUITE_BEGIN("fan");

TEST_CASE("cone references sort their rays and reject duplicates") {
  ConeRef c({4, 0, 2});
  CHECK(c.rays == std::vector<int>{0, 2, 4});
  CHECK(c.dim() == 3);
  CHECK(c.contains(2));
  CHECK_FALSE(c.contains(1));
  CHECK_THROWS_AS(ConeRef({1, 1}), input_error);
}

TEST_CASE("cone set algebra") {
  ConeRef a({0, 1, 3}), b({1, 2, 3});
  CHECK(cone_union(a, b).rays == std::vector<int>{0, 1, 2, 3});
  CHECK(cone_intersection(a, b).rays == std::vector<int>{1, 3});
  CHECK(cone_difference(a, b).rays == std::vector<int>{0});
  CHECK(cone_intersection(a, b).subset_of(a));
  CHECK(cone_intersection(a, b).subset_of(b));
  CHECK(ConeRef{}.subset_of(a));
  CHECK_FALSE(a.subset_of(b));
  CHECK(cone_to_string(ConeRef({0, 2})) == "{1, 3}");
  CHECK(cone_to_string(ConeRef{}) == "{}");
}

TEST_CASE("check_structure rejects malformed input") {
  Fan empty;
  CHECK_THROWS_AS(check_structure(empty), input_error);

  auto bad_len = small_fan(2, {{1, 0}, {0, 1}}, {{1, 2}});
  bad_len.rays[1] = LatticeVector({0, 1, 0});
  CHECK_THROWS_AS(check_structure(bad_len), input_error);

  auto bad_idx = small_fan(2, {{1, 0}, {0, 1}}, {{1, 2}});
  bad_idx.max_cones[0].rays.push_back(5);
  CHECK_THROWS_WITH_AS(check_structure(bad_idx),
                       "fan: max cone 1 references ray 6 out of range",
                       input_error);
}

TEST_CASE("every catalog fan validates cleanly") {
  for (const auto& e : catalog::entries()) {
    CAPTURE(e.name);
    auto rep = validate(e.fan);
    CHECK(rep.ok());
    CHECK(rep.diagnostics.empty());
  }
  CHECK(catalog::entries().size() == 10);
  CHECK(catalog::entry("p2").fan.ray_count() == 3);
  CHECK(catalog::entry("oda_84").fan.max_cone_count() == 10);
  CHECK_THROWS_AS(catalog::entry("nope"), input_error);
}

TEST_CASE("face lattices have the expected sizes") {
  const std::map<std::string, std::size_t> expected = {
      {"p1", 3},          {"p2", 7},           {"p3", 15},
      {"p1xp1", 9},       {"hirzebruch_0", 9}, {"hirzebruch_1", 9},
      {"hirzebruch_2", 9}, {"hirzebruch_3", 9}, {"bl_p2", 9},
      {"oda_84", 33}};
  for (const auto& e : catalog::entries()) {
    CAPTURE(e.name);
    auto faces = all_faces(e.fan);
    CHECK(faces.size() == expected.at(e.name));
    CHECK(faces.count(ConeRef{}) == 1);
    for (const auto& c : e.fan.max_cones) CHECK(faces.count(c) == 1);
  }
}

TEST_CASE("face counts by dimension satisfy the Euler relation") {
  // The proper faces triangulate a sphere of dimension n-1, so the
  // alternating sum over all faces including the zero cone is (-1)^n.
  for (const auto& e : catalog::entries()) {
    CAPTURE(e.name);
    int sum = 0;
    for (const auto& f : all_faces(e.fan)) sum += (f.dim() % 2 == 0) ? 1 : -1;
    CHECK(sum == (e.fan.dim % 2 == 0 ? 1 : -1));
  }
}

TEST_CASE("oda_84 face counts by dimension") {
  const auto& fan = catalog::entry("oda_84").fan;
  std::map<int, int> by_dim;
  for (const auto& f : all_faces(fan)) ++by_dim[f.dim()];
  CHECK(by_dim[0] == 1);
  CHECK(by_dim[1] == 7);
  CHECK(by_dim[2] == 15);
  CHECK(by_dim[3] == 10);
}

TEST_CASE("minimal non-faces of the catalog fans") {
  auto mnf = [](const std::string& name) {
    return minimal_nonfaces(catalog::entry(name).fan);
  };
  CHECK(mnf("p1") == std::vector<ConeRef>{cone1({1, 2})});
  CHECK(mnf("p2") == std::vector<ConeRef>{cone1({1, 2, 3})});
  CHECK(mnf("p3") == std::vector<ConeRef>{cone1({1, 2, 3, 4})});
  CHECK(mnf("p1xp1") == std::vector<ConeRef>{cone1({1, 2}), cone1({3, 4})});
  CHECK(mnf("hirzebruch_2") ==
        std::vector<ConeRef>{cone1({1, 3}), cone1({2, 4})});
  CHECK(mnf("bl_p2") == std::vector<ConeRef>{cone1({1, 2}), cone1({3, 4})});
  CHECK(mnf("oda_84") ==
        std::vector<ConeRef>{cone1({1, 4}), cone1({1, 6}), cone1({2, 4}),
                             cone1({2, 7}), cone1({3, 4}), cone1({3, 5}),
                             cone1({5, 6, 7})});
}

TEST_CASE("no face contains a minimal non-face") {
  for (const auto& e : catalog::entries()) {
    CAPTURE(e.name);
    auto faces = all_faces(e.fan);
    auto mins = minimal_nonfaces(e.fan);
    for (const auto& f : faces)
      for (const auto& m : mins) CHECK_FALSE(m.subset_of(f));
    // Minimality: dropping any ray from a minimal non-face gives a face.
    for (const auto& m : mins)
      for (int i = 0; i < m.dim(); ++i) {
        ConeRef sub = m;
        sub.rays.erase(sub.rays.begin() + i);
        CHECK(faces.count(sub) == 1);
      }
  }
}

TEST_CASE("wall graphs of the catalog fans") {
  auto graph = [](const std::string& name) {
    return wall_graph(catalog::entry(name).fan);
  };
  CHECK(graph("p1") == std::vector<std::vector<int>>{{1}, {0}});
  CHECK(graph("p2") ==
        std::vector<std::vector<int>>{{1, 2}, {0, 2}, {0, 1}});
  CHECK(graph("p1xp1") ==
        std::vector<std::vector<int>>{{1, 3}, {0, 2}, {1, 3}, {0, 2}});
  // p3: any two of the four maximal cones share a wall.
  auto p3 = graph("p3");
  for (int a = 0; a < 4; ++a) CHECK(p3[a].size() == 3);
}

TEST_CASE("complete simplicial fans have wall degree n everywhere") {
  for (const auto& e : catalog::entries()) {
    CAPTURE(e.name);
    auto adj = wall_graph(e.fan);
    for (const auto& nbrs : adj)
      CHECK(static_cast<int>(nbrs.size()) == e.fan.dim);
  }
}

TEST_CASE("removing a cone breaks completeness with a wall diagnostic") {
  auto fan = catalog::entry("p2").fan;
  fan.max_cones.pop_back();  // drops {1, 3}
  auto rep = validate(fan);
  CHECK(rep.rays_ok);
  CHECK(rep.smooth);
  CHECK(rep.pure);
  CHECK(rep.fan_condition);
  CHECK_FALSE(rep.complete);
  CHECK_FALSE(rep.ok());
  CHECK(has_diagnostic(rep, "wall {1} on 1 cone"));
  CHECK(has_diagnostic(rep, "wall {3} on 1 cone"));
}

TEST_CASE("a cone of lattice index two is flagged as not unimodular") {
  auto fan = small_fan(2, {{1, 0}, {1, 2}}, {{1, 2}});
  auto rep = validate(fan);
  CHECK(rep.rays_ok);
  CHECK(rep.simplicial);
  CHECK_FALSE(rep.smooth);
  CHECK(has_diagnostic(rep, "max cone {1, 2} is not unimodular (index 2)"));
}

TEST_CASE("dependent rays are flagged and skip the fan condition") {
  auto fan = small_fan(2, {{1, 0}, {-1, 0}}, {{1, 2}});
  auto rep = validate(fan);
  CHECK_FALSE(rep.simplicial);
  CHECK_FALSE(rep.smooth);
  CHECK_FALSE(rep.fan_condition);
  CHECK(has_diagnostic(rep, "max cone {1, 2} has dependent rays"));
  CHECK(has_diagnostic(rep, "fan condition not checked: fan is not simplicial"));
}

TEST_CASE("overlapping cones violate the fan condition") {
  // cone(v3, v4) sits inside the interior of cone(v1, v2).
  auto nested = small_fan(2, {{1, 0}, {0, 1}, {1, 1}, {1, 2}},
                          {{1, 2}, {3, 4}});
  auto rep = validate(nested);
  CHECK(rep.smooth);
  CHECK_FALSE(rep.fan_condition);
  CHECK(has_diagnostic(
      rep, "max cones {1, 2} and {3, 4} do not meet in a common face"));

  // Here the cones share ray v1 but overlap beyond that ray.
  auto skewed = small_fan(2, {{1, 0}, {0, 1}, {-1, 1}}, {{1, 2}, {1, 3}});
  auto rep2 = validate(skewed);
  CHECK(rep2.smooth);
  CHECK_FALSE(rep2.fan_condition);
  CHECK(has_diagnostic(
      rep2, "max cones {1, 2} and {1, 3} do not meet in a common face"));
}

TEST_CASE("repeated maximal cones are rejected") {
  auto fan = small_fan(2, {{1, 0}, {0, 1}, {-1, -1}},
                       {{1, 2}, {2, 3}, {1, 3}, {1, 2}});
  auto rep = validate(fan);
  CHECK_FALSE(rep.fan_condition);
  CHECK(has_diagnostic(rep, "max cones 1 and 4 coincide"));
}

TEST_CASE("ray problems are reported individually") {
  auto zero = small_fan(2, {{0, 0}, {0, 1}}, {{1, 2}});
  CHECK(has_diagnostic(validate(zero), "ray 1 is zero"));

  auto imprim = small_fan(2, {{2, 0}, {0, 1}}, {{1, 2}});
  CHECK(has_diagnostic(validate(imprim), "ray 1 is not primitive"));

  auto dup = small_fan(2, {{1, 0}, {0, 1}, {1, 0}}, {{1, 2}, {2, 3}});
  CHECK(has_diagnostic(validate(dup), "rays 1 and 3 coincide"));

  auto unused = small_fan(2, {{1, 0}, {0, 1}, {-1, -1}, {1, 1}},
                          {{1, 2}, {2, 3}, {1, 3}});
  auto rep = validate(unused);
  CHECK_FALSE(rep.rays_ok);
  CHECK(has_diagnostic(rep, "ray 4 lies in no maximal cone"));
}

TEST_CASE("validation and face data ignore maximal cone order") {
  for (const auto& e : catalog::entries()) {
    CAPTURE(e.name);
    Fan shuffled = e.fan;
    std::reverse(shuffled.max_cones.begin(), shuffled.max_cones.end());
    CHECK(validate(shuffled).ok());
    CHECK(all_faces(shuffled) == all_faces(e.fan));
    auto a = minimal_nonfaces(shuffled);
    auto b = minimal_nonfaces(e.fan);
    CHECK(a == b);
  }
}

TEST_SUITE_END();
