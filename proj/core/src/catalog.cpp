#include "fanring/catalog.hpp"

#include <algorithm>

#include "fanring/errors.hpp"

namespace fanring::catalog {

namespace {

Fan make_fan(int dim, std::vector<std::vector<long>> ray_rows,
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

Entry make_hirzebruch(int a) {
  Entry e;
  e.name = "hirzebruch_" + std::to_string(a);
  e.fan = make_fan(2, {{1, 0}, {0, 1}, {-1, a}, {0, -1}},
                   {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
  e.order = std::vector<int>{0, 1, 2, 3};
  return e;
}

std::vector<Entry> build_entries() {
  std::vector<Entry> out;

  out.push_back({"p1", make_fan(1, {{1}, {-1}}, {{1}, {2}}),
                 std::vector<int>{1, 0}});

  out.push_back({"p2",
                 make_fan(2, {{1, 0}, {0, 1}, {-1, -1}},
                          {{1, 2}, {2, 3}, {1, 3}}),
                 std::vector<int>{0, 1, 2}});

  out.push_back({"p3",
                 make_fan(3,
                          {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}},
                          {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}}),
                 std::vector<int>{0, 1, 2, 3}});

  out.push_back({"p1xp1",
                 make_fan(2, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}},
                          {{1, 3}, {2, 3}, {2, 4}, {1, 4}}),
                 std::vector<int>{0, 1, 3, 2}});

  for (int a = 0; a <= 3; ++a) out.push_back(make_hirzebruch(a));

  out.push_back({"bl_p2",
                 make_fan(2, {{1, 0}, {0, 1}, {-1, -1}, {1, 1}},
                          {{1, 4}, {2, 4}, {2, 3}, {1, 3}}),
                 std::vector<int>{0, 1, 2, 3}});

  // Complete but non-projective: subdivide the three walls through
  // (-1,-1,-1) of the p3 fan cyclically, one new ray per wall.
  out.push_back({"oda_84",
                 make_fan(3,
                          {{1, 0, 0},
                           {0, 1, 0},
                           {0, 0, 1},
                           {-1, -1, -1},
                           {0, -1, -1},
                           {-1, 0, -1},
                           {-1, -1, 0}},
                          {{1, 2, 3},
                           {1, 2, 5},
                           {2, 5, 6},
                           {4, 5, 6},
                           {2, 3, 6},
                           {3, 6, 7},
                           {4, 6, 7},
                           {1, 3, 7},
                           {1, 5, 7},
                           {4, 5, 7}}),
                 std::vector<int>{9, 8, 7, 6, 5, 4, 3, 2, 1, 0}});

  return out;
}

}  // namespace

const std::vector<Entry>& entries() {
  static const std::vector<Entry> all = build_entries();
  return all;
}

const Entry& entry(const std::string& name) {
  const auto& all = entries();
  auto it = std::find_if(all.begin(), all.end(),
                         [&](const Entry& e) { return e.name == name; });
  if (it == all.end())
    throw input_error("unknown catalog fan \"" + name + "\"");
  return *it;
}

std::vector<std::string> names() {
  std::vector<std::string> out;
  for (const auto& e : entries()) out.push_back(e.name);
  return out;
}

}  // namespace fanring::catalog
