#pragma once

// Built-in fans used by the CLI and the test suite.  Each entry knows a
// maximal-cone order passing both supporting conditions once one has
// been recorded; orders are 0-based positions into fan.max_cones.

#include <optional>
#include <string>
#include <vector>

#include "fanring/fan.hpp"

namespace fanring::catalog {

struct Entry {
  std::string name;
  Fan fan;
  std::optional<std::vector<int>> order;
};

const std::vector<Entry>& entries();

// Throws input_error for names not in the catalog.
const Entry& entry(const std::string& name);

std::vector<std::string> names();

}  // namespace fanring::catalog
