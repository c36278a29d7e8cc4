#pragma once

// JSON input and output for fans and for every value the command-line
// tool prints.  Writers emit UTF-8 with object keys in sorted order
// and arbitrary-precision integers as decimal strings; each writer has
// a matching parser and the pair round-trips exactly.  Parsers throw
// parse_error, with the byte offset filled in for syntax errors.

#include <optional>
#include <string>
#include <vector>

#include "fanring/fan.hpp"
#include "fanring/presentation.hpp"
#include "fanring/reducer.hpp"
#include "fanring/ringops.hpp"
#include "fanring/shelling.hpp"

namespace fanring {

// A fan on disk: the fan itself plus an optional stored maximal-cone
// order and an optional display name.  Ray and cone indices are
// 1-based in the file and 0-based here.
struct FanFile {
  Fan fan;
  std::optional<std::vector<int>> order;
  std::optional<std::string> name;

  bool operator==(const FanFile&) const = default;
};

FanFile parse_fan_file(const std::string& text);
std::string write_fan_file(const FanFile& file);

XPolynomial parse_polynomial(const std::string& text);
std::string write_polynomial(const XPolynomial& p);

Presentation parse_presentation(const std::string& text);
std::string write_presentation(const Presentation& pres);

// Normal forms and tables carry their basis labels (tau ray sets,
// 1-based) so the output reads on its own; parsers ignore the labels.
NormalForm parse_normal_form(const std::string& text);
std::string write_normal_form(const NormalForm& nf, const ShellingData& data);

MultTable parse_mult_table(const std::string& text);
std::string write_mult_table(const MultTable& table, const ShellingData& data);

SpecTable parse_spec_table(const std::string& text);
std::string write_spec_table(const SpecTable& table,
                             const SpecializationTarget& target);

}  // namespace fanring
