#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fanring {

// Base class for everything thrown by this library.
struct error : std::runtime_error {
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed user input: bad indices, wrong lengths, unknown names.
struct input_error : error {
  using error::error;
};

// Vector lengths inconsistent with the ambient lattice rank.
struct dimension_error : input_error {
  using input_error::input_error;
};

// A ray was zero or otherwise unusable.
struct invalid_ray_error : input_error {
  using input_error::input_error;
};

// Requested an operation that needs a unimodular ray set.
struct not_smooth_error : error {
  using error::error;
};

// Additive and multiplicative values were mixed, or a Laurent exponent
// appeared where only polynomial coefficients are allowed.
struct mode_error : error {
  using error::error;
};

// The fan (or its ordering data) does not satisfy the preconditions of
// the requested ring computation.
struct unsupported_fan_error : error {
  using error::error;
};

// An independent rank count disagreed with the free-basis prediction.
// This is a mathematical finding, not a usage mistake.
struct freeness_violation_error : error {
  using error::error;
};

// Specialization target rejected (e.g. non-invertible image in
// multiplicative mode).
struct specialization_error : error {
  using error::error;
};

// Text or JSON failed to parse; `offset` is a byte position when known.
struct parse_error : input_error {
  std::size_t offset;
  parse_error(const std::string& what, std::size_t byte_offset = 0)
      : input_error(what), offset(byte_offset) {}
};

// A bug guard fired (work budget exceeded, broken internal invariant).
struct internal_error : std::logic_error {
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace fanring
