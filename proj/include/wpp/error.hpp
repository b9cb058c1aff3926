#pragma once

#include <stdexcept>
#include <string>

namespace wpp {

// Malformed input: a non-packed word, an invalid relation, a bad partition.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An enumeration or exhaustive check was asked for beyond its size guard.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace wpp
