#pragma once

#include <stdexcept>
#include <string>

namespace smdiscord {

// Malformed input: bad state parameters, dimension mismatches, parse failures.
class validation_error : public std::runtime_error {
 public:
  explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

// Parameters outside the numerical domain of an entropy functional
// (q <= 0, or q/r within tolerance of a singular line).
class numeric_domain_error : public std::runtime_error {
 public:
  explicit numeric_domain_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace smdiscord
