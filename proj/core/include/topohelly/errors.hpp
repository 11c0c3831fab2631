#pragma once

#include <stdexcept>
#include <string>

namespace topohelly {

// Input that violates a documented precondition (bad facets, unknown
// vertices, non-prime characteristic, ...).
class malformed_input_error : public std::runtime_error {
 public:
  explicit malformed_input_error(const std::string& what)
      : std::runtime_error(what) {}
};

// An enumeration or matrix computation would exceed the configured caps.
class resource_limit_error : public std::runtime_error {
 public:
  explicit resource_limit_error(const std::string& what)
      : std::runtime_error(what) {}
};

// A constructed object failed one of its own invariants (e.g. a chain
// complex whose boundary maps do not compose to zero).
class internal_consistency_error : public std::logic_error {
 public:
  explicit internal_consistency_error(const std::string& what)
      : std::logic_error(what) {}
};

// Generator parameters that cannot produce the advertised shape.
class infeasible_parameters_error : public std::runtime_error {
 public:
  explicit infeasible_parameters_error(const std::string& what)
      : std::runtime_error(what) {}
};

// Raised by operations whose contract requires a non-empty space.
class empty_space_error : public std::runtime_error {
 public:
  explicit empty_space_error(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace topohelly
