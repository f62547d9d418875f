#pragma once

#include <stdexcept>

namespace casimir {

/// An argument lies outside the domain of a physical formula (negative
/// temperature, non-positive gap, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The operation is not defined for the given material model, e.g. asking a
/// perfect conductor for a finite permittivity.
class UnsupportedModelError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A named entity (material, key) could not be resolved.
class LookupError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Malformed or inconsistent configuration input.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace casimir
