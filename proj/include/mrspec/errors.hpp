#pragma once

#include <stdexcept>
#include <string>

namespace mrspec {

/// Argument outside the mathematical domain of an operation (r <= 0, b <= 0, ...).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// A state was requested that is not bound for the given parameters.
class NoBoundStateError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent configuration (registry file, CLI-level specs).
class ConfigError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Lookup of an unknown key (molecule name, table name).
class NotFoundError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A closed-form evaluation produced a value that cannot be right, e.g. a
/// non-positive normalization integral.
class NumericalError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Analytic and numerical state lists do not line up.
class AlignmentError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace mrspec
