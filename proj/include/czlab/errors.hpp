#pragma once

#include <stdexcept>

namespace czlab {

/// Point outside the disc a field is defined on, or a stencil leaving it.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Invalid parameters for a field or an experiment (nu < 1, epsilon >= 0.1, ...).
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An experiment was handed an inconsistent setup, e.g. a grid without the
/// diagnostic radii it needs or a test function leaking out of the disc.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A derivative order or norm that is not implemented for the requested field.
class UnsupportedError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A report or config file could not be read or written.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace czlab
