#pragma once

#include <stdexcept>
#include <string>

namespace halfline {

// Bad run configuration (grid sizes, time steps, family parameters).
class ConfigError : public std::runtime_error {
  public:
    explicit ConfigError(const std::string& what) : std::runtime_error("config: " + what) {}
};

// API misuse: wrong field representation, mismatched grids.
class UsageError : public std::logic_error {
  public:
    explicit UsageError(const std::string& what) : std::logic_error("usage: " + what) {}
};

// Quadrature or solver failure with diagnostics in the message.
class NumericsError : public std::runtime_error {
  public:
    explicit NumericsError(const std::string& what) : std::runtime_error("numerics: " + what) {}
};

}  // namespace halfline
