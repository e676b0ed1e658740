#pragma once

#include <stdexcept>
#include <string>

namespace ssvep {

// Error taxonomy shared by the library and the CLI exit-code contract:
// usage/configuration -> 2, malformed data -> 3, numeric failure -> 4.

class ConfigError : public std::runtime_error {
public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

class DataError : public std::runtime_error {
public:
  explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

class NumericError : public std::runtime_error {
public:
  explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace ssvep
