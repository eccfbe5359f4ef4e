#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace densdet {

// Mismatched or invalid container dimensions.
class ShapeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid configuration value or combination.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input data; message carries source location.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  ParseError(const std::string& source, std::size_t line, const std::string& what)
      : std::runtime_error(source + ":" + std::to_string(line) + ": " + what) {}
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// API misuse, e.g. backward() before forward().
class StateError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// 3D geometry that cannot be projected into the image.
class ProjectionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace densdet
