#pragma once

#include <stdexcept>
#include <string>

namespace crowdforge {

// File and CSV problems: missing paths, malformed rows. CLI maps these to exit 2.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Invalid values or shapes for a numeric operation. CLI maps these to exit 3.
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace crowdforge
