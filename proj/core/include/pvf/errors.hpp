#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pvf {

// Base class for faults. Outcomes that are part of normal control flow
// (cap-exceeded closures, hypothesis violations) are returned as values,
// not thrown.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class ParseError : public Error {
public:
  ParseError(const std::string& msg, std::size_t pos)
      : Error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
  std::size_t position;
};

}  // namespace pvf
