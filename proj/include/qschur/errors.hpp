#pragma once

#include <stdexcept>
#include <string>

namespace qschur {

struct NotDivisible : std::runtime_error {
  explicit NotDivisible(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
  size_t pos;
  ParseError(const std::string& what, size_t pos_)
      : std::runtime_error(what + " (at position " + std::to_string(pos_) + ")"), pos(pos_) {}
};

struct UnknownColor : std::runtime_error {
  explicit UnknownColor(const std::string& what) : std::runtime_error(what) {}
};

struct WindowOverflow : std::runtime_error {
  explicit WindowOverflow(const std::string& what) : std::runtime_error(what) {}
};

struct EmptySafeInterior : std::runtime_error {
  explicit EmptySafeInterior(const std::string& what) : std::runtime_error(what) {}
};

struct UnsupportedSymbol : std::runtime_error {
  explicit UnsupportedSymbol(const std::string& what) : std::runtime_error(what) {}
};

struct UnmappedGenerator : std::runtime_error {
  explicit UnmappedGenerator(const std::string& what) : std::runtime_error(what) {}
};

struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qschur
