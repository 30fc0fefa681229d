#pragma once

#include <stdexcept>
#include <string>

namespace arr {

// A violated precondition or invalid input; maps to CLI exit code 1.
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// A configured resource guard fired (memory or enumeration budget); exit code 2.
struct ResourceError : std::runtime_error {
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input file; carries line/column for the CLI to report.
struct ParseError : std::runtime_error {
  ParseError(const std::string& what, int line, int column)
      : std::runtime_error(what + " (line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ")"),
        line(line),
        column(column) {}
  int line;
  int column;
};

}  // namespace arr
