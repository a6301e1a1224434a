#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace drfwl {

/// Malformed edge-list input. Carries the 1-based line number of the offending line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A request the closed-form engine cannot answer at the given distance cap
/// (e.g. 7-cycles with d < 3, 4-cliques at any d).
class CapabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input exceeds a configured size cap (dense FWL(2), brute-force oracle).
class SizeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace drfwl
