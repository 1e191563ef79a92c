#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace twojoin {

// Invalid graph construction (self-loop, duplicate edge, id out of range, size cap).
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed graph or split file. line() is 1-based, 0 when not tied to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// An algorithm was called outside its stated domain (disconnected input,
// improper 4-tuple, bad seed set, oracle size cap, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace twojoin
