#pragma once

#include <stdexcept>
#include <string>

namespace hspex {

// Construction input violates a documented precondition (bad edge size,
// vertex out of range, duplicate edge, malformed pattern row, ...).
class validation_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Instance exceeds a documented desk-scale guardrail (canonical labelling
// past n=12, iso-reduced enumeration past its caps, ...).
class infeasible_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text input; carries the 1-based line number of the offence.
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& msg, int line)
      : std::runtime_error(msg + " (line " + std::to_string(line) + ")"),
        line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace hspex
