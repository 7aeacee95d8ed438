#pragma once

#include <stdexcept>
#include <string>

namespace rankagg {

// Malformed profile text; carries the 1-based line number of the offending line.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Instance exceeds a solver's size budget (exact solvers are exponential).
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The chain's support digraph is not strongly connected; the stationary
// distribution is not the right tool, use the SCC-recursive ranking instead.
class ReducibleChainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rankagg
