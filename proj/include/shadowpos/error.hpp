#pragma once

#include <stdexcept>
#include <string>

namespace shadowpos {

// Malformed input: bad edge pair, bad family string, bad graph6 text.
class ParseError : public std::invalid_argument {
 public:
  explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

// Valid input that violates an operation's precondition
// (disconnected graph, size cap exceeded, ...).
class PreconditionError : public std::domain_error {
 public:
  explicit PreconditionError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace shadowpos
