#pragma once

#include <stdexcept>
#include <string>

namespace wcg {

// Invalid Coxeter matrix, weights or configuration file.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed element string, polynomial text or unknown generator label.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The element table would grow past its configured cap.
class ResourceCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A query needs Kazhdan-Lusztig data beyond the length the tables cover.
class ScopeExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal consistency check failed; this always indicates a bug.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace wcg
