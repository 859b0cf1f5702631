// Error types shared across the library. Every recoverable failure mode is a
// distinct exception so the CLI can map it to a stable exit code.

#pragma once

#include <stdexcept>
#include <string>

namespace seqlab {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A configured search/scan ceiling was hit before an answer was found.
class BoundExhaustedError : public Error {
 public:
  using Error::Error;
};

// A distinct-string or similar memory cap was hit mid-enumeration.
class MemoryBudgetError : public Error {
 public:
  using Error::Error;
};

// An enclosure still straddles an integer at the maximum working precision.
class PrecisionCeilingError : public Error {
 public:
  using Error::Error;
};

// Malformed input text (b-files, language tables, CLI string arguments).
class ParseError : public Error {
 public:
  using Error::Error;
};

// Remote fetch failed or was disallowed by configuration.
class NetworkError : public Error {
 public:
  using Error::Error;
};

// An argument violated a documented precondition.
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace seqlab
