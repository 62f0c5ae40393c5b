#pragma once

#include <stdexcept>
#include <string>

namespace aoposet {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The cover/order pairs given to the loader contain a directed cycle.
struct CycleError : Error {
  using Error::Error;
};

// Branch-and-bound hit SolverConfig::node_limit; no value is reported.
struct NodeLimitExceeded : Error {
  using Error::Error;
};

// Input exceeds a hard size guard (brute-force oracle, enumeration).
struct TooLarge : Error {
  using Error::Error;
};

// A construction was requested for (a, h) outside the range it is defined on.
struct OutOfSpecifiedRange : Error {
  using Error::Error;
};

// A formula needs a value that is not available from a closed form.
struct Unspecified : Error {
  using Error::Error;
};

// One of the argmax claims for the Lambda recurrence did not hold.
struct AssertionFailure : Error {
  using Error::Error;
};

// line 0 means the failure is not tied to a line (e.g. unreadable file).
struct ParseError : Error {
  ParseError(const std::string& msg, std::size_t line)
      : Error(line ? "line " + std::to_string(line) + ": " + msg : msg), line(line) {}
  std::size_t line;
};

}  // namespace aoposet
