#pragma once

#include <stdexcept>
#include <string>

namespace submatch {

// Base class for all errors thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : Error {
  int line;
  std::string raw;
  ParseError(const std::string& msg, int line_no)
      : Error("parse error (line " + std::to_string(line_no) + "): " + msg),
        line(line_no),
        raw(msg) {}
};

struct SimplicityViolation : Error {
  using Error::Error;
};

struct NotEulerian : Error {
  using Error::Error;
};

struct MissingEdge : Error {
  using Error::Error;
};

struct InvalidSplit : Error {
  using Error::Error;
};

struct InvalidParameter : Error {
  using Error::Error;
};

struct InvalidK : Error {
  using Error::Error;
};

struct TooLarge : Error {
  using Error::Error;
};

struct NotApplicable : Error {
  using Error::Error;
};

struct BadPairing : Error {
  using Error::Error;
};

struct IsolatedVertex : Error {
  using Error::Error;
};

struct NotConnected : Error {
  using Error::Error;
};

struct MapMismatch : Error {
  using Error::Error;
};

}  // namespace submatch
