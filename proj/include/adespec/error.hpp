#pragma once

#include <stdexcept>
#include <string>

namespace adespec {

enum class ErrorKind {
  dimension,        // non-square or mismatched matrix shapes
  pole_at_origin,   // series expansion of a function singular at 0
  division,         // division by zero, inexact division
  not_finite,       // symbolic graph where a finite one is required
  range,            // parameter outside the documented range
  parity,           // odd walk length
  type,             // finite graph where a symbolic one is required
  shape,            // malformed seed matrix
  catalog,          // name not in the measure catalog
  period,           // target not polynomial after clearing (1-q)(1-q^N)
  consistency,      // an internal invariant failed
  parse,            // malformed textual input
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace adespec
