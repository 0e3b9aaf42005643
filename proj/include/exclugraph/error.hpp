#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace exclugraph {

// Root of the error hierarchy. The CLI maps categories to exit codes:
// parameter-like errors exit 2, numerical errors exit 3.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParameterError : public Error {
 public:
  using Error::Error;
};

// Input exceeds a hard size limit (vertex cap, SDP cap, group-order cap).
class CapacityError : public Error {
 public:
  using Error::Error;
};

// A graph hypothesis required by an operation does not hold
// (not self-complementary, not vertex-transitive).
class StructuralError : public Error {
 public:
  using Error::Error;
};

// Operation called on an input outside its domain, e.g. witness extraction
// for a point that is already in the quantum set.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// Solver failed to reach its tolerance. Carries the best certified bracket
// [lower, upper] when one is available.
class NumericalError : public Error {
 public:
  explicit NumericalError(const std::string& what, double lower = 0.0, double upper = 0.0)
      : Error(what), lower_(lower), upper_(upper) {}

  double lower() const noexcept { return lower_; }
  double upper() const noexcept { return upper_; }

 private:
  double lower_;
  double upper_;
};

}  // namespace exclugraph
