#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace dlap {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input. `line()` is 1-based, or 0 when the input has no
/// line structure (graph6 strings).
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Input that parsed but violates a structural requirement (loops,
/// out-of-range labels, non-inverse-closed connection sets, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Raised when an operation needs a connected graph. Carries one vertex from
/// the component containing vertex 0 and one vertex it cannot reach.
class DisconnectedError : public Error {
 public:
  DisconnectedError(std::size_t reached, std::size_t unreached);
  std::size_t reached() const noexcept { return reached_; }
  std::size_t unreached() const noexcept { return unreached_; }

 private:
  std::size_t reached_;
  std::size_t unreached_;
};

/// A distance matrix that fails one or more metric axioms; every violation
/// found is listed.
class MetricError : public Error {
 public:
  explicit MetricError(std::vector<std::string> violations);
  const std::vector<std::string>& violations() const noexcept { return violations_; }

 private:
  std::vector<std::string> violations_;
};

/// The Jacobi eigensolver exhausted its sweep budget.
class ConvergenceError : public Error {
 public:
  ConvergenceError(int sweeps, double off_norm);
  double off_norm() const noexcept { return off_norm_; }
  int sweeps() const noexcept { return sweeps_; }

 private:
  int sweeps_;
  double off_norm_;
};

/// A size cap (Cheeger enumeration, dense spectra) was exceeded.
class CapacityError : public Error {
 public:
  using Error::Error;
};

}  // namespace dlap
