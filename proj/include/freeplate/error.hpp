#pragma once

#include <stdexcept>
#include <string>

namespace freeplate {

enum class ErrorKind {
  invalid_argument,
  domain,
  convergence,
  no_root,
  bound_violation,
  io,
  parse,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

struct DomainError : Error {
  explicit DomainError(const std::string& w) : Error(ErrorKind::domain, w) {}
};

struct InvalidArgument : Error {
  explicit InvalidArgument(const std::string& w) : Error(ErrorKind::invalid_argument, w) {}
};

struct ConvergenceError : Error {
  explicit ConvergenceError(const std::string& w) : Error(ErrorKind::convergence, w) {}
};

struct NoRootError : Error {
  explicit NoRootError(const std::string& w) : Error(ErrorKind::no_root, w) {}
};

// raised when a computed eigenvalue leaves a proven bracket
struct BoundViolation : Error {
  explicit BoundViolation(const std::string& w) : Error(ErrorKind::bound_violation, w) {}
};

struct IoError : Error {
  explicit IoError(const std::string& w) : Error(ErrorKind::io, w) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& w) : Error(ErrorKind::parse, w) {}
};

// non-finite function value met while scanning or integrating
struct EvaluationError : Error {
  EvaluationError(double x, const std::string& w)
      : Error(ErrorKind::domain, w + " at x=" + std::to_string(x)), abscissa(x) {}
  double abscissa;
};

struct DepthExceeded : Error {
  DepthExceeded(double lo, double hi)
      : Error(ErrorKind::convergence,
              "adaptive quadrature depth exceeded on [" + std::to_string(lo) + ", " +
                  std::to_string(hi) + "]"),
        lo(lo),
        hi(hi) {}
  double lo, hi;
};

}  // namespace freeplate
