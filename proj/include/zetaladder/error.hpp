#pragma once

#include <stdexcept>
#include <string>

namespace zl {

/// Failure categories shared by the C++ core and the C API status codes.
enum class ErrorCode {
  domain = 1,        // argument outside the operation's domain
  non_convergence,   // quadrature or root solve did not reach tolerance
  capability,        // request exceeds a built-in limit (sieve size, cost guard)
  load,              // checkpoint file is malformed
  bracket,           // root could not be bracketed
  usage,             // invalid configuration or flags
  io,                // filesystem failure
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(ErrorCode::domain, what) {}
};

class CapabilityError : public Error {
 public:
  explicit CapabilityError(const std::string& what)
      : Error(ErrorCode::capability, what) {}
};

class LoadError : public Error {
 public:
  explicit LoadError(const std::string& what) : Error(ErrorCode::load, what) {}
};

class BracketError : public Error {
 public:
  explicit BracketError(const std::string& what) : Error(ErrorCode::bracket, what) {}
};

class UsageError : public Error {
 public:
  explicit UsageError(const std::string& what) : Error(ErrorCode::usage, what) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(ErrorCode::io, what) {}
};

/// Carries the best available value so callers can still inspect it.
class NonConvergence : public Error {
 public:
  NonConvergence(const std::string& what, double best_estimate, double err_estimate)
      : Error(ErrorCode::non_convergence, what),
        best_estimate_(best_estimate),
        err_estimate_(err_estimate) {}

  double best_estimate() const noexcept { return best_estimate_; }
  double err_estimate() const noexcept { return err_estimate_; }

 private:
  double best_estimate_;
  double err_estimate_;
};

}  // namespace zl
