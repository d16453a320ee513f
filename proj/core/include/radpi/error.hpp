#pragma once

#include <stdexcept>
#include <string>

namespace radpi {

/// Failure categories. The CLI maps each one onto a process exit code.
enum class ErrorKind {
  usage,                ///< bad arguments or preconditions supplied by the caller
  malformed,            ///< structurally invalid input (formula document, rational literal)
  validation,           ///< a formula failed its exactness relation
  domain,               ///< argument outside the supported numeric domain
  division_by_zero,
  precision_exhausted,  ///< working precision too small for the requested result
  divergence,           ///< iteration stopped improving
  inconsistency,        ///< two independent computations disagree
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace radpi
