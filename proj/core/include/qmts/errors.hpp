#pragma once

#include <stdexcept>
#include <string>

namespace qmts {

/// Raised when a propagator family is asked to divide through a zero of the
/// decoherence function (|k(s)| below the singularity threshold).
class SingularPropagatorError : public std::runtime_error {
 public:
  explicit SingularPropagatorError(const std::string& what)
      : std::runtime_error(what) {}
};

/// Raised when a conditional probability is requested on a history whose
/// joint probability vanishes.
class ZeroProbabilityHistoryError : public std::runtime_error {
 public:
  explicit ZeroProbabilityHistoryError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace qmts
