#pragma once

#include <stdexcept>
#include <string>

namespace kekulattice {

// Raised when an iterative method fails to converge or its inputs are
// numerically inconsistent. Precondition violations use std::invalid_argument.
class NumericalFailure : public std::runtime_error {
 public:
  explicit NumericalFailure(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace kekulattice
