#pragma once

#include <stdexcept>
#include <string>

namespace hcwalk {

// Numerical failure (eigensolver non-convergence, unstable integration,
// unresolvable degeneracy). Precondition violations throw
// std::invalid_argument instead.
class ComputationalError : public std::runtime_error {
 public:
  explicit ComputationalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hcwalk
