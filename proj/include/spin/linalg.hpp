#pragma once

#include <optional>
#include <vector>

#include "spin/scalar.hpp"

namespace spin {

using ScalarMatrix = std::vector<std::vector<Scalar>>;  // row-major

// Solution set {particular + span(kernel)} of matrix * x = rhs.
struct AffineSolution {
  std::vector<Scalar> particular;
  std::vector<std::vector<Scalar>> kernel;
};

// Gauss-Jordan elimination over the field; free variables are set to zero
// in the particular solution.  nullopt when the system is inconsistent.
std::optional<AffineSolution> solve_linear(const ScalarMatrix& matrix,
                                           const std::vector<Scalar>& rhs, std::size_t columns,
                                           const Field& field);

}  // namespace spin
