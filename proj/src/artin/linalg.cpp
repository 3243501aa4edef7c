#include "spin/linalg.hpp"

#include <utility>

namespace spin {

std::optional<AffineSolution> solve_linear(const ScalarMatrix& matrix,
                                           const std::vector<Scalar>& rhs, std::size_t columns,
                                           const Field& field) {
  const std::size_t rows = matrix.size();
  ScalarMatrix aug = matrix;
  for (std::size_t i = 0; i < rows; ++i) aug[i].push_back(rhs[i]);

  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < columns && row < rows; ++col) {
    std::size_t pivot = row;
    while (pivot < rows && aug[pivot][col].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(aug[row], aug[pivot]);
    const Scalar inv = aug[row][col].inverse();
    for (auto& entry : aug[row]) entry *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == row || aug[i][col].is_zero()) continue;
      const Scalar factor = aug[i][col];
      for (std::size_t j = col; j <= columns; ++j) aug[i][j] -= factor * aug[row][j];
    }
    pivot_cols.push_back(col);
    ++row;
  }
  for (std::size_t i = row; i < rows; ++i) {
    if (!aug[i][columns].is_zero()) return std::nullopt;
  }

  AffineSolution out;
  out.particular.assign(columns, Scalar{field, 0});
  std::vector<bool> is_pivot(columns, false);
  for (std::size_t k = 0; k < pivot_cols.size(); ++k) {
    out.particular[pivot_cols[k]] = aug[k][columns];
    is_pivot[pivot_cols[k]] = true;
  }
  for (std::size_t free = 0; free < columns; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(columns, Scalar{field, 0});
    v[free] = Scalar{field, 1};
    for (std::size_t k = 0; k < pivot_cols.size(); ++k) v[pivot_cols[k]] = -aug[k][free];
    out.kernel.push_back(std::move(v));
  }
  return out;
}

}  // namespace spin
