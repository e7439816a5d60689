#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace contextlab {

/// Outcome of a phase-1 feasibility solve for A x = b, x >= 0.
struct FeasibilityResult {
  bool feasible = false;
  /// Basic column indices; values[i] is the value of column basis[i].
  /// Artificial columns are numbered num_columns + row.
  std::vector<int> basis;
  std::vector<double> values;
  double infeasibility = 0.0;  ///< phase-1 optimum: total artificial mass left
  int iterations = 0;
};

/// Revised phase-1 simplex with Bland's rule on both the entering and the
/// leaving choice, so the pivot sequence is deterministic and cannot cycle.
/// `column(j, out)` must fill out[0..rows) with column j of A; rhs must be
/// nonnegative (flip row signs beforehand if needed). Artificial variables
/// never re-enter once they leave the basis.
template <typename ColumnFn>
FeasibilityResult solve_equality_feasibility(int rows, int num_columns, ColumnFn&& column,
                                             const std::vector<double>& rhs,
                                             double pivot_tolerance = 1e-11,
                                             int max_iterations = 20000) {
  if (static_cast<int>(rhs.size()) != rows)
    throw std::invalid_argument("rhs length does not match row count");
  for (double b : rhs)
    if (b < 0.0) throw std::invalid_argument("phase-1 simplex expects nonnegative rhs");

  FeasibilityResult result;
  result.basis.resize(rows);
  result.values = rhs;
  for (int i = 0; i < rows; ++i) result.basis[i] = num_columns + i;

  // Explicit basis inverse; rows stays small (<= ~21) in this library.
  std::vector<double> binv(static_cast<std::size_t>(rows) * rows, 0.0);
  for (int i = 0; i < rows; ++i) binv[static_cast<std::size_t>(i) * rows + i] = 1.0;

  std::vector<double> col(rows), direction(rows), duals(rows);

  while (result.iterations < max_iterations) {
    // duals y = c_B * Binv, with c_B = 1 on artificial rows only.
    for (int r = 0; r < rows; ++r) {
      double y = 0.0;
      for (int i = 0; i < rows; ++i)
        if (result.basis[i] >= num_columns) y += binv[static_cast<std::size_t>(i) * rows + r];
      duals[r] = y;
    }

    // Entering column: smallest real index with negative reduced cost.
    int entering = -1;
    for (int j = 0; j < num_columns && entering < 0; ++j) {
      bool basic = false;
      for (int i = 0; i < rows; ++i)
        if (result.basis[i] == j) {
          basic = true;
          break;
        }
      if (basic) continue;
      column(j, col);
      double rc = 0.0;
      for (int r = 0; r < rows; ++r) rc -= duals[r] * col[r];
      if (rc < -pivot_tolerance) entering = j;
    }
    if (entering < 0) break;  // optimal

    column(entering, col);
    for (int i = 0; i < rows; ++i) {
      double d = 0.0;
      for (int r = 0; r < rows; ++r) d += binv[static_cast<std::size_t>(i) * rows + r] * col[r];
      direction[i] = d;
    }

    // Ratio test; ties resolved toward the smallest basic variable index.
    int leaving = -1;
    double best_ratio = 0.0;
    for (int i = 0; i < rows; ++i) {
      if (direction[i] <= pivot_tolerance) continue;
      const double ratio = result.values[i] / direction[i];
      if (leaving < 0 || ratio < best_ratio - 1e-15 ||
          (std::abs(ratio - best_ratio) <= 1e-15 && result.basis[i] < result.basis[leaving])) {
        leaving = i;
        best_ratio = ratio;
      }
    }
    if (leaving < 0)
      throw std::runtime_error("phase-1 simplex is unbounded; inputs are inconsistent");

    const double pivot = direction[leaving];
    for (int r = 0; r < rows; ++r) binv[static_cast<std::size_t>(leaving) * rows + r] /= pivot;
    result.values[leaving] /= pivot;
    for (int i = 0; i < rows; ++i) {
      if (i == leaving) continue;
      const double factor = direction[i];
      if (factor == 0.0) continue;
      for (int r = 0; r < rows; ++r)
        binv[static_cast<std::size_t>(i) * rows + r] -=
            factor * binv[static_cast<std::size_t>(leaving) * rows + r];
      result.values[i] -= factor * result.values[leaving];
    }
    result.basis[leaving] = entering;
    ++result.iterations;
  }
  if (result.iterations >= max_iterations)
    throw std::runtime_error("phase-1 simplex exceeded the iteration budget");

  result.infeasibility = 0.0;
  for (int i = 0; i < rows; ++i)
    if (result.basis[i] >= num_columns) result.infeasibility += std::max(0.0, result.values[i]);
  result.feasible = true;  // callers classify via infeasibility / residuals
  return result;
}

}  // namespace contextlab
