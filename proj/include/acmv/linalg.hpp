#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace acmv {

// Dense row-major matrix. Sized for this project's needs (kernel matrices up
// to the sample budget, MLP weight blocks), not a general linear algebra type.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data; // row-major, rows*cols

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c, double fill = 0.0)
      : rows(r), cols(c), data(r * c, fill) {}

  double& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  double at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

std::vector<double> matvec(const Matrix& m, std::span<const double> x);

// Lower-triangular Cholesky factor of a symmetric positive-definite matrix.
// Returns false (leaving `lower` unspecified) when a pivot is non-positive or
// non-finite.
bool cholesky_lower(const Matrix& sym, Matrix& lower);

// Solve L y = b (forward) and L^T x = b (backward) for the lower factor L.
std::vector<double> solve_lower(const Matrix& lower, std::span<const double> b);
std::vector<double> solve_lower_transpose(const Matrix& lower, std::span<const double> b);

// Gaussian elimination with partial pivoting; throws NumericError on a
// (near-)singular system.
std::vector<double> solve_linear(Matrix a, std::vector<double> b);

} // namespace acmv
