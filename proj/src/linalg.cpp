#include "acmv/linalg.hpp"

#include <cmath>
#include <cstdlib>

#include "acmv/errors.hpp"

namespace acmv {

std::vector<double> matvec(const Matrix& m, std::span<const double> x) {
  if (x.size() != m.cols) throw InvalidArgumentError("matvec: dimension mismatch");
  std::vector<double> y(m.rows, 0.0);
  for (std::size_t i = 0; i < m.rows; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < m.cols; ++j) s += m.at(i, j) * x[j];
    y[i] = s;
  }
  return y;
}

bool cholesky_lower(const Matrix& sym, Matrix& lower) {
  const std::size_t n = sym.rows;
  if (sym.cols != n) throw InvalidArgumentError("cholesky: matrix not square");
  lower = Matrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    double d = sym.at(j, j);
    for (std::size_t k = 0; k < j; ++k) d -= lower.at(j, k) * lower.at(j, k);
    if (!(d > 0.0) || !std::isfinite(d)) return false;
    const double ljj = std::sqrt(d);
    lower.at(j, j) = ljj;
    for (std::size_t i = j + 1; i < n; ++i) {
      double s = sym.at(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= lower.at(i, k) * lower.at(j, k);
      lower.at(i, j) = s / ljj;
    }
  }
  return true;
}

std::vector<double> solve_lower(const Matrix& lower, std::span<const double> b) {
  const std::size_t n = lower.rows;
  if (b.size() != n) throw InvalidArgumentError("solve_lower: dimension mismatch");
  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) {
    double s = b[i];
    for (std::size_t k = 0; k < i; ++k) s -= lower.at(i, k) * y[k];
    y[i] = s / lower.at(i, i);
  }
  return y;
}

std::vector<double> solve_lower_transpose(const Matrix& lower, std::span<const double> b) {
  const std::size_t n = lower.rows;
  if (b.size() != n) throw InvalidArgumentError("solve_lower_transpose: dimension mismatch");
  std::vector<double> x(n);
  for (std::size_t ii = n; ii-- > 0;) {
    double s = b[ii];
    for (std::size_t k = ii + 1; k < n; ++k) s -= lower.at(k, ii) * x[k];
    x[ii] = s / lower.at(ii, ii);
  }
  return x;
}

std::vector<double> solve_linear(Matrix a, std::vector<double> b) {
  const std::size_t n = a.rows;
  if (a.cols != n || b.size() != n)
    throw InvalidArgumentError("solve_linear: dimension mismatch");
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(a.at(r, col)) > std::abs(a.at(piv, col))) piv = r;
    if (std::abs(a.at(piv, col)) < 1e-12)
      throw NumericError("solve_linear: singular matrix");
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a.at(piv, j), a.at(col, j));
      std::swap(b[piv], b[col]);
    }
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = a.at(r, col) / a.at(col, col);
      if (f == 0.0) continue;
      for (std::size_t j = col; j < n; ++j) a.at(r, j) -= f * a.at(col, j);
      b[r] -= f * b[col];
    }
  }
  std::vector<double> x(n);
  for (std::size_t ii = n; ii-- > 0;) {
    double s = b[ii];
    for (std::size_t j = ii + 1; j < n; ++j) s -= a.at(ii, j) * x[j];
    x[ii] = s / a.at(ii, ii);
  }
  return x;
}

} // namespace acmv
