#include "stanleychar/linear_solve.hpp"

#include <stdexcept>
#include <utility>

namespace stanleychar {

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::vector<Rational> operator*(const RationalMatrix& a, const std::vector<Rational>& x) {
  if (x.size() != a.cols()) throw std::invalid_argument("matrix-vector size mismatch");
  std::vector<Rational> out(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (a(r, c) != 0) out[r] += a(r, c) * x[c];
  return out;
}

LinearSolution solve_linear_exact(RationalMatrix a, std::vector<Rational> b) {
  if (b.size() != a.rows()) throw std::invalid_argument("right-hand side has the wrong length");
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();

  std::vector<std::size_t> pivot_cols;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
    std::size_t found = pivot_row;
    while (found < rows && a(found, col) == 0) ++found;
    if (found == rows) continue;
    if (found != pivot_row) {
      for (std::size_t c = col; c < cols; ++c) std::swap(a(found, c), a(pivot_row, c));
      std::swap(b[found], b[pivot_row]);
    }
    const Rational inv = 1 / a(pivot_row, col);
    for (std::size_t c = col; c < cols; ++c) a(pivot_row, c) *= inv;
    b[pivot_row] *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pivot_row || a(r, col) == 0) continue;
      const Rational factor = a(r, col);
      for (std::size_t c = col; c < cols; ++c)
        if (a(pivot_row, c) != 0) a(r, c) -= factor * a(pivot_row, c);
      b[r] -= factor * b[pivot_row];
    }
    pivot_cols.push_back(col);
    ++pivot_row;
  }

  LinearSolution result;
  result.rank = pivot_cols.size();
  for (std::size_t r = result.rank; r < rows; ++r)
    if (b[r] != 0) return result;

  result.consistent = true;
  result.unique = result.rank == cols;
  result.solution.assign(cols, Rational(0));
  for (std::size_t i = 0; i < pivot_cols.size(); ++i) result.solution[pivot_cols[i]] = b[i];
  return result;
}

}  // namespace stanleychar
