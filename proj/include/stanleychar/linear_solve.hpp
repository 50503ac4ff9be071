#pragma once

#include <cstddef>
#include <vector>

#include "stanleychar/numeric.hpp"

namespace stanleychar {

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

std::vector<Rational> operator*(const RationalMatrix& a, const std::vector<Rational>& x);

struct LinearSolution {
  /// False when A x = b has no solution; `solution` is then empty.
  bool consistent = false;
  std::size_t rank = 0;
  /// True when the solution is the only one (rank equals the column count).
  bool unique = false;
  /// A particular solution with free variables set to zero.
  std::vector<Rational> solution;
};

/// Solves A x = b exactly by Gauss-Jordan elimination over the rationals.
/// Inconsistency is reported, never approximated. Throws
/// std::invalid_argument if b does not have A.rows() entries.
LinearSolution solve_linear_exact(RationalMatrix a, std::vector<Rational> b);

}  // namespace stanleychar
