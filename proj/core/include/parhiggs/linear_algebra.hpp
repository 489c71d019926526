#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "parhiggs/gaussian_rational.hpp"

namespace parhiggs {

using Vector = std::vector<GaussianRational>;

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  GaussianRational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const GaussianRational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  // Appends a row of width cols() (sets cols() on the first row of an empty matrix).
  void append_row(std::span<const GaussianRational> row);
  Vector apply(std::span<const GaussianRational> x) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<GaussianRational> data_;
};

struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivot_columns;
};

RowEchelon row_reduce(Matrix m);
std::size_t rank(const Matrix& m);
// Basis of {x : m x = 0}, one vector per free column, in column order.
std::vector<Vector> nullspace(const Matrix& m);

struct LinearSolution {
  Vector particular;
  std::vector<Vector> kernel;
};

// Solves m x = rhs; empty when inconsistent.
std::optional<LinearSolution> solve(const Matrix& m, std::span<const GaussianRational> rhs);

}  // namespace parhiggs
