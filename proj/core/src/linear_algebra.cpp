#include "parhiggs/linear_algebra.hpp"

#include <stdexcept>

namespace parhiggs {

void Matrix::append_row(std::span<const GaussianRational> row) {
  if (rows_ == 0 && data_.empty()) cols_ = row.size();
  if (row.size() != cols_) throw std::invalid_argument("row width mismatch");
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

Vector Matrix::apply(std::span<const GaussianRational> x) const {
  if (x.size() != cols_) throw std::invalid_argument("vector length mismatch");
  Vector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      const auto& a = (*this)(r, c);
      if (!a.is_zero() && !x[c].is_zero()) out[r] += a * x[c];
    }
  }
  return out;
}

RowEchelon row_reduce(Matrix m) {
  RowEchelon out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(row, c), m(pivot, c));
    }
    GaussianRational inv = GaussianRational(1) / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      GaussianRational f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) {
        if (!m(row, c).is_zero()) m(r, c) -= f * m(row, c);
      }
    }
    out.pivot_columns.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m) { return row_reduce(m).pivot_columns.size(); }

std::vector<Vector> nullspace(const Matrix& m) {
  RowEchelon e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivot_columns) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols());
    v[free] = GaussianRational(1);
    for (std::size_t r = 0; r < e.pivot_columns.size(); ++r) v[e.pivot_columns[r]] = -e.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<LinearSolution> solve(const Matrix& m, std::span<const GaussianRational> rhs) {
  if (rhs.size() != m.rows()) throw std::invalid_argument("right-hand side length mismatch");
  Matrix augmented(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) augmented(r, c) = m(r, c);
    augmented(r, m.cols()) = rhs[r];
  }
  RowEchelon e = row_reduce(std::move(augmented));
  if (!e.pivot_columns.empty() && e.pivot_columns.back() == m.cols()) return std::nullopt;
  LinearSolution out;
  out.particular.assign(m.cols(), GaussianRational());
  for (std::size_t r = 0; r < e.pivot_columns.size(); ++r) out.particular[e.pivot_columns[r]] = e.reduced(r, m.cols());
  out.kernel = nullspace(m);
  return out;
}

}  // namespace parhiggs
