#include "nilrep/matrix.hpp"

#include <stdexcept>
#include <utility>

#include "nilrep/errors.hpp"
#include "nilrep/subspace.hpp"

namespace nilrep {

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows) {
  if (rows.empty()) return {};
  Matrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw std::invalid_argument("ragged rows");
    for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<Vector>& cols) {
  Matrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw std::invalid_argument("ragged columns");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Matrix Matrix::unit(std::size_t rows, std::size_t cols, std::size_t row,
                    std::size_t col) {
  Matrix m(rows, cols);
  m(row, col) = 1;
  return m;
}

Matrix Matrix::unflatten(std::size_t rows, std::size_t cols, const Vector& v) {
  if (v.size() != rows * cols) throw std::invalid_argument("unflatten: size mismatch");
  Matrix m(rows, cols);
  m.data_ = v;
  return m;
}

Vector Matrix::row_vector(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

bool Matrix::is_zero() const { return nilrep::is_zero(data_); }

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("apply: length mismatch");
  Vector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Rational acc;
    for (std::size_t c = 0; c < cols_; ++c) {
      const auto& a = (*this)(r, c);
      if (sgn(a) != 0 && sgn(v[c]) != 0) acc += a * v[c];
    }
    out[r] = std::move(acc);
  }
  return out;
}

Matrix Matrix::block(std::size_t r0, std::size_t r1, std::size_t c0,
                     std::size_t c1) const {
  Matrix b(r1 - r0, c1 - c0);
  for (std::size_t r = r0; r < r1; ++r)
    for (std::size_t c = c0; c < c1; ++c) b(r - r0, c - c0) = (*this)(r, c);
  return b;
}

Matrix& Matrix::operator+=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw std::invalid_argument("matrix sum: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw std::invalid_argument("matrix difference: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(const Rational& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
  Matrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const auto& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const auto& bkj = b(k, j);
        if (sgn(bkj) != 0) out(i, j) += aik * bkj;
      }
    }
  }
  return out;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

bool is_nilpotent(const Matrix& m) {
  if (m.rows() != m.cols()) return false;
  Matrix power = m;
  for (std::size_t i = 1; i < m.rows() && !power.is_zero(); ++i) power = power * m;
  return power.is_zero();
}

RrefResult rref(Matrix m) {
  RrefResult out;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
    std::size_t pivot = lead_row;
    while (pivot < m.rows() && sgn(m(pivot, c)) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != lead_row) {
      for (std::size_t j = 0; j < m.cols(); ++j) swap(m(pivot, j), m(lead_row, j));
    }
    const Rational inv = 1 / m(lead_row, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(lead_row, j) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row || sgn(m(r, c)) == 0) continue;
      const Rational factor = m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (sgn(m(lead_row, j)) != 0) m(r, j) -= factor * m(lead_row, j);
      }
    }
    out.pivot_columns.push_back(c);
    ++lead_row;
  }
  out.rank = lead_row;
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

Matrix inverse(const Matrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw InputError("inverse of a non-square matrix");
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  auto red = rref(std::move(aug));
  if (red.rank < n || (n > 0 && red.pivot_columns[n - 1] != n - 1))
    throw InputError("inverse of a singular matrix");
  return red.reduced.block(0, n, n, 2 * n);
}

bool has_common_flag(std::span<const Matrix> operators, std::size_t dim) {
  // V_{i+1} = {x : X x in V_i for every X}; succeed once V_i = V.
  Subspace current(dim);
  while (current.dim() < dim) {
    // Rows of `cut` define V_i as a kernel.
    const Matrix cut = Matrix::from_rows(kernel_basis(current.basis()).basis_vectors());
    std::vector<Vector> stacked;
    for (const auto& op : operators) {
      const Matrix projected = cut * op;
      for (std::size_t r = 0; r < projected.rows(); ++r) stacked.push_back(projected.row_vector(r));
    }
    Subspace next = stacked.empty() ? Subspace::full(dim) : kernel_basis(Matrix::from_rows(stacked));
    if (next.dim() <= current.dim()) return false;
    current = std::move(next);
  }
  return true;
}

}  // namespace nilrep
