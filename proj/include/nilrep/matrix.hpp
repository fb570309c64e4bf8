#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "nilrep/rational.hpp"

namespace nilrep {

/// Dense row-major matrix of rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows);
  static Matrix from_columns(std::size_t rows, const std::vector<Vector>& cols);
  /// Single-entry matrix E_{row,col} (0-based).
  static Matrix unit(std::size_t rows, std::size_t cols, std::size_t row,
                     std::size_t col);
  /// Inverse of flatten(): a rows x cols matrix from a row-major vector.
  static Matrix unflatten(std::size_t rows, std::size_t cols, const Vector& v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<const Rational> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  Vector row_vector(std::size_t r) const;
  Vector column(std::size_t c) const;

  /// Row-major entries; doubles as the coordinate vector of an operator in End(V).
  const Vector& flatten() const { return data_; }

  bool is_zero() const;
  Matrix transpose() const;
  Vector apply(const Vector& v) const;
  /// Rows [r0, r1) x columns [c0, c1).
  Matrix block(std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) const;

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(const Rational& s);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Rational& s) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Vector data_;
};

/// a*b - b*a
Matrix commutator(const Matrix& a, const Matrix& b);

/// True when m^n = 0 for n = rows(m).
bool is_nilpotent(const Matrix& m);

struct RrefResult {
  Matrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;  // 0-based, strictly increasing
};

/// Reduced row-echelon form by Gauss-Jordan elimination.
RrefResult rref(Matrix m);

std::size_t rank(const Matrix& m);

/// Throws InputError when m is not square or singular.
Matrix inverse(const Matrix& m);

/// True when the operators share a complete flag 0 = V_0 < V_1 < ... = V with
/// X(V_{i+1}) in V_i; equivalently every element of their span (and of the
/// associative algebra they generate) is nilpotent. `dim` is dim V.
bool has_common_flag(std::span<const Matrix> operators, std::size_t dim);

}  // namespace nilrep
