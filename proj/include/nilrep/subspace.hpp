#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "nilrep/matrix.hpp"

namespace nilrep {

/// Linear subspace of k^n held in canonical reduced row-echelon form, so
/// equal subspaces compare equal entry by entry.
class Subspace {
 public:
  /// The zero subspace of k^ambient_dim.
  explicit Subspace(std::size_t ambient_dim = 0);

  static Subspace full(std::size_t ambient_dim);
  static Subspace span(std::size_t ambient_dim, const std::vector<Vector>& vectors);
  /// Span of the rows of m.
  static Subspace row_space(const Matrix& m);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }

  /// Canonical basis, one vector per row.
  const Matrix& basis() const { return basis_; }
  Vector basis_vector(std::size_t i) const { return basis_.row_vector(i); }
  std::vector<Vector> basis_vectors() const;
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;

  /// Coefficients of v against basis(); nullopt when v is outside the span.
  std::optional<Vector> coordinates(const Vector& v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) = default;

 private:
  std::size_t ambient_dim_;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// {x : m x = 0}; ambient dimension is cols(m).
Subspace kernel_basis(const Matrix& m);

Subspace intersect(const Subspace& a, const Subspace& b);
Subspace sum(const Subspace& a, const Subspace& b);

/// A complement C of `inner` inside `ambient` that contains `must_contain`.
/// The basis of must_contain is extended pivot-greedily by rows of ambient's
/// canonical basis. Throws std::invalid_argument naming the violated
/// precondition (inner or must_contain outside ambient, or
/// must_contain meeting inner).
Subspace complement_extending(const Subspace& ambient, const Subspace& inner,
                              const Subspace& must_contain);

/// Incrementally grown echelon set; answers "does this vector enlarge the
/// span" without recomputing a full rref each time.
class EchelonBuilder {
 public:
  explicit EchelonBuilder(std::size_t ambient_dim);

  /// Adds v when it is independent of what is already held; returns whether
  /// it was added.
  bool insert(const Vector& v);
  bool independent(const Vector& v) const;
  std::size_t rank() const { return rows_.size(); }
  Subspace subspace() const;

 private:
  Vector reduce(Vector v) const;

  std::size_t ambient_dim_;
  std::vector<Vector> rows_;          // each normalized at its pivot
  std::vector<std::size_t> pivots_;
};

/// Coordinates against a fixed (not necessarily canonical) linearly
/// independent list of vectors. Builds a left inverse once so repeated
/// queries cost O(n * d).
class CoordinateSystem {
 public:
  /// Throws std::invalid_argument when the vectors are dependent.
  CoordinateSystem(std::size_t ambient_dim, std::vector<Vector> basis);

  std::size_t size() const { return basis_.size(); }
  const std::vector<Vector>& basis() const { return basis_; }
  std::optional<Vector> coordinates(const Vector& v) const;

 private:
  std::size_t ambient_dim_;
  std::vector<Vector> basis_;
  std::vector<std::size_t> rows_;  // ambient coordinates forming an invertible minor
  Matrix minor_inverse_;
};

}  // namespace nilrep
