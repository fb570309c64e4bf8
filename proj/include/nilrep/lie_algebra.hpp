#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "nilrep/subspace.hpp"

namespace nilrep {

/// One nonzero structure constant: [x_i, x_j] has coefficient `value` on x_k.
/// Indices are 0-based; only i < j is stored.
struct StructureConstant {
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t k = 0;
  Rational value;
};

/// Term of a bracket expansion: coefficient on basis element `index`.
struct BracketTerm {
  std::size_t index = 0;
  Rational coeff;
  friend bool operator==(const BracketTerm&, const BracketTerm&) = default;
};

/// Finite-dimensional Lie algebra over Q given by structure constants.
/// Antisymmetry is built into storage; the Jacobi identity is checked by
/// validate(), not enforced at construction.
class LieAlgebra {
 public:
  /// Throws InputError on out-of-range indices or i >= j. Repeated entries for
  /// the same (i, j, k) are summed.
  LieAlgebra(std::string name, std::vector<std::string> basis_names,
             const std::vector<StructureConstant>& constants);

  /// Abelian algebra with generated basis names x1..xn.
  static LieAlgebra abelian(std::string name, std::size_t dim);

  const std::string& name() const { return name_; }
  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& basis_names() const { return basis_names_; }

  /// Sparse expansion of [x_i, x_j] for any ordered pair.
  const std::vector<BracketTerm>& bracket_terms(std::size_t i, std::size_t j) const {
    return table_[i * dim_ + j];
  }
  /// All nonzero constants with i < j, ordered by (i, j, k).
  std::vector<StructureConstant> structure_constants() const;

  Vector bracket(const Vector& u, const Vector& v) const;
  Vector bracket_basis(std::size_t i, std::size_t j) const;

  bool is_abelian() const;

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.dim_ == b.dim_ && a.basis_names_ == b.basis_names_ && a.table_ == b.table_;
  }

 private:
  std::string name_;
  std::size_t dim_;
  std::vector<std::string> basis_names_;
  std::vector<std::vector<BracketTerm>> table_;  // dim * dim, antisymmetric
};

struct JacobiViolation {
  std::size_t i = 0, j = 0, k = 0;  // 0-based, i < j < k
  Vector residual;                  // [x_i,[x_j,x_k]] + cyclic
};

struct AlgebraValidation {
  std::vector<JacobiViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks the Jacobi identity on every basis triple i < j < k.
AlgebraValidation validate(const LieAlgebra& alg);
/// Single-threaded reference for validate().
AlgebraValidation validate_serial(const LieAlgebra& alg);

/// [A, B] as a subspace of the algebra.
Subspace bracket_span(const LieAlgebra& alg, const Subspace& a, const Subspace& b);

struct CentralSeries {
  std::vector<Subspace> terms;  // C^1 = n, C^{k+1} = [n, C^k], zero tail trimmed
  bool nilpotent = true;        // false when the series stalls at a nonzero term
  std::size_t step() const { return terms.size(); }
};

CentralSeries lower_central_series(const LieAlgebra& alg);

/// {x : [x, y] = 0 for all y}, the kernel of the stacked adjoint map.
Subspace center(const LieAlgebra& alg);

}  // namespace nilrep
