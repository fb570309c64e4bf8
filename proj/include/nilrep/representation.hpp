#pragma once

#include <cstddef>
#include <memory>
#include <utility>
#include <vector>

#include "nilrep/lie_algebra.hpp"

namespace nilrep {

/// Linear map x_i -> rho(x_i) in gl(V), one dimV x dimV matrix per basis element.
class Representation {
 public:
  /// Throws InputError when the matrix count or shapes do not match.
  Representation(std::shared_ptr<const LieAlgebra> algebra, std::size_t space_dim,
                 std::vector<Matrix> matrices);

  const LieAlgebra& algebra() const { return *algebra_; }
  const std::shared_ptr<const LieAlgebra>& algebra_ptr() const { return algebra_; }
  std::size_t space_dim() const { return space_dim_; }
  const std::vector<Matrix>& matrices() const { return matrices_; }
  const Matrix& matrix(std::size_t i) const { return matrices_[i]; }

  /// rho(x) for algebra coordinates x.
  Matrix image(const Vector& x) const;

 private:
  std::shared_ptr<const LieAlgebra> algebra_;
  std::size_t space_dim_;
  std::vector<Matrix> matrices_;
};

struct RepresentationReport {
  std::vector<std::pair<std::size_t, std::size_t>> homomorphism_failures;  // 0-based (i, j)
  std::vector<std::size_t> non_nilpotent;                                  // 0-based basis indices
  bool faithful = true;
  bool ok() const { return homomorphism_failures.empty() && non_nilpotent.empty() && faithful; }
};

/// Homomorphism on basis pairs, nilpotency of each rho(x_i), and injectivity
/// of rho as a linear map.
RepresentationReport validate_representation(const Representation& rep);

bool is_faithful(const Representation& rep);

}  // namespace nilrep
