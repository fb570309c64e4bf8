#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "nilrep/lie_algebra.hpp"

namespace nilrep {

/// Decreasing chain n = n_1 ⊇ n_2 ⊇ ... ⊇ n_p ≠ 0 with [n_i, n_j] ⊆ n_{i+j}
/// (n_m = 0 for m > p), plus a marked central level p0. Levels are 1-based.
class Filtration {
 public:
  /// Trailing zero levels are stripped and p recomputed. Nothing else is
  /// checked here; see validate_filtration().
  Filtration(std::shared_ptr<const LieAlgebra> algebra, std::vector<Subspace> chain,
             std::size_t p0);

  const LieAlgebra& algebra() const { return *algebra_; }
  const std::shared_ptr<const LieAlgebra>& algebra_ptr() const { return algebra_; }
  std::size_t depth() const { return chain_.size(); }
  std::size_t p0() const { return p0_; }
  /// n_k for 1 <= k <= p, and the zero subspace beyond p.
  Subspace level(std::size_t k) const;
  const std::vector<Subspace>& chain() const { return chain_; }
  std::vector<std::size_t> dims() const;

 private:
  std::shared_ptr<const LieAlgebra> algebra_;
  std::vector<Subspace> chain_;
  std::size_t p0_;
};

struct FiltrationIssue {
  std::string kind;  // "ambient", "top", "inclusion", "bracket", "p0_range", "p0_central", "empty"
  std::size_t i = 0;
  std::size_t j = 0;
  std::string detail;
};

struct FiltrationReport {
  std::vector<FiltrationIssue> issues;
  bool ok() const { return issues.empty(); }
};

FiltrationReport validate_filtration(const Filtration& f);

/// n_k = C^k + z for k = 1..p with p the nilpotency step, and p0 = p.
/// Throws InputError for non-nilpotent algebras.
Filtration default_filtration(std::shared_ptr<const LieAlgebra> algebra);

/// Every k in 1..p with n_k contained in the center.
std::vector<std::size_t> admissible_p0_set(const Filtration& f);

}  // namespace nilrep
