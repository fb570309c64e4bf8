#include "nilrep/lie_algebra.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "nilrep/errors.hpp"

namespace nilrep {

LieAlgebra::LieAlgebra(std::string name, std::vector<std::string> basis_names,
                       const std::vector<StructureConstant>& constants)
    : name_(std::move(name)),
      dim_(basis_names.size()),
      basis_names_(std::move(basis_names)),
      table_(dim_ * dim_) {
  std::vector<Vector> dense(dim_ * dim_);
  for (const auto& sc : constants) {
    if (sc.i >= dim_ || sc.j >= dim_ || sc.k >= dim_) {
      throw InputError("structure constant index out of range: (" + std::to_string(sc.i + 1) +
                       ", " + std::to_string(sc.j + 1) + ", " + std::to_string(sc.k + 1) +
                       ") for dimension " + std::to_string(dim_));
    }
    if (sc.i >= sc.j) {
      throw InputError("structure constants must be given with i < j, got (" +
                       std::to_string(sc.i + 1) + ", " + std::to_string(sc.j + 1) + ")");
    }
    auto& v = dense[sc.i * dim_ + sc.j];
    if (v.empty()) v.resize(dim_);
    v[sc.k] += sc.value;
  }
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = i + 1; j < dim_; ++j) {
      const auto& v = dense[i * dim_ + j];
      if (v.empty()) continue;
      for (std::size_t k = 0; k < dim_; ++k) {
        if (sgn(v[k]) == 0) continue;
        table_[i * dim_ + j].push_back({k, v[k]});
        table_[j * dim_ + i].push_back({k, -v[k]});
      }
    }
  }
}

LieAlgebra LieAlgebra::abelian(std::string name, std::size_t dim) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < dim; ++i) names.push_back("x" + std::to_string(i + 1));
  return LieAlgebra(std::move(name), std::move(names), {});
}

std::vector<StructureConstant> LieAlgebra::structure_constants() const {
  std::vector<StructureConstant> out;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j)
      for (const auto& t : bracket_terms(i, j)) out.push_back({i, j, t.index, t.coeff});
  return out;
}

Vector LieAlgebra::bracket(const Vector& u, const Vector& v) const {
  if (u.size() != dim_ || v.size() != dim_)
    throw std::invalid_argument("bracket: coordinate length does not match algebra dimension");
  Vector out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (sgn(u[i]) == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (i == j || sgn(v[j]) == 0) continue;
      const auto& terms = bracket_terms(i, j);
      if (terms.empty()) continue;
      const Rational coeff = u[i] * v[j];
      for (const auto& t : terms) out[t.index] += coeff * t.coeff;
    }
  }
  return out;
}

Vector LieAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
  Vector out(dim_);
  for (const auto& t : bracket_terms(i, j)) out[t.index] = t.coeff;
  return out;
}

bool LieAlgebra::is_abelian() const {
  return std::all_of(table_.begin(), table_.end(), [](const auto& t) { return t.empty(); });
}

namespace {

// [x_i, v] for a coordinate vector v.
Vector ad_basis(const LieAlgebra& alg, std::size_t i, const Vector& v) {
  Vector out(alg.dim());
  for (std::size_t m = 0; m < alg.dim(); ++m) {
    if (sgn(v[m]) == 0) continue;
    for (const auto& t : alg.bracket_terms(i, m)) out[t.index] += v[m] * t.coeff;
  }
  return out;
}

AlgebraValidation jacobi_scan(const LieAlgebra& alg, bool parallel) {
  const std::size_t n = alg.dim();
  // Violations per i, concatenated in order afterwards.
  std::vector<std::vector<JacobiViolation>> per_i(n);
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (std::ptrdiff_t si = 0; si < static_cast<std::ptrdiff_t>(n); ++si) {
    const auto i = static_cast<std::size_t>(si);
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        Vector sum = ad_basis(alg, i, alg.bracket_basis(j, k));
        const Vector b = ad_basis(alg, j, alg.bracket_basis(k, i));
        const Vector c = ad_basis(alg, k, alg.bracket_basis(i, j));
        for (std::size_t m = 0; m < n; ++m) sum[m] += b[m] + c[m];
        if (!is_zero(sum)) per_i[i].push_back({i, j, k, std::move(sum)});
      }
    }
  }
  AlgebraValidation out;
  for (auto& list : per_i)
    for (auto& v : list) out.violations.push_back(std::move(v));
  return out;
}

}  // namespace

AlgebraValidation validate(const LieAlgebra& alg) { return jacobi_scan(alg, true); }

AlgebraValidation validate_serial(const LieAlgebra& alg) { return jacobi_scan(alg, false); }

Subspace bracket_span(const LieAlgebra& alg, const Subspace& a, const Subspace& b) {
  EchelonBuilder builder(alg.dim());
  const auto av = a.basis_vectors();
  const auto bv = b.basis_vectors();
  for (const auto& x : av)
    for (const auto& y : bv) builder.insert(alg.bracket(x, y));
  return builder.subspace();
}

CentralSeries lower_central_series(const LieAlgebra& alg) {
  CentralSeries out;
  Subspace current = Subspace::full(alg.dim());
  const Subspace whole = current;
  while (!current.is_zero()) {
    out.terms.push_back(current);
    Subspace next = bracket_span(alg, whole, current);
    if (next == current) {
      out.nilpotent = false;
      break;
    }
    current = std::move(next);
  }
  return out;
}

Subspace center(const LieAlgebra& alg) {
  const std::size_t n = alg.dim();
  // Row (j, k): sum_i x_i c_{ij}^k = 0.
  Matrix stacked(n * n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& t : alg.bracket_terms(i, j)) stacked(j * n + t.index, i) += t.coeff;
  return kernel_basis(stacked);
}

}  // namespace nilrep
