#include "nilrep/subspace.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace nilrep {

namespace {

void require_same_ambient(const Subspace& a, const Subspace& b, const char* what) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw std::invalid_argument(std::string(what) + ": ambient dimension mismatch (" +
                                std::to_string(a.ambient_dim()) + " vs " +
                                std::to_string(b.ambient_dim()) + ")");
  }
}

}  // namespace

Subspace::Subspace(std::size_t ambient_dim) : ambient_dim_(ambient_dim), basis_(0, ambient_dim) {}

Subspace Subspace::full(std::size_t ambient_dim) {
  Subspace s(ambient_dim);
  s.basis_ = Matrix::identity(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) s.pivots_.push_back(i);
  return s;
}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vector>& vectors) {
  Matrix m(vectors.size(), ambient_dim);
  for (std::size_t r = 0; r < vectors.size(); ++r) {
    if (vectors[r].size() != ambient_dim)
      throw std::invalid_argument("span: vector length does not match ambient dimension");
    for (std::size_t c = 0; c < ambient_dim; ++c) m(r, c) = vectors[r][c];
  }
  return row_space(m);
}

Subspace Subspace::row_space(const Matrix& m) {
  Subspace s(m.cols());
  if (m.rows() == 0) return s;
  auto red = rref(m);
  s.basis_ = red.reduced.block(0, red.rank, 0, m.cols());
  s.pivots_ = std::move(red.pivot_columns);
  return s;
}

std::vector<Vector> Subspace::basis_vectors() const {
  std::vector<Vector> out;
  out.reserve(dim());
  for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_.row_vector(i));
  return out;
}

std::optional<Vector> Subspace::coordinates(const Vector& v) const {
  if (v.size() != ambient_dim_)
    throw std::invalid_argument("coordinates: vector length does not match ambient dimension");
  Vector coeffs(dim());
  Vector residual = v;
  for (std::size_t i = 0; i < dim(); ++i) {
    coeffs[i] = v[pivots_[i]];
    if (sgn(coeffs[i]) == 0) continue;
    for (std::size_t c = 0; c < ambient_dim_; ++c) {
      if (sgn(basis_(i, c)) != 0) residual[c] -= coeffs[i] * basis_(i, c);
    }
  }
  if (!nilrep::is_zero(residual)) return std::nullopt;
  return coeffs;
}

bool Subspace::contains(const Vector& v) const { return coordinates(v).has_value(); }

bool Subspace::contains(const Subspace& other) const {
  require_same_ambient(*this, other, "contains");
  if (other.dim() > dim()) return false;
  for (std::size_t i = 0; i < other.dim(); ++i) {
    if (!contains(other.basis_vector(i))) return false;
  }
  return true;
}

Subspace kernel_basis(const Matrix& m) {
  const auto red = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : red.pivot_columns) is_pivot[c] = true;
  std::vector<Vector> vectors;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector x(m.cols());
    x[f] = 1;
    for (std::size_t r = 0; r < red.rank; ++r) x[red.pivot_columns[r]] = -red.reduced(r, f);
    vectors.push_back(std::move(x));
  }
  return Subspace::span(m.cols(), vectors);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b, "intersect");
  const std::size_t n = a.ambient_dim();
  if (a.is_zero() || b.is_zero()) return Subspace(n);
  // Solve sum_i x_i a_i - sum_j y_j b_j = 0 and map (x, y) to sum_i x_i a_i.
  Matrix m(n, a.dim() + b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t r = 0; r < n; ++r) m(r, i) = a.basis()(i, r);
  for (std::size_t j = 0; j < b.dim(); ++j)
    for (std::size_t r = 0; r < n; ++r) m(r, a.dim() + j) = -b.basis()(j, r);
  const Subspace relations = kernel_basis(m);
  std::vector<Vector> vectors;
  for (std::size_t k = 0; k < relations.dim(); ++k) {
    Vector x(n);
    for (std::size_t i = 0; i < a.dim(); ++i) axpy(x, relations.basis()(k, i), a.basis_vector(i));
    vectors.push_back(std::move(x));
  }
  return Subspace::span(n, vectors);
}

Subspace sum(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b, "sum");
  auto vectors = a.basis_vectors();
  for (auto& v : b.basis_vectors()) vectors.push_back(std::move(v));
  return Subspace::span(a.ambient_dim(), vectors);
}

Subspace complement_extending(const Subspace& ambient, const Subspace& inner,
                              const Subspace& must_contain) {
  require_same_ambient(ambient, inner, "complement_extending");
  require_same_ambient(ambient, must_contain, "complement_extending");
  if (!ambient.contains(inner))
    throw std::invalid_argument("complement_extending: inner is not contained in ambient");
  if (!ambient.contains(must_contain))
    throw std::invalid_argument("complement_extending: must_contain is not contained in ambient");
  if (!intersect(must_contain, inner).is_zero())
    throw std::invalid_argument("complement_extending: must_contain meets inner nontrivially");

  EchelonBuilder builder(ambient.ambient_dim());
  std::vector<Vector> chosen = must_contain.basis_vectors();
  for (const auto& v : chosen) builder.insert(v);
  for (const auto& v : inner.basis_vectors()) builder.insert(v);
  for (std::size_t i = 0; i < ambient.dim(); ++i) {
    auto row = ambient.basis_vector(i);
    if (builder.insert(row)) chosen.push_back(std::move(row));
  }
  return Subspace::span(ambient.ambient_dim(), chosen);
}

EchelonBuilder::EchelonBuilder(std::size_t ambient_dim) : ambient_dim_(ambient_dim) {}

Vector EchelonBuilder::reduce(Vector v) const {
  if (v.size() != ambient_dim_)
    throw std::invalid_argument("EchelonBuilder: vector length does not match ambient dimension");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Rational f = v[pivots_[i]];
    if (sgn(f) == 0) continue;
    for (std::size_t c = 0; c < ambient_dim_; ++c) {
      if (sgn(rows_[i][c]) != 0) v[c] -= f * rows_[i][c];
    }
  }
  return v;
}

bool EchelonBuilder::independent(const Vector& v) const { return !is_zero(reduce(v)); }

bool EchelonBuilder::insert(const Vector& v) {
  Vector r = reduce(v);
  std::size_t p = 0;
  while (p < ambient_dim_ && sgn(r[p]) == 0) ++p;
  if (p == ambient_dim_) return false;
  const Rational inv = 1 / r[p];
  for (auto& x : r) x *= inv;
  rows_.push_back(std::move(r));
  pivots_.push_back(p);
  return true;
}

Subspace EchelonBuilder::subspace() const { return Subspace::span(ambient_dim_, rows_); }

CoordinateSystem::CoordinateSystem(std::size_t ambient_dim, std::vector<Vector> basis)
    : ambient_dim_(ambient_dim), basis_(std::move(basis)) {
  const std::size_t d = basis_.size();
  if (d == 0) return;
  for (const auto& b : basis_) {
    if (b.size() != ambient_dim_)
      throw std::invalid_argument("CoordinateSystem: vector length does not match ambient dimension");
  }
  // Pivot columns of the basis-as-rows matrix index an invertible d x d minor.
  auto red = rref(Matrix::from_rows(basis_));
  if (red.rank < d) throw std::invalid_argument("CoordinateSystem: basis is linearly dependent");
  rows_ = red.pivot_columns;
  Matrix minor(d, d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) minor(r, c) = basis_[c][rows_[r]];
  minor_inverse_ = inverse(minor);
}

std::optional<Vector> CoordinateSystem::coordinates(const Vector& v) const {
  if (v.size() != ambient_dim_)
    throw std::invalid_argument("CoordinateSystem: vector length does not match ambient dimension");
  const std::size_t d = basis_.size();
  Vector restricted(d);
  for (std::size_t r = 0; r < d; ++r) restricted[r] = v[rows_[r]];
  Vector coeffs = d == 0 ? Vector{} : minor_inverse_.apply(restricted);
  Vector rebuilt(ambient_dim_);
  for (std::size_t i = 0; i < d; ++i) axpy(rebuilt, coeffs[i], basis_[i]);
  if (rebuilt != v) return std::nullopt;
  return coeffs;
}

}  // namespace nilrep
