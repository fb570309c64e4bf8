#include "nilrep/representation.hpp"

#include <string>

#include "nilrep/errors.hpp"

namespace nilrep {

Representation::Representation(std::shared_ptr<const LieAlgebra> algebra, std::size_t space_dim,
                               std::vector<Matrix> matrices)
    : algebra_(std::move(algebra)), space_dim_(space_dim), matrices_(std::move(matrices)) {
  if (matrices_.size() != algebra_->dim()) {
    throw InputError("representation has " + std::to_string(matrices_.size()) +
                     " matrices for an algebra of dimension " + std::to_string(algebra_->dim()));
  }
  for (const auto& m : matrices_) {
    if (m.rows() != space_dim_ || m.cols() != space_dim_)
      throw InputError("representation matrix is not " + std::to_string(space_dim_) + "x" +
                       std::to_string(space_dim_));
  }
}

Matrix Representation::image(const Vector& x) const {
  if (x.size() != matrices_.size())
    throw std::invalid_argument("image: coordinate length does not match algebra dimension");
  Matrix out(space_dim_, space_dim_);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (sgn(x[i]) != 0) out += matrices_[i] * x[i];
  }
  return out;
}

bool is_faithful(const Representation& rep) {
  if (rep.matrices().empty()) return true;
  std::vector<Vector> rows;
  for (const auto& m : rep.matrices()) rows.push_back(m.flatten());
  return rank(Matrix::from_rows(rows)) == rep.matrices().size();
}

RepresentationReport validate_representation(const Representation& rep) {
  RepresentationReport report;
  const auto& alg = rep.algebra();
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    for (std::size_t j = i + 1; j < alg.dim(); ++j) {
      if (commutator(rep.matrix(i), rep.matrix(j)) != rep.image(alg.bracket_basis(i, j)))
        report.homomorphism_failures.emplace_back(i, j);
    }
    if (!is_nilpotent(rep.matrix(i))) report.non_nilpotent.push_back(i);
  }
  report.faithful = is_faithful(rep);
  return report;
}

}  // namespace nilrep
