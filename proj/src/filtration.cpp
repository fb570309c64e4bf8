#include "nilrep/filtration.hpp"

#include <utility>

#include "nilrep/errors.hpp"

namespace nilrep {

Filtration::Filtration(std::shared_ptr<const LieAlgebra> algebra, std::vector<Subspace> chain,
                       std::size_t p0)
    : algebra_(std::move(algebra)), chain_(std::move(chain)), p0_(p0) {
  while (!chain_.empty() && chain_.back().is_zero()) chain_.pop_back();
}

Subspace Filtration::level(std::size_t k) const {
  if (k >= 1 && k <= chain_.size()) return chain_[k - 1];
  return Subspace(algebra_->dim());
}

std::vector<std::size_t> Filtration::dims() const {
  std::vector<std::size_t> out;
  for (const auto& s : chain_) out.push_back(s.dim());
  return out;
}

FiltrationReport validate_filtration(const Filtration& f) {
  FiltrationReport report;
  const auto& alg = f.algebra();
  const std::size_t p = f.depth();
  auto add = [&](std::string kind, std::size_t i, std::size_t j, std::string detail) {
    report.issues.push_back({std::move(kind), i, j, std::move(detail)});
  };
  if (p == 0) {
    add("empty", 0, 0, "filtration has no nonzero level");
    return report;
  }
  for (std::size_t k = 1; k <= p; ++k) {
    if (f.level(k).ambient_dim() != alg.dim()) {
      add("ambient", k, 0, "level " + std::to_string(k) + " lives in the wrong ambient space");
      return report;
    }
  }
  if (f.level(1).dim() != alg.dim()) add("top", 1, 0, "n_1 is not the whole algebra");
  for (std::size_t k = 1; k < p; ++k) {
    if (!f.level(k).contains(f.level(k + 1)))
      add("inclusion", k, k + 1, "n_" + std::to_string(k + 1) + " is not contained in n_" +
                                     std::to_string(k));
  }
  for (std::size_t i = 1; i <= p; ++i) {
    for (std::size_t j = i; j <= p; ++j) {
      const Subspace br = bracket_span(alg, f.level(i), f.level(j));
      if (!f.level(i + j).contains(br)) {
        add("bracket", i, j,
            "[n_" + std::to_string(i) + ", n_" + std::to_string(j) + "] is not contained in n_" +
                std::to_string(i + j));
      }
    }
  }
  if (f.p0() < 1 || f.p0() > p) {
    add("p0_range", f.p0(), 0, "p0 must lie in 1.." + std::to_string(p));
  } else if (!center(alg).contains(f.level(f.p0()))) {
    add("p0_central", f.p0(), 0, "n_" + std::to_string(f.p0()) + " is not central");
  }
  return report;
}

Filtration default_filtration(std::shared_ptr<const LieAlgebra> algebra) {
  const auto series = lower_central_series(*algebra);
  if (!series.nilpotent) throw InputError("algebra '" + algebra->name() + "' is not nilpotent");
  const Subspace z = center(*algebra);
  std::vector<Subspace> chain;
  for (const auto& term : series.terms) chain.push_back(sum(term, z));
  const std::size_t p = chain.size();
  return Filtration(std::move(algebra), std::move(chain), p);
}

std::vector<std::size_t> admissible_p0_set(const Filtration& f) {
  const Subspace z = center(f.algebra());
  std::vector<std::size_t> out;
  for (std::size_t k = 1; k <= f.depth(); ++k) {
    if (z.contains(f.level(k))) out.push_back(k);
  }
  return out;
}

}  // namespace nilrep
