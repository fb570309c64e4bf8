#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "nilrep/bound_problem.hpp"
#include "nilrep/chain_decomposition.hpp"
#include "nilrep/closed_forms.hpp"
#include "nilrep/filtration.hpp"
#include "nilrep/io.hpp"

namespace nilrep {

struct P0Bound {
  std::size_t p0 = 0;
  BoundProblem problem;
  BoundSolution solution;
  RadicalExpr closed_first;
  std::optional<SecondBound> closed_second;  // p0 >= 2 only
};

struct LowerBoundReport {
  std::string algebra;
  std::size_t p = 0;                      // filtration depth
  std::vector<std::int64_t> filtration_dims;
  std::vector<P0Bound> per_p0;
  std::int64_t mu_nil_lower_bound = 0;
  std::size_t best_p0 = 0;
  std::size_t step = 0;                   // nilpotency step of the algebra
  std::size_t center_dim = 0;
  std::optional<SecondBound> theorem_value;  // step >= 2 only
  std::optional<std::pair<std::int64_t, std::string>> reference_mu;
};

struct ReportOptions {
  /// Applied to each problem before solving; the reproduction harness uses it
  /// to inject faults.
  std::function<BoundProblem(BoundProblem)> transform;
};

/// Solves the bound problem for every admissible p0 of the supplied (or
/// default) filtration and keeps the largest r0_min. Throws InputError for
/// non-nilpotent algebras and invalid filtrations.
LowerBoundReport lower_bound_report(std::shared_ptr<const LieAlgebra> alg,
                                    const std::optional<Filtration>& filt = std::nullopt,
                                    const ReportOptions& options = {});

Json report_to_json(const LowerBoundReport& r);
Json solution_to_json(const BoundProblem& prob, const BoundSolution& sol, const std::string& method);
Json decomposition_to_json(const DecompositionRun& run, std::size_t p0);
/// Structure summary: Jacobi status, series and center dims, default
/// filtration and admissible p0.
Json analysis_to_json(std::shared_ptr<const LieAlgebra> alg);

}  // namespace nilrep
