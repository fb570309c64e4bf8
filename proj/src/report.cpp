#include "nilrep/report.hpp"

#include <algorithm>
#include <utility>

#include "nilrep/errors.hpp"
#include "nilrep/families.hpp"

namespace nilrep {

LowerBoundReport lower_bound_report(std::shared_ptr<const LieAlgebra> alg,
                                    const std::optional<Filtration>& filt,
                                    const ReportOptions& options) {
  const auto series = lower_central_series(*alg);
  if (!series.nilpotent) throw InputError("algebra '" + alg->name() + "' is not nilpotent");
  const Filtration f = filt ? *filt : default_filtration(alg);
  if (filt) {
    const auto check = validate_filtration(f);
    if (!check.ok()) throw InputError("invalid filtration: " + check.issues.front().detail);
  }

  LowerBoundReport r;
  r.algebra = alg->name();
  r.p = f.depth();
  for (auto d : f.dims()) r.filtration_dims.push_back(static_cast<std::int64_t>(d));
  r.step = series.step();
  r.center_dim = center(*alg).dim();

  for (std::size_t p0 : admissible_p0_set(f)) {
    BoundProblem prob = make_bound_problem(p0, r.filtration_dims);
    if (options.transform) prob = options.transform(std::move(prob));
    P0Bound b{p0, prob, solve_exact(prob), closed_bound_first(static_cast<std::int64_t>(p0), prob.n[0]), {}};
    if (p0 >= 2) b.closed_second = closed_bound_second(static_cast<std::int64_t>(p0), prob.n[0], prob.n[p0 - 1]);
    if (b.solution.r0_min > r.mu_nil_lower_bound) {
      r.mu_nil_lower_bound = b.solution.r0_min;
      r.best_p0 = p0;
    }
    r.per_p0.push_back(std::move(b));
  }
  if (r.per_p0.empty()) throw InputError("filtration has no level inside the center");

  if (r.step >= 2)
    r.theorem_value = theorem_mainbound(static_cast<std::int64_t>(r.step), static_cast<std::int64_t>(alg->dim()),
                                        static_cast<std::int64_t>(r.center_dim));
  if (auto spec = parse_family_name(alg->name())) r.reference_mu = known_mu(*spec);
  return r;
}

Json report_to_json(const LowerBoundReport& r) {
  Json out;
  out["algebra"] = r.algebra;
  out["p"] = r.p;
  out["filtration_dims"] = r.filtration_dims;
  Json rows = Json::array();
  for (const auto& b : r.per_p0) {
    Json row;
    row["p0"] = b.p0;
    row["r0_min"] = b.solution.r0_min;
    row["witness"] = b.solution.witness;
    row["closed_first"] = format_decimal(b.closed_first.value());
    row["closed_first_ceil"] = b.closed_first.ceil();
    if (b.closed_second) {
      row["closed_second"] = format_decimal(b.closed_second->value.value());
      row["closed_second_ceil"] = b.closed_second->value.ceil();
      row["case"] = to_string(b.closed_second->which);
    } else {
      row["closed_second"] = nullptr;
      row["closed_second_ceil"] = nullptr;
      row["case"] = "none";
    }
    row["nodes_explored"] = b.solution.nodes_explored;
    rows.push_back(std::move(row));
  }
  out["per_p0"] = std::move(rows);
  out["mu_nil_lower_bound"] = r.mu_nil_lower_bound;
  out["best_p0"] = r.best_p0;
  if (r.theorem_value) {
    out["theorem_1_2_value"] = format_decimal(r.theorem_value->value.value());
    out["theorem_1_2_ceil"] = r.theorem_value->value.ceil();
    out["theorem_1_2_case"] = to_string(r.theorem_value->which);
  } else {
    out["theorem_1_2_value"] = nullptr;
  }
  out["nilpotency_step"] = r.step;
  out["center_dim"] = r.center_dim;
  out["assumption"] = "input must be nilpotent; the bound is for faithful nilrepresentations";
  if (r.reference_mu) {
    out["reference_mu"] = {{"value", r.reference_mu->first}, {"source", r.reference_mu->second}};
  }
  return out;
}

Json solution_to_json(const BoundProblem& prob, const BoundSolution& sol, const std::string& method) {
  Json out;
  out["p"] = prob.p;
  out["p0"] = prob.p0;
  out["dims"] = prob.n;
  out["method"] = method;
  out["r0_min"] = sol.r0_min;
  out["witness"] = sol.witness;
  out["nodes_explored"] = sol.nodes_explored;
  const auto first = closed_bound_first(static_cast<std::int64_t>(prob.p0), prob.n[0]);
  out["closed_first"] = format_decimal(first.value());
  out["closed_first_ceil"] = first.ceil();
  if (prob.p0 >= 2) {
    const auto second = closed_bound_second(static_cast<std::int64_t>(prob.p0), prob.n[0], prob.n[prob.p0 - 1]);
    out["closed_second"] = format_decimal(second.value.value());
    out["closed_second_ceil"] = second.value.ceil();
    out["case"] = to_string(second.which);
  } else {
    out["closed_second"] = nullptr;
    out["closed_second_ceil"] = nullptr;
    out["case"] = "none";
  }
  return out;
}

namespace {

Json checks_to_json(const CheckReport& report) {
  Json out;
  for (const auto& c : report.checks) {
    out[c.name] = {{"applicable", c.applicable}, {"passed", c.passed}, {"failures", c.failures}};
  }
  return out;
}

}  // namespace

Json decomposition_to_json(const DecompositionRun& run, std::size_t p0) {
  const auto& dec = run.decomposition;
  Json out;
  out["seed"] = dec.seed;
  out["p0"] = p0;
  out["dimV"] = run.chain.space_dim();
  out["partition"] = dec.partition;
  Json vectors = Json::array();
  for (const auto& v : dec.vectors) vectors.push_back(vector_to_json(v));
  out["vectors"] = std::move(vectors);
  Json grid = Json::array();
  for (const auto& row : dec.grid) {
    Json dims = Json::array();
    for (const auto& cell : row) dims.push_back(cell.dim());
    grid.push_back(std::move(dims));
  }
  out["grid_dims"] = std::move(grid);
  out["r"] = dec.column_dims();
  out["decomposition_checks"] = checks_to_json(run.decomposition_checks);
  if (run.adapted_basis) {
    const auto& ab = *run.adapted_basis;
    Json basis = Json::array();
    for (std::size_t c = 0; c < ab.basis.cols(); ++c) basis.push_back(vector_to_json(ab.basis.column(c)));
    out["adapted_basis"] = {{"q", ab.q}, {"s_p0", ab.s_p0}, {"size", ab.basis.cols()}, {"columns", std::move(basis)}};
  } else {
    out["adapted_basis"] = nullptr;
  }
  out["block_checks"] = run.block_report ? checks_to_json(run.block_report->report) : Json(nullptr);
  out["profile"] = run.profile ? Json(*run.profile) : Json(nullptr);
  out["ok"] = run.ok();
  if (!run.failure.empty()) out["failure"] = run.failure;
  return out;
}

Json analysis_to_json(std::shared_ptr<const LieAlgebra> alg) {
  Json out;
  out["algebra"] = alg->name();
  out["dim"] = alg->dim();
  const auto jacobi = validate(*alg);
  out["jacobi_ok"] = jacobi.ok();
  if (!jacobi.ok()) {
    Json bad = Json::array();
    for (const auto& v : jacobi.violations) bad.push_back({v.i + 1, v.j + 1, v.k + 1});
    out["jacobi_violations"] = std::move(bad);
    return out;
  }
  const auto series = lower_central_series(*alg);
  Json dims = Json::array();
  for (const auto& t : series.terms) dims.push_back(t.dim());
  out["lower_central_series_dims"] = std::move(dims);
  out["nilpotent"] = series.nilpotent;
  out["center_dim"] = center(*alg).dim();
  if (series.nilpotent) {
    out["step"] = series.step();
    const Filtration f = default_filtration(alg);
    out["default_filtration_dims"] = f.dims();
    out["admissible_p0"] = admissible_p0_set(f);
  }
  return out;
}

}  // namespace nilrep
