#include "nilrep/reproduction.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <ostream>

#include "nilrep/families.hpp"
#include "nilrep/report.hpp"

namespace nilrep {

namespace {

BoundProblem off_by_one(BoundProblem prob) {
  for (std::size_t k = 1; k <= prob.p0; ++k) ++prob.n[k - 1];
  for (std::size_t k = prob.p; k-- > 1;) prob.n[k - 1] = std::max(prob.n[k - 1], prob.n[k]);
  return prob;
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

}  // namespace

std::vector<ReproductionRow> run_reproduction(const ReproductionOptions& options) {
  ReportOptions report_options;
  if (options.inject_fault) report_options.transform = off_by_one;
  auto bound_of = [&](const FamilySpec& spec) {
    return lower_bound_report(make_family(spec).algebra, std::nullopt, report_options);
  };

  std::vector<ReproductionRow> rows;
  auto equal_row = [&](const FamilySpec& spec, std::int64_t expected) {
    Timer t;
    const auto r = bound_of(spec);
    rows.push_back({spec.name(), "=", std::to_string(expected), r.mu_nil_lower_bound,
                    r.mu_nil_lower_bound == expected, t.seconds()});
  };

  const std::vector<std::pair<std::int64_t, std::int64_t>> nap =
      options.quick ? std::vector<std::pair<std::int64_t, std::int64_t>>{{1, 2}, {2, 2}, {1, 3}}
                    : std::vector<std::pair<std::int64_t, std::int64_t>>{{1, 2}, {2, 2}, {3, 2}, {1, 3}, {2, 3}};
  for (auto [a, p] : nap) equal_row({FamilyTag::nap, a, 0, 0, p, 0, 0}, (p + 1) * a);

  const std::vector<std::array<std::int64_t, 3>> nabc =
      options.quick ? std::vector<std::array<std::int64_t, 3>>{{1, 1, 1}, {1, 2, 1}, {1, 3, 2}}
                    : std::vector<std::array<std::int64_t, 3>>{{1, 2, 1}, {1, 3, 2}, {2, 3, 1}, {1, 1, 1},
                                                                {2, 3, 2}, {2, 4, 2}};
  for (auto [a, b, c] : nabc) equal_row({FamilyTag::nabc, a, b, c, 0, 0, 0}, a + b + c);
  if (options.quick) return rows;

  struct Spot {
    std::int64_t p, dim_n, dim_z, expected;
    FamilySpec family;
  };
  const std::vector<Spot> spots = {{2, 5, 1, 4, {FamilyTag::nabc, 1, 2, 1, 0, 0, 0}},
                                   {2, 16, 4, 7, {FamilyTag::nabc, 2, 3, 2, 0, 0, 0}},
                                   {3, 6, 1, 4, {FamilyTag::nap, 1, 0, 0, 3, 0, 0}}};
  for (const auto& s : spots) {
    Timer t;
    const std::int64_t value = theorem_mainbound(s.p, s.dim_n, s.dim_z).value.ceil();
    const auto r = bound_of(s.family);
    const std::string label = "theorem_mainbound(" + std::to_string(s.p) + "," + std::to_string(s.dim_n) + "," +
                              std::to_string(s.dim_z) + ") vs " + s.family.name();
    rows.push_back({label, "=", std::to_string(s.expected), value,
                    value == s.expected && r.mu_nil_lower_bound == s.expected, t.seconds()});
  }

  for (std::int64_t c = 1; c <= 8; ++c) {
    Timer t;
    const FamilySpec spec{FamilyTag::nabc, 1, 1, c, 0, 0, 0};
    const auto r = bound_of(spec);
    const std::int64_t hi = known_mu(spec)->first;
    const std::int64_t lo = RadicalExpr{3 * (2 * c + 1), 0, 0}.ceil();
    rows.push_back({spec.name(), "in", "[" + std::to_string(lo) + "," + std::to_string(hi) + "]",
                    r.mu_nil_lower_bound, lo <= r.mu_nil_lower_bound && r.mu_nil_lower_bound <= hi, t.seconds()});
  }
  return rows;
}

void print_reproduction(std::ostream& out, const std::vector<ReproductionRow>& rows) {
  char line[256];
  std::snprintf(line, sizeof line, "%-48s %-3s %-9s %-9s %-6s %s\n", "case", "rel", "expected", "computed",
                "status", "seconds");
  out << line;
  for (const auto& r : rows) {
    std::snprintf(line, sizeof line, "%-48s %-3s %-9s %-9lld %-6s %.3f\n", r.label.c_str(), r.relation.c_str(),
                  r.expected.c_str(), static_cast<long long>(r.computed), r.passed ? "PASS" : "FAIL", r.seconds);
    out << line;
  }
}

}  // namespace nilrep
