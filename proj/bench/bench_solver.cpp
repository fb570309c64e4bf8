// Times the OpenMP kernels against their serial references.

#include <algorithm>
#include <chrono>
#include <string>
#include <vector>
#include <cstdio>
#include <omp.h>

#include "nilrep/bound_problem.hpp"
#include "nilrep/families.hpp"

using namespace nilrep;

namespace {

template <class F>
double best_of(int reps, F&& f) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t = std::chrono::steady_clock::now();
    f();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count());
  }
  return best;
}

}  // namespace

int main() {
  std::printf("threads: %d\n\n", omp_get_max_threads());
  std::printf("%-44s %12s %12s %12s %10s\n", "problem", "serial_s", "openmp_s", "brute_s", "r0_min");
  const std::vector<BoundProblem> problems = {
      make_bound_problem(2, {27, 9}),
      make_bound_problem(3, {24, 12, 4}),
      make_bound_problem(5, {60, 40, 30, 10, 2}),
      make_bound_problem(5, {200, 150, 100, 50, 10}),
      make_bound_problem(6, {300, 200, 150, 100, 50, 20}),
      make_bound_problem(8, {400, 300, 250, 200, 150, 100, 50, 10}),
  };
  for (const auto& prob : problems) {
    BoundSolution serial, parallel;
    const double ts = best_of(3, [&] { serial = solve_exact_serial(prob); });
    const double tp = best_of(3, [&] { parallel = solve_exact(prob); });
    double tb = -1;
    if (prob.p <= 3 && prob.n[0] <= 30) tb = best_of(1, [&] { solve_bruteforce(prob); });
    std::string label = "p0=" + std::to_string(prob.p0) + " n=(";
    for (std::size_t k = 0; k < prob.p; ++k) label += (k ? "," : "") + std::to_string(prob.n[k]);
    label += ")";
    std::printf("%-44s %12.6f %12.6f %12s %10lld%s\n", label.c_str(), ts, tp,
                tb < 0 ? "skipped" : std::to_string(tb).c_str(), static_cast<long long>(serial.r0_min),
                serial == parallel ? "" : "  MISMATCH");
  }

  std::printf("\n%-44s %12s %12s\n", "jacobi check", "serial_s", "openmp_s");
  for (auto [a, p] : std::vector<std::pair<int, int>>{{2, 3}, {2, 4}, {3, 3}}) {
    const auto alg = make_nap(a, p).algebra;
    const double ts = best_of(3, [&] { validate_serial(*alg); });
    const double tp = best_of(3, [&] { validate(*alg); });
    std::printf("%-44s %12.6f %12.6f\n", alg->name().c_str(), ts, tp);
  }
  return 0;
}
