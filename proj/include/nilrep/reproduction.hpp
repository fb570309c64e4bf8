#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace nilrep {

struct ReproductionRow {
  std::string label;
  std::string relation;  // "=" or "in" for the n_{1,1,c} range rows
  std::string expected;
  std::int64_t computed = 0;
  bool passed = false;
  double seconds = 0;
};

struct ReproductionOptions {
  bool quick = false;
  /// Adds 1 to n_k for k <= p0 before solving, a harness self-test.
  bool inject_fault = false;
};

/// The family rows: mu_nil lower bound of n_{a,p} and n_{a,b,c} against the
/// known values, the explicit bound spot checks, and n_{1,1,c} range rows.
std::vector<ReproductionRow> run_reproduction(const ReproductionOptions& options);
void print_reproduction(std::ostream& out, const std::vector<ReproductionRow>& rows);

}  // namespace nilrep
