#include <algorithm>
#include <optional>
#include <vector>

#include "nilrep/bound_problem.hpp"
#include "nilrep/closed_forms.hpp"
#include "nilrep/errors.hpp"

namespace nilrep {

namespace {

// Depth-first search over profiles with a fixed sum and a fixed a_0, in
// lexicographic order. With the sum fixed, r_m equals the budget left after
// a_0..a_{m-1}, so each constraint can be bounded from the prefix alone.
class BranchSearch {
 public:
  BranchSearch(const BoundProblem& prob, std::int64_t total)
      : prob_(prob), total_(total), a_(prob.p + 1, 0), r_(prob.p + 2, 0) {}

  std::optional<Profile> run(std::int64_t a0) {
    r_[0] = total_;
    a_[0] = a0;
    r_[1] = total_ - a0;
    if (descend(1, total_ - a0)) return a_;
    return std::nullopt;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  bool descend(std::size_t m, std::int64_t remaining) {
    ++nodes_;
    if (!promising(m, remaining)) return false;
    const std::size_t p = prob_.p;
    if (m == p) {
      a_[p] = remaining;
      return is_feasible(prob_, a_);
    }
    for (std::int64_t x = 0; x <= remaining - 1; ++x) {
      a_[m] = x;
      r_[m + 1] = remaining - x;
      if (descend(m + 1, remaining - x)) return true;
    }
    return false;
  }

  // a_0..a_{m-1} fixed, r_0..r_m known, r_m = remaining.
  bool promising(std::size_t m, std::int64_t remaining) const {
    if (remaining < 1) return false;
    const std::size_t p = prob_.p, p0 = prob_.p0;
    const auto& n = prob_.n;
    for (std::size_t k = p0; k <= p; ++k) {
      const std::int64_t rk = k <= m ? r_[k] : remaining;
      if (a_[0] * rk < n[k - 1]) return false;
    }
    for (std::size_t k = 1; k <= p0; ++k) {
      std::int64_t upper = 0;
      bool open_tail = false;
      for (std::size_t i = 0; i <= p0 - k; ++i) {
        if (i < m) {
          upper += a_[i] * (k + i <= m ? r_[k + i] : remaining);
        } else {
          open_tail = true;
        }
      }
      // Unassigned a_i sum to at most `remaining`, each r to at most `remaining`.
      if (open_tail) upper += remaining * remaining;
      if (upper < n[k - 1]) return false;
    }
    return true;
  }

  const BoundProblem& prob_;
  std::int64_t total_;
  Profile a_;
  std::vector<std::int64_t> r_;
  std::uint64_t nodes_ = 0;
};

BoundSolution solve_sweep(const BoundProblem& prob, SolveOptions options, bool parallel) {
  std::int64_t start = 2;
  if (options.start_at_closed_bound)
    start = std::max<std::int64_t>(start, closed_bound_first(static_cast<std::int64_t>(prob.p0),
                                                             prob.n[0])
                                              .ceil());
  BoundSolution out;
  for (std::int64_t total = start; total <= prob.n[0] + 1; ++total) {
    const auto branches = static_cast<std::size_t>(total - 1);
    std::vector<std::optional<Profile>> found(branches);
    std::vector<std::uint64_t> nodes(branches, 0);
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (std::ptrdiff_t b = 0; b < static_cast<std::ptrdiff_t>(branches); ++b) {
      BranchSearch search(prob, total);
      found[b] = search.run(b + 1);
      nodes[b] = search.nodes();
    }
    for (auto c : nodes) out.nodes_explored += c;
    // Branches are ordered by a_0, so the first hit is the lexicographic minimum.
    for (auto& f : found) {
      if (f) {
        out.r0_min = total;
        out.witness = std::move(*f);
        return out;
      }
    }
  }
  throw InvariantError("no feasible profile up to n_1 + 1; the profile (n_1, 0, ..., 0, 1) "
                       "should always be feasible");
}

}  // namespace

BoundSolution solve_exact(const BoundProblem& prob, SolveOptions options) {
  return solve_sweep(prob, options, true);
}

BoundSolution solve_exact_serial(const BoundProblem& prob, SolveOptions options) {
  return solve_sweep(prob, options, false);
}

}  // namespace nilrep
