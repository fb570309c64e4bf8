#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace nilrep {

/// Integer program: minimize r_0 = a_0 + ... + a_p subject to
///   a_0, a_p >= 1, a_k >= 0;
///   sum_{i=0}^{p0-k} a_i r_{k+i} >= n_k   for k = 1..p0;
///   a_0 r_k >= n_k                        for k = p0..p;
/// where r_k = a_k + ... + a_p.
struct BoundProblem {
  std::size_t p = 1;
  std::size_t p0 = 1;
  std::vector<std::int64_t> n;  // n_1 .. n_p, weakly decreasing, all >= 1
};

/// Strips trailing zero dimensions, then checks 1 <= p0 <= p and that n is
/// weakly decreasing and positive. Throws InputError otherwise.
BoundProblem make_bound_problem(std::size_t p0, std::vector<std::int64_t> n);

/// a_0 .. a_p
using Profile = std::vector<std::int64_t>;

/// Throws std::invalid_argument when a.size() != p + 1.
bool is_feasible(const BoundProblem& prob, std::span<const std::int64_t> a);

struct BoundSolution {
  std::int64_t r0_min = 0;
  Profile witness;  // lexicographically smallest optimal profile
  std::uint64_t nodes_explored = 0;
  friend bool operator==(const BoundSolution&, const BoundSolution&) = default;
};

/// Reference oracle: every profile with sum <= n_1 + 1, by ascending sum and
/// lexicographically within a sum.
BoundSolution solve_bruteforce(const BoundProblem& prob);

struct SolveOptions {
  /// Start the target-sum sweep at the certified ceiling of the first closed
  /// form; otherwise start at 2.
  bool start_at_closed_bound = true;
};

/// Branch and bound over ascending target sums. Branches on a_0 run under
/// OpenMP; the result (including nodes_explored) does not depend on the
/// schedule.
BoundSolution solve_exact(const BoundProblem& prob, SolveOptions options = {});

/// Same search as solve_exact on one thread. Kept as the reference the
/// parallel kernel is tested against.
BoundSolution solve_exact_serial(const BoundProblem& prob, SolveOptions options = {});

}  // namespace nilrep
