#include "nilrep/bound_problem.hpp"

#include <stdexcept>
#include <string>

#include "nilrep/errors.hpp"

namespace nilrep {

BoundProblem make_bound_problem(std::size_t p0, std::vector<std::int64_t> n) {
  while (!n.empty() && n.back() == 0) n.pop_back();
  if (n.empty()) throw InputError("bound problem needs at least one nonzero dimension");
  for (std::size_t k = 0; k < n.size(); ++k) {
    if (n[k] < 1) throw InputError("dimensions must be positive");
    if (k > 0 && n[k] > n[k - 1]) throw InputError("dimensions must be weakly decreasing");
  }
  if (p0 < 1 || p0 > n.size())
    throw InputError("p0 must lie in 1.." + std::to_string(n.size()) + ", got " + std::to_string(p0));
  return {n.size(), p0, std::move(n)};
}

bool is_feasible(const BoundProblem& prob, std::span<const std::int64_t> a) {
  const std::size_t p = prob.p;
  if (a.size() != p + 1) throw std::invalid_argument("profile length must be p + 1");
  if (a[0] < 1 || a[p] < 1) return false;
  for (auto x : a) {
    if (x < 0) return false;
  }
  std::vector<std::int64_t> r(p + 2, 0);
  for (std::size_t k = p + 1; k-- > 0;) r[k] = r[k + 1] + a[k];
  for (std::size_t k = 1; k <= prob.p0; ++k) {
    std::int64_t lhs = 0;
    for (std::size_t i = 0; i <= prob.p0 - k; ++i) lhs += a[i] * r[k + i];
    if (lhs < prob.n[k - 1]) return false;
  }
  for (std::size_t k = prob.p0; k <= p; ++k) {
    if (a[0] * r[k] < prob.n[k - 1]) return false;
  }
  return true;
}

namespace {

// Visits compositions of `remaining` into a[m..p] with a_p >= 1, in
// lexicographic order, calling `leaf` on each complete profile until it
// returns true.
template <typename Leaf>
bool enumerate(Profile& a, std::size_t m, std::int64_t remaining, Leaf& leaf) {
  const std::size_t p = a.size() - 1;
  if (m == p) {
    a[p] = remaining;
    return remaining >= 1 && leaf(a);
  }
  const std::int64_t lo = m == 0 ? 1 : 0;
  for (std::int64_t x = lo; x <= remaining - 1; ++x) {
    a[m] = x;
    if (enumerate(a, m + 1, remaining - x, leaf)) return true;
  }
  return false;
}

}  // namespace

BoundSolution solve_bruteforce(const BoundProblem& prob) {
  BoundSolution out;
  Profile a(prob.p + 1);
  auto leaf = [&](const Profile& candidate) {
    ++out.nodes_explored;
    return is_feasible(prob, candidate);
  };
  for (std::int64_t s = 2; s <= prob.n[0] + 1; ++s) {
    if (enumerate(a, 0, s, leaf)) {
      out.r0_min = s;
      out.witness = a;
      return out;
    }
  }
  throw InvariantError("brute force found no feasible profile up to n_1 + 1");
}

}  // namespace nilrep
