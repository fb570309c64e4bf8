#include "random_algebra.hpp"

#include <random>
#include <string>

namespace nilrep::testing {

namespace {

constexpr std::size_t kMaxDim = 12;

Matrix random_generator(std::size_t n, std::mt19937_64& rng) {
  Matrix m(n, n);
  std::uniform_int_distribution<int> value(-2, 2);
  std::bernoulli_distribution keep(0.5);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = r + 1; c < n; ++c)
      if (keep(rng)) m(r, c) = value(rng);
  return m;
}

// Closes the span of `gens` under commutators; empty when it grows past kMaxDim.
std::vector<Matrix> lie_closure(std::size_t n, const std::vector<Matrix>& gens) {
  EchelonBuilder span(n * n);
  std::vector<Matrix> basis;
  auto add = [&](const Matrix& m) {
    if (span.insert(m.flatten())) basis.push_back(m);
  };
  for (const auto& g : gens) add(g);
  for (std::size_t i = 0; i < basis.size() && basis.size() <= kMaxDim; ++i)
    for (std::size_t j = 0; j < i && basis.size() <= kMaxDim; ++j) add(commutator(basis[j], basis[i]));
  if (basis.size() > kMaxDim) return {};
  return basis;
}

}  // namespace

FamilyInstance random_upper_triangular(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> dim_v(2, 7);
  while (true) {
    const std::size_t n = dim_v(rng);
    std::uniform_int_distribution<std::size_t> count(2, 4);
    std::vector<Matrix> gens;
    for (std::size_t g = count(rng); g > 0; --g) gens.push_back(random_generator(n, rng));
    const auto basis = lie_closure(n, gens);
    // One-dimensional algebras are only accepted where nothing larger fits.
    if (basis.empty() || (basis.size() < 2 && n > 2)) continue;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < basis.size(); ++i) names.push_back("x" + std::to_string(i + 1));
    return linear_lie_algebra("random(seed=" + std::to_string(seed) + ")", n, std::move(names), basis);
  }
}

}  // namespace nilrep::testing
