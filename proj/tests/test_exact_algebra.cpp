#include <doctest.h>

#include <algorithm>
#include <random>

#include "nilrep/errors.hpp"
#include "nilrep/subspace.hpp"

using namespace nilrep;

namespace {

Matrix m(std::vector<std::vector<long>> rows) {
  std::vector<Vector> out;
  for (const auto& r : rows) {
    Vector v;
    for (long x : r) v.emplace_back(x);
    out.push_back(std::move(v));
  }
  return Matrix::from_rows(out);
}

Vector v(std::vector<long> xs) {
  Vector out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

Matrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-2, 2);
  Matrix out(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) out(r, c) = d(rng);
  return out;
}

}  // namespace

TEST_CASE("rationals parse and print in lowest terms") {
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational("-3/2")) == "-3/2");
  CHECK(to_string(parse_rational("7")) == "7");
  CHECK_THROWS_AS(parse_rational("4/-2"), InputError);
  CHECK_THROWS_AS(parse_rational("1/0"), InputError);
  CHECK_THROWS_AS(parse_rational("abc"), InputError);
  CHECK_THROWS_AS(parse_rational(""), InputError);
}

TEST_CASE("rref examples") {
  auto a = rref(m({{1, 2}, {2, 4}}));
  CHECK(a.rank == 1);
  CHECK(a.pivot_columns == std::vector<std::size_t>{0});
  auto b = rref(Matrix::identity(2));
  CHECK(b.rank == 2);
  CHECK(b.pivot_columns == std::vector<std::size_t>{0, 1});
  auto c = rref(m({{0, 1}, {0, 0}}));
  CHECK(c.rank == 1);
  CHECK(c.pivot_columns == std::vector<std::size_t>{1});
}

TEST_CASE("kernel examples") {
  CHECK(kernel_basis(Matrix::unit(2, 2, 0, 1)) == Subspace::span(2, {v({1, 0})}));
  CHECK(kernel_basis(Matrix::identity(3)).is_zero());
  CHECK(kernel_basis(Matrix(3, 3)) == Subspace::full(3));
}

TEST_CASE("span, intersect and contains") {
  CHECK(Subspace::span(2, {v({1, 0}), v({2, 0})}).dim() == 1);
  const auto e12 = Subspace::span(3, {v({1, 0, 0}), v({0, 1, 0})});
  const auto e23 = Subspace::span(3, {v({0, 1, 0}), v({0, 0, 1})});
  CHECK(intersect(e12, e23) == Subspace::span(3, {v({0, 1, 0})}));
  CHECK(Subspace::full(3).contains(e12));
  CHECK_FALSE(e12.contains(e23));
  CHECK_THROWS(intersect(e12, Subspace::full(2)));
}

TEST_CASE("complement_extending examples") {
  const auto c = complement_extending(Subspace::full(3), Subspace::span(3, {v({1, 0, 0})}),
                                      Subspace::span(3, {v({0, 1, 0})}));
  CHECK(c == Subspace::span(3, {v({0, 1, 0}), v({0, 0, 1})}));
  const auto d = complement_extending(Subspace::full(2), Subspace::span(2, {v({1, 1})}), Subspace(2));
  CHECK(d == Subspace::span(2, {v({1, 0})}));
  CHECK_THROWS_AS(complement_extending(Subspace::full(2), Subspace::span(2, {v({1, 0})}),
                                       Subspace::span(2, {v({1, 0})})),
                  std::invalid_argument);
}

TEST_CASE("inverse and nilpotency") {
  const auto a = m({{2, 1}, {1, 1}});
  CHECK(a * inverse(a) == Matrix::identity(2));
  CHECK_THROWS_AS(inverse(m({{1, 2}, {2, 4}})), InputError);
  CHECK(is_nilpotent(Matrix::unit(3, 3, 0, 2)));
  CHECK_FALSE(is_nilpotent(Matrix::identity(2)));
}

TEST_CASE("common flag detection") {
  std::vector<Matrix> upper = {Matrix::unit(3, 3, 0, 1), Matrix::unit(3, 3, 1, 2)};
  CHECK(has_common_flag(upper, 3));
  std::vector<Matrix> mixed = {Matrix::unit(2, 2, 0, 1), Matrix::unit(2, 2, 1, 0)};
  CHECK_FALSE(has_common_flag(mixed, 2));
}

TEST_CASE("property: rank-nullity, idempotent rref, canonical spans") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 6;
    const Matrix a = random_matrix(rows, cols, rng);
    CHECK(rank(a) + kernel_basis(a).dim() == cols);
    const auto once = rref(a).reduced;
    CHECK(rref(once).reduced == once);
    for (std::size_t i = 0; i < kernel_basis(a).dim(); ++i)
      CHECK(nilrep::is_zero(a.apply(kernel_basis(a).basis_vector(i))));

    std::vector<Vector> vs;
    for (std::size_t r = 0; r < rows; ++r) vs.push_back(a.row_vector(r));
    std::vector<Vector> shuffled = vs;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    for (auto& x : shuffled)
      for (auto& e : x) e *= 3;
    CHECK(Subspace::span(cols, vs) == Subspace::span(cols, shuffled));
  }
}

TEST_CASE("property: complements are complements") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + rng() % 5;
    const Subspace ambient = Subspace::row_space(random_matrix(1 + rng() % n, n, rng));
    // inner and must_contain: disjoint pieces of a basis of the ambient space.
    const auto basis = ambient.basis_vectors();
    std::vector<Vector> inner_vs, must_vs;
    for (const auto& b : basis) {
      const auto pick = rng() % 3;
      if (pick == 0) inner_vs.push_back(b);
      if (pick == 1) must_vs.push_back(b);
    }
    const Subspace inner = Subspace::span(n, inner_vs);
    const Subspace must = Subspace::span(n, must_vs);
    const Subspace c = complement_extending(ambient, inner, must);
    CHECK(c.dim() + inner.dim() == ambient.dim());
    CHECK(intersect(c, inner).is_zero());
    CHECK(c.contains(must));
    CHECK(ambient.contains(c));
  }
}

TEST_CASE("echelon builder and coordinate systems") {
  EchelonBuilder b(3);
  CHECK(b.insert(v({1, 1, 0})));
  CHECK_FALSE(b.insert(v({2, 2, 0})));
  CHECK(b.insert(v({0, 0, 5})));
  CHECK(b.rank() == 2);
  CoordinateSystem cs(3, {v({1, 1, 0}), v({0, 1, 1})});
  const auto c = cs.coordinates(v({2, 5, 3}));
  REQUIRE(c);
  CHECK(*c == v({2, 3}));
  CHECK_FALSE(cs.coordinates(v({1, 0, 0})));
}
