#include <doctest.h>

#include "nilrep/errors.hpp"
#include "nilrep/families.hpp"
#include "nilrep/filtration.hpp"

using namespace nilrep;

namespace {

std::shared_ptr<const LieAlgebra> heisenberg() {
  return std::make_shared<const LieAlgebra>("heisenberg", std::vector<std::string>{"x", "y", "z"},
                                            std::vector<StructureConstant>{{0, 1, 2, 1}});
}

std::vector<std::size_t> dims(const std::vector<Subspace>& terms) {
  std::vector<std::size_t> out;
  for (const auto& t : terms) out.push_back(t.dim());
  return out;
}

Vector e(std::size_t n, std::size_t i) { return unit_vector(n, i); }

}  // namespace

TEST_CASE("Jacobi validation") {
  CHECK(validate(*heisenberg()).ok());
  CHECK(validate(LieAlgebra::abelian("a", 4)).ok());
  // [x,y] = x, [y,z] = y, [x,z] = 0 breaks Jacobi on (x,y,z).
  const LieAlgebra broken("broken", {"x", "y", "z"}, {{0, 1, 0, 1}, {1, 2, 1, 1}});
  const auto report = validate(broken);
  REQUIRE(report.violations.size() == 1);
  CHECK(report.violations[0].i == 0);
  CHECK(report.violations[0].j == 1);
  CHECK(report.violations[0].k == 2);
}

TEST_CASE("structure constants are range checked") {
  CHECK_THROWS_AS(LieAlgebra("bad", {"x", "y"}, {{0, 1, 2, 1}}), InputError);
  CHECK_THROWS_AS(LieAlgebra("bad", {"x", "y"}, {{1, 0, 0, 1}}), InputError);
}

TEST_CASE("bracket") {
  const auto h = heisenberg();
  CHECK(h->bracket(e(3, 0), e(3, 1)) == e(3, 2));
  CHECK(h->bracket(e(3, 1), e(3, 0)) == Vector{0, 0, -1});
  const Vector u{2, -1, 5};
  CHECK(nilrep::is_zero(h->bracket(u, u)));
  const auto a = LieAlgebra::abelian("a", 3);
  CHECK(nilrep::is_zero(a.bracket(u, Vector{1, 1, 1})));
  CHECK_THROWS(h->bracket(Vector{1, 0}, u));
}

TEST_CASE("lower central series and center") {
  CHECK(dims(lower_central_series(*heisenberg()).terms) == std::vector<std::size_t>{3, 1});
  CHECK(dims(lower_central_series(*make_nabc(1, 1, 2).algebra).terms) == std::vector<std::size_t>{5, 2});
  CHECK(dims(lower_central_series(LieAlgebra::abelian("a", 4)).terms) == std::vector<std::size_t>{4});
  CHECK(center(*heisenberg()) == Subspace::span(3, {e(3, 2)}));
  CHECK(center(*make_nabc(2, 3, 2).algebra).dim() == 4);
  CHECK(center(LieAlgebra::abelian("a", 5)).dim() == 5);

  // [x,y] = y is solvable but not nilpotent.
  const LieAlgebra affine("aff", {"x", "y"}, {{0, 1, 1, 1}});
  CHECK_FALSE(lower_central_series(affine).nilpotent);
}

TEST_CASE("default filtration") {
  const auto h = default_filtration(heisenberg());
  CHECK(h.dims() == std::vector<std::size_t>{3, 1});
  CHECK(h.p0() == 2);
  const auto n114 = default_filtration(make_nabc(1, 1, 4).algebra);
  CHECK(n114.dims() == std::vector<std::size_t>{9, 4});
  CHECK(n114.p0() == 2);
  const auto n13 = default_filtration(make_nap(1, 3).algebra);
  CHECK(n13.dims() == std::vector<std::size_t>{6, 3, 1});
  CHECK(n13.p0() == 3);
  for (const auto& f : {h, n114, n13}) CHECK(validate_filtration(f).ok());

  auto affine = std::make_shared<const LieAlgebra>("aff", std::vector<std::string>{"x", "y"},
                                                   std::vector<StructureConstant>{{0, 1, 1, 1}});
  CHECK_THROWS_AS(default_filtration(affine), InputError);
}

TEST_CASE("admissible p0") {
  CHECK(admissible_p0_set(default_filtration(heisenberg())) == std::vector<std::size_t>{2});
  auto a4 = std::make_shared<const LieAlgebra>(LieAlgebra::abelian("a", 4));
  CHECK(admissible_p0_set(Filtration(a4, {Subspace::full(4)}, 1)) == std::vector<std::size_t>{1});
  CHECK(admissible_p0_set(default_filtration(make_nap(1, 3).algebra)) == std::vector<std::size_t>{3});
}

TEST_CASE("filtration validation failures") {
  const auto h = heisenberg();
  const auto twice = validate_filtration(Filtration(h, {Subspace::full(3), Subspace::full(3)}, 2));
  REQUIRE_FALSE(twice.ok());
  bool bracket_issue = false;
  for (const auto& issue : twice.issues) bracket_issue |= issue.kind == "bracket" && issue.i == 1 && issue.j == 2;
  CHECK(bracket_issue);

  // n_2 = span{y, z} is not central.
  const Subspace yz = Subspace::span(3, {e(3, 1), e(3, 2)});
  const auto noncentral = validate_filtration(Filtration(h, {Subspace::full(3), yz}, 2));
  bool central_issue = false;
  for (const auto& issue : noncentral.issues) central_issue |= issue.kind == "p0_central";
  CHECK(central_issue);

  const auto range = validate_filtration(Filtration(h, {Subspace::full(3)}, 3));
  REQUIRE_FALSE(range.ok());
  CHECK(range.issues.back().kind == "p0_range");

  // Trailing zero levels are stripped.
  const Filtration stripped(h, {Subspace::full(3), Subspace::span(3, {e(3, 2)}), Subspace(3)}, 2);
  CHECK(stripped.depth() == 2);
}

TEST_CASE("representation validation") {
  const auto inst = make_heisenberg(1);
  const auto report = validate_representation(inst.representation);
  CHECK(report.ok());
  CHECK(is_faithful(inst.representation));

  // Zero map is a homomorphism but not faithful.
  std::vector<Matrix> zeros(3, Matrix(3, 3));
  const Representation zero(inst.algebra, 3, zeros);
  CHECK_FALSE(validate_representation(zero).faithful);

  // Swapping x and y breaks the homomorphism property ([rho x, rho y] = -rho z).
  auto swapped = inst.representation.matrices();
  std::swap(swapped[0], swapped[1]);
  CHECK_FALSE(validate_representation(Representation(inst.algebra, 3, swapped)).homomorphism_failures.empty());

  auto a1 = std::make_shared<const LieAlgebra>(LieAlgebra::abelian("a", 1));
  CHECK_FALSE(validate_representation(Representation(a1, 2, {Matrix::identity(2)})).non_nilpotent.empty());
  CHECK_THROWS_AS(Representation(a1, 2, {Matrix(3, 3)}), InputError);
  CHECK_THROWS_AS(Representation(a1, 2, {}), InputError);
}

TEST_CASE("parallel Jacobi check matches the serial reference") {
  const LieAlgebra broken("broken", {"x", "y", "z", "w"}, {{0, 1, 0, 1}, {1, 2, 1, 1}, {0, 3, 2, 1}});
  for (const auto& alg : {*make_nap(2, 3).algebra, broken}) {
    const auto a = validate(alg), b = validate_serial(alg);
    REQUIRE(a.violations.size() == b.violations.size());
    for (std::size_t i = 0; i < a.violations.size(); ++i) {
      CHECK(a.violations[i].i == b.violations[i].i);
      CHECK(a.violations[i].j == b.violations[i].j);
      CHECK(a.violations[i].k == b.violations[i].k);
      CHECK(a.violations[i].residual == b.violations[i].residual);
    }
  }
}
