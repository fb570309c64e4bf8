#include <doctest.h>

#include "nilrep/chain_decomposition.hpp"
#include "nilrep/errors.hpp"
#include "nilrep/families.hpp"
#include "support/random_algebra.hpp"

using namespace nilrep;

namespace {

using Sizes = std::vector<std::size_t>;

struct Fixture {
  FamilyInstance inst;
  Filtration filt;
  OperatorChain chain;
  Decomposition dec;
};

Fixture fixture(const FamilyInstance& inst, std::uint64_t seed = 0) {
  Filtration filt = default_filtration(inst.algebra);
  OperatorChain chain = OperatorChain::from_representation(inst.representation, filt);
  Decomposition dec = decompose(inst.representation, filt, seed);
  return {inst, filt, chain, dec};
}

bool passed(const CheckReport& r, const std::string& name) {
  const auto* c = r.find(name);
  REQUIRE(c != nullptr);
  return c->passed;
}

}  // namespace

TEST_CASE("rank vectors") {
  const auto h = fixture(make_heisenberg(1));
  CHECK(find_rank_vector(h.chain, 0).dims == Sizes{2, 1});
  const auto single = OperatorChain::from_levels(2, {{Matrix::unit(2, 2, 0, 1)}});
  const auto rv = find_rank_vector(single, 4);
  CHECK(rv.dims == Sizes{1});
  CHECK(sgn(rv.vector[1]) != 0);
  CHECK(find_rank_vector(h.chain, 9).vector == find_rank_vector(h.chain, 9).vector);
}

TEST_CASE("zero levels are rejected") {
  const auto zero = OperatorChain::from_levels(2, {{Matrix(2, 2)}});
  CHECK(find_rank_vector(zero, 0).dims == Sizes{0});
  CHECK_THROWS_AS(decompose(zero, 0), InputError);
}

TEST_CASE("Heisenberg decomposition") {
  const auto h = fixture(make_heisenberg(1), 42);
  CHECK(h.dec.partition == Sizes{2, 1});
  CHECK(h.dec.column_dims() == Sizes{2, 1});
  CHECK(verify_decomposition(h.dec, h.chain, 2).ok());
  const auto ab = build_adapted_basis(h.dec, h.chain, 2);
  CHECK(ab.basis.cols() == 3);
  CHECK(ab.q == 0);
  CHECK(verify_block_structure(ab, h.dec, h.chain, 2).ok());
  CHECK(extract_profile(h.dec, h.chain, 2) == Profile{1, 1, 1});
}

TEST_CASE("n_{1,1,2} decomposition") {
  const auto f = fixture(make_nabc(1, 1, 2));
  CHECK(f.dec.partition == Sizes{3, 2});
  CHECK(f.dec.column_dims() == Sizes{2, 1});
  const auto report = verify_decomposition(f.dec, f.chain, 2);
  CHECK(report.ok());
  CHECK(report.find("trivial_intersection")->applicable);
  const auto ab = build_adapted_basis(f.dec, f.chain, 2);
  CHECK(ab.r.front() + ab.q + ab.s_p0 == 4);
  CHECK(ab.q == 0);
  CHECK(ab.s_p0 == 2);
  CHECK(verify_block_structure(ab, f.dec, f.chain, 2).ok());
  CHECK(extract_profile(f.dec, f.chain, 2) == Profile{2, 1, 1});
}

TEST_CASE("abelian(1) on k^2") {
  const auto f = fixture(make_abelian(1));
  CHECK(f.dec.partition == Sizes{1});
  CHECK(f.dec.column_dims() == Sizes{1});
  const auto ab = build_adapted_basis(f.dec, f.chain, 1);
  CHECK(ab.basis.cols() == 2);
  CHECK(ab.q == 0);
  CHECK(extract_profile(f.dec, f.chain, 1) == Profile{1, 1});
}

TEST_CASE("swapping v_1 and v_2 breaks annihilation") {
  auto h = fixture(make_heisenberg(1));
  REQUIRE(h.dec.vectors.size() == 2);
  std::swap(h.dec.vectors[0], h.dec.vectors[1]);
  const auto report = verify_decomposition(h.dec, h.chain, 2);
  CHECK_FALSE(report.ok());
  CHECK_FALSE(passed(report, "annihilation"));
}

TEST_CASE("reordering the adapted basis breaks the staircase") {
  const auto f = fixture(make_nap(1, 3));
  REQUIRE(f.dec.partition == Sizes{3, 2, 1});
  auto ab = build_adapted_basis(f.dec, f.chain, 3);
  REQUIRE(verify_block_structure(ab, f.dec, f.chain, 3).ok());
  // Reverse X_1(v_1), ..., X_{r_1}(v_1).
  std::vector<Vector> columns;
  for (std::size_t c = 0; c < ab.basis.cols(); ++c) columns.push_back(ab.basis.column(c));
  std::reverse(columns.begin(), columns.begin() + static_cast<std::ptrdiff_t>(ab.r.front()));
  ab.basis = Matrix::from_columns(ab.basis.rows(), columns);
  const auto report = verify_block_structure(ab, f.dec, f.chain, 3);
  CHECK_FALSE(report.ok());
  CHECK_FALSE(passed(report.report, "staircase"));
}

TEST_CASE("decompose validates its input") {
  const auto h = make_heisenberg(1);
  const auto filt = default_filtration(h.algebra);
  std::vector<Matrix> zeros(3, Matrix(3, 3));
  CHECK_THROWS_AS(decompose(Representation(h.algebra, 3, zeros), filt, 0), InputError);
  auto a1 = std::make_shared<const LieAlgebra>(LieAlgebra::abelian("a", 1));
  const Representation scalar(a1, 2, {Matrix::identity(2)});
  CHECK_THROWS_AS(decompose(scalar, default_filtration(a1), 0), InputError);
}

TEST_CASE("decompositions are deterministic and seed stable") {
  for (const auto& inst : {make_nap(2, 2), make_nabc(1, 2, 1), make_heisenberg(2)}) {
    const auto filt = default_filtration(inst.algebra);
    const auto a = decompose(inst.representation, filt, 5);
    CHECK(a == decompose(inst.representation, filt, 5));
    for (std::uint64_t seed : {0, 1, 2}) {
      const auto b = decompose(inst.representation, filt, seed);
      CHECK(b.partition == a.partition);
      CHECK(b.column_dims() == a.column_dims());
    }
  }
}

TEST_CASE("property: random upper triangular algebras") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const auto inst = testing::random_upper_triangular(seed);
    CAPTURE(inst.algebra->name());
    CHECK(inst.algebra->dim() <= 12);
    CHECK(inst.representation.space_dim() <= 7);
    const auto run = run_decomposition(inst.representation, default_filtration(inst.algebra), seed);
    CHECK(run.ok());
    REQUIRE(run.profile);
    std::int64_t total = 0;
    for (auto a : *run.profile) total += a;
    CHECK(total == static_cast<std::int64_t>(inst.representation.space_dim()));
  }
}

TEST_CASE("operator chains from explicit levels") {
  const Matrix e12 = Matrix::unit(3, 3, 0, 1), e13 = Matrix::unit(3, 3, 0, 2), e23 = Matrix::unit(3, 3, 1, 2);
  const auto chain = OperatorChain::from_levels(3, {{e12, e23, e13}, {e13}});
  CHECK(chain.frame_size() == 3);
  CHECK(chain.level(2).dim() == 1);
  const auto dec = decompose(chain, 0);
  CHECK(dec.partition == Sizes{2, 1});
  CHECK(verify_decomposition(dec, chain, 2).ok());
  CHECK_THROWS_AS(OperatorChain::from_levels(3, {{e12}, {e13}}), InputError);
}
