#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nilrep/representation.hpp"

namespace nilrep {

enum class FamilyTag { nap, nabc, heisenberg, abelian };

/// Parameters for one generated family member; all must be >= 1.
/// nap uses (a, p); nabc uses (a, b, c); heisenberg uses m; abelian uses n.
struct FamilySpec {
  FamilyTag tag = FamilyTag::abelian;
  std::int64_t a = 0, b = 0, c = 0, p = 0, m = 0, n = 0;

  /// Canonical algebra name, e.g. "nap(a=2,p=2)" or "nabc(a=1,b=2,c=1)".
  std::string name() const;
};

/// Inverse of FamilySpec::name().
std::optional<FamilySpec> parse_family_name(std::string_view name);

/// Generated algebra together with its defining matrix representation.
struct FamilyInstance {
  std::shared_ptr<const LieAlgebra> algebra;
  Representation representation;
};

/// Linear Lie algebra spanned by the given dimV x dimV matrices, with its
/// inclusion as the representation. Throws InputError when the matrices are
/// dependent or not closed under the commutator.
FamilyInstance linear_lie_algebra(std::string name, std::size_t space_dim,
                                  std::vector<std::string> basis_names,
                                  std::vector<Matrix> basis);

/// Strictly block upper triangular matrices with p+1 diagonal blocks of size a.
/// Basis: blocks (i, j), i < j, in lexicographic order; row-major inside a block.
FamilyInstance make_nap(std::int64_t a, std::int64_t p);

/// Blocks A_ab, A_ac, A_bc of the 3x3 block pattern, in that order,
/// row-major inside each block.
FamilyInstance make_nabc(std::int64_t a, std::int64_t b, std::int64_t c);

/// Heisenberg algebra of dimension 2m+1 on k^{m+2}: x_i = E_{1,i+1},
/// y_i = E_{i+1,m+2}, z = E_{1,m+2}.
FamilyInstance make_heisenberg(std::int64_t m);

/// Abelian algebra of dimension n acting on k^{n+1} through E_{1,j+1}.
FamilyInstance make_abelian(std::int64_t n);

FamilyInstance make_family(const FamilySpec& spec);

/// Value of mu asserted in the literature for this family member, when one is
/// asserted: (p+1)a for nap; a+b+c for nabc with b = a+c or (a = c, b <= 2a);
/// ceil(2 sqrt(2c)) for nabc with a = b = 1.
std::optional<std::pair<std::int64_t, std::string>> known_mu(const FamilySpec& spec);

}  // namespace nilrep
