#include "nilrep/families.hpp"

#include <regex>
#include <string>

#include "nilrep/errors.hpp"

namespace nilrep {

namespace {

void require_positive(std::int64_t v, const char* what) {
  if (v < 1) throw InputError(std::string("family parameter ") + what + " must be >= 1");
}

struct Position {
  std::size_t row, col;
};

std::string entry_name(const Position& pos) {
  return "E" + std::to_string(pos.row + 1) + "," + std::to_string(pos.col + 1);
}

FamilyInstance elementary(std::string name, std::size_t space_dim,
                          const std::vector<Position>& positions) {
  std::vector<Matrix> basis;
  std::vector<std::string> names;
  for (const auto& pos : positions) {
    basis.push_back(Matrix::unit(space_dim, space_dim, pos.row, pos.col));
    names.push_back(entry_name(pos));
  }
  return linear_lie_algebra(std::move(name), space_dim, std::move(names), std::move(basis));
}

// Row-major positions of the block (bi, bj) in a grid with block offsets.
void push_block(std::vector<Position>& out, std::size_t row0, std::size_t rows, std::size_t col0,
                std::size_t cols) {
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) out.push_back({row0 + r, col0 + c});
}

std::int64_t ceil_two_sqrt_two_c(std::int64_t c) {
  // Smallest s with s^2 >= 8c.
  std::int64_t s = 0;
  while (s * s < 8 * c) ++s;
  return s;
}

}  // namespace

std::string FamilySpec::name() const {
  switch (tag) {
    case FamilyTag::nap:
      return "nap(a=" + std::to_string(a) + ",p=" + std::to_string(p) + ")";
    case FamilyTag::nabc:
      return "nabc(a=" + std::to_string(a) + ",b=" + std::to_string(b) + ",c=" +
             std::to_string(c) + ")";
    case FamilyTag::heisenberg:
      return "heisenberg(m=" + std::to_string(m) + ")";
    case FamilyTag::abelian:
      return "abelian(n=" + std::to_string(n) + ")";
  }
  return {};
}

std::optional<FamilySpec> parse_family_name(std::string_view name) {
  static const std::regex pattern(
      R"((nap|nabc|heisenberg|abelian)\(([a-z]=\d{1,9}(?:,[a-z]=\d{1,9})*)\))");
  static const std::regex param(R"(([a-z])=(\d+))");
  const std::string s(name);
  std::smatch m;
  if (!std::regex_match(s, m, pattern)) return std::nullopt;
  FamilySpec spec;
  const std::string tag = m[1];
  spec.tag = tag == "nap"          ? FamilyTag::nap
             : tag == "nabc"       ? FamilyTag::nabc
             : tag == "heisenberg" ? FamilyTag::heisenberg
                                   : FamilyTag::abelian;
  const std::string params = m[2];
  for (auto it = std::sregex_iterator(params.begin(), params.end(), param);
       it != std::sregex_iterator(); ++it) {
    const std::int64_t v = std::stoll((*it)[2]);
    switch ((*it)[1].str()[0]) {
      case 'a': spec.a = v; break;
      case 'b': spec.b = v; break;
      case 'c': spec.c = v; break;
      case 'p': spec.p = v; break;
      case 'm': spec.m = v; break;
      case 'n': spec.n = v; break;
      default: return std::nullopt;
    }
  }
  // Round-trip rejects parameter sets that do not belong to the tag.
  if (spec.name() != s) return std::nullopt;
  return spec;
}

FamilyInstance linear_lie_algebra(std::string name, std::size_t space_dim,
                                  std::vector<std::string> basis_names,
                                  std::vector<Matrix> basis) {
  std::vector<Vector> flat;
  for (const auto& m : basis) flat.push_back(m.flatten());
  std::optional<CoordinateSystem> coords;
  try {
    coords.emplace(space_dim * space_dim, flat);
  } catch (const std::invalid_argument&) {
    throw InputError("matrices spanning '" + name + "' are linearly dependent");
  }
  std::vector<StructureConstant> constants;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      const Matrix br = commutator(basis[i], basis[j]);
      if (br.is_zero()) continue;
      const auto c = coords->coordinates(br.flatten());
      if (!c) throw InputError("matrices spanning '" + name + "' are not closed under brackets");
      for (std::size_t k = 0; k < c->size(); ++k) {
        if (sgn((*c)[k]) != 0) constants.push_back({i, j, k, (*c)[k]});
      }
    }
  }
  auto algebra = std::make_shared<const LieAlgebra>(std::move(name), std::move(basis_names),
                                                    constants);
  return {algebra, Representation(algebra, space_dim, std::move(basis))};
}

FamilyInstance make_nap(std::int64_t a, std::int64_t p) {
  require_positive(a, "a");
  require_positive(p, "p");
  const auto sa = static_cast<std::size_t>(a);
  const auto blocks = static_cast<std::size_t>(p) + 1;
  std::vector<Position> positions;
  for (std::size_t bi = 0; bi < blocks; ++bi)
    for (std::size_t bj = bi + 1; bj < blocks; ++bj) push_block(positions, bi * sa, sa, bj * sa, sa);
  return elementary(FamilySpec{.tag = FamilyTag::nap, .a = a, .p = p}.name(), blocks * sa,
                    positions);
}

FamilyInstance make_nabc(std::int64_t a, std::int64_t b, std::int64_t c) {
  require_positive(a, "a");
  require_positive(b, "b");
  require_positive(c, "c");
  const auto sa = static_cast<std::size_t>(a), sb = static_cast<std::size_t>(b),
             sc = static_cast<std::size_t>(c);
  std::vector<Position> positions;
  push_block(positions, 0, sa, sa, sb);        // A_ab
  push_block(positions, 0, sa, sa + sb, sc);   // A_ac
  push_block(positions, sa, sb, sa + sb, sc);  // A_bc
  return elementary(FamilySpec{.tag = FamilyTag::nabc, .a = a, .b = b, .c = c}.name(),
                    sa + sb + sc, positions);
}

FamilyInstance make_heisenberg(std::int64_t m) {
  require_positive(m, "m");
  const auto sm = static_cast<std::size_t>(m);
  std::vector<Position> positions;
  for (std::size_t i = 1; i <= sm; ++i) positions.push_back({0, i});
  for (std::size_t i = 1; i <= sm; ++i) positions.push_back({i, sm + 1});
  positions.push_back({0, sm + 1});
  return elementary(FamilySpec{.tag = FamilyTag::heisenberg, .m = m}.name(), sm + 2, positions);
}

FamilyInstance make_abelian(std::int64_t n) {
  require_positive(n, "n");
  const auto sn = static_cast<std::size_t>(n);
  std::vector<Position> positions;
  for (std::size_t j = 1; j <= sn; ++j) positions.push_back({0, j});
  return elementary(FamilySpec{.tag = FamilyTag::abelian, .n = n}.name(), sn + 1, positions);
}

FamilyInstance make_family(const FamilySpec& spec) {
  switch (spec.tag) {
    case FamilyTag::nap:
      return make_nap(spec.a, spec.p);
    case FamilyTag::nabc:
      return make_nabc(spec.a, spec.b, spec.c);
    case FamilyTag::heisenberg:
      return make_heisenberg(spec.m);
    case FamilyTag::abelian:
      return make_abelian(spec.n);
  }
  throw InputError("unknown family tag");
}

std::optional<std::pair<std::int64_t, std::string>> known_mu(const FamilySpec& spec) {
  if (spec.tag == FamilyTag::nap && spec.a >= 1 && spec.p >= 1)
    return std::pair{(spec.p + 1) * spec.a, std::string("mu(n_{a,p}) = (p+1)a")};
  if (spec.tag == FamilyTag::nabc && spec.a >= 1 && spec.b >= 1 && spec.c >= 1) {
    if (spec.b == spec.a + spec.c || (spec.a == spec.c && spec.b <= 2 * spec.a))
      return std::pair{spec.a + spec.b + spec.c,
                       std::string("mu(n_{a,b,c}) = a+b+c when b = a+c, or a = c and b <= 2a")};
    if (spec.a == 1 && spec.b == 1)
      return std::pair{ceil_two_sqrt_two_c(spec.c), std::string("mu(n_{1,1,c}) = ceil(2 sqrt(2c))")};
  }
  return std::nullopt;
}

}  // namespace nilrep
