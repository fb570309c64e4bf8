#include "nilrep/io.hpp"

#include <fstream>

#include "nilrep/errors.hpp"

namespace nilrep {

namespace {

std::size_t index_from_json(const Json& j, std::size_t limit, const char* what) {
  if (!j.is_number_integer()) throw InputError(std::string(what) + " must be an integer");
  const auto v = j.get<std::int64_t>();
  if (v < 1 || static_cast<std::size_t>(v) > limit)
    throw InputError(std::string(what) + " " + std::to_string(v) + " out of range 1.." +
                     std::to_string(limit));
  return static_cast<std::size_t>(v - 1);
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw InputError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

Matrix matrix_from_json(const Json& j, std::size_t n) {
  if (!j.is_array() || j.size() != n) throw InputError("matrix must have " + std::to_string(n) + " rows");
  Matrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    const Vector row = vector_from_json(j[r], n);
    for (std::size_t c = 0; c < n; ++c) m(r, c) = row[c];
  }
  return m;
}

}  // namespace

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << dump(j);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json rational_to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return parse_rational(std::to_string(j.get<std::int64_t>()));
  throw InputError("expected a rational as \"num/den\" text or an integer, got " + j.dump());
}

Json vector_to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(rational_to_json(x));
  return out;
}

Vector vector_from_json(const Json& j, std::size_t expected_size) {
  if (!j.is_array() || j.size() != expected_size)
    throw InputError("expected a vector of length " + std::to_string(expected_size));
  Vector v;
  for (const auto& x : j) v.push_back(rational_from_json(x));
  return v;
}

Json algebra_to_json(const LieAlgebra& alg) {
  Json out;
  out["name"] = alg.name();
  out["dim"] = alg.dim();
  out["basis"] = alg.basis_names();
  Json brackets = Json::array();
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    for (std::size_t j = i + 1; j < alg.dim(); ++j) {
      const auto& terms = alg.bracket_terms(i, j);
      if (terms.empty()) continue;
      Json t = Json::array();
      for (const auto& term : terms) t.push_back(Json::array({term.index + 1, to_string(term.coeff)}));
      brackets.push_back({{"i", i + 1}, {"j", j + 1}, {"terms", std::move(t)}});
    }
  }
  out["brackets"] = std::move(brackets);
  return out;
}

LieAlgebra algebra_from_json(const Json& j, bool check_jacobi) {
  const Json& dim_j = field(j, "dim");
  if (!dim_j.is_number_integer() || dim_j.get<std::int64_t>() < 0)
    throw InputError("\"dim\" must be a nonnegative integer");
  const auto dim = dim_j.get<std::size_t>();
  std::string name = j.contains("name") ? j.at("name").get<std::string>() : std::string("algebra");
  std::vector<std::string> names;
  if (j.contains("basis")) {
    names = j.at("basis").get<std::vector<std::string>>();
    if (names.size() != dim) throw InputError("\"basis\" has the wrong length");
  } else {
    for (std::size_t i = 0; i < dim; ++i) names.push_back("x" + std::to_string(i + 1));
  }
  std::vector<StructureConstant> constants;
  if (j.contains("brackets")) {
    for (const auto& b : j.at("brackets")) {
      const std::size_t i = index_from_json(field(b, "i"), dim, "bracket index i");
      const std::size_t jj = index_from_json(field(b, "j"), dim, "bracket index j");
      if (i >= jj) throw InputError("bracket entries require i < j");
      for (const auto& t : field(b, "terms")) {
        if (!t.is_array() || t.size() != 2) throw InputError("bracket term must be [k, \"c\"]");
        constants.push_back({i, jj, index_from_json(t[0], dim, "bracket index k"), rational_from_json(t[1])});
      }
    }
  }
  LieAlgebra alg(std::move(name), std::move(names), constants);
  if (check_jacobi) {
    const auto report = validate(alg);
    if (!report.ok()) {
      const auto& v = report.violations.front();
      throw InputError("Jacobi identity fails on basis triple (" + std::to_string(v.i + 1) + ", " +
                       std::to_string(v.j + 1) + ", " + std::to_string(v.k + 1) + ")");
    }
  }
  return alg;
}

Json representation_to_json(const Representation& rep) {
  Json out;
  out["algebra"] = algebra_to_json(rep.algebra());
  out["dimV"] = rep.space_dim();
  Json mats = Json::array();
  for (const auto& m : rep.matrices()) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(vector_to_json(m.row_vector(r)));
    mats.push_back(std::move(rows));
  }
  out["matrices"] = std::move(mats);
  return out;
}

Representation representation_from_json(const Json& j) {
  auto alg = std::make_shared<const LieAlgebra>(algebra_from_json(field(j, "algebra")));
  const Json& dim_j = field(j, "dimV");
  if (!dim_j.is_number_integer() || dim_j.get<std::int64_t>() < 1)
    throw InputError("\"dimV\" must be a positive integer");
  const auto n = dim_j.get<std::size_t>();
  const Json& mats = field(j, "matrices");
  if (!mats.is_array() || mats.size() != alg->dim())
    throw InputError("expected one matrix per basis element (" + std::to_string(alg->dim()) + ")");
  std::vector<Matrix> matrices;
  for (const auto& m : mats) matrices.push_back(matrix_from_json(m, n));
  return Representation(std::move(alg), n, std::move(matrices));
}

Filtration filtration_from_json(const Json& j, std::shared_ptr<const LieAlgebra> alg) {
  const Json& chain_j = j.is_array() ? j : field(j, "chain");
  if (!chain_j.is_array() || chain_j.empty()) throw InputError("filtration chain must be a nonempty list");
  std::vector<Subspace> chain;
  for (const auto& level : chain_j) {
    if (!level.is_array()) throw InputError("each filtration level must be a list of vectors");
    std::vector<Vector> vectors;
    for (const auto& v : level) vectors.push_back(vector_from_json(v, alg->dim()));
    chain.push_back(Subspace::span(alg->dim(), vectors));
  }
  std::size_t p0 = 0;
  if (j.is_object() && j.contains("p0")) {
    const Json& p0_j = j.at("p0");
    if (!p0_j.is_number_integer() || p0_j.get<std::int64_t>() < 1) throw InputError("\"p0\" must be a positive integer");
    p0 = p0_j.get<std::size_t>();
  } else {
    const auto admissible = admissible_p0_set(Filtration(alg, chain, 1));
    if (admissible.empty()) throw InputError("filtration has no level inside the center");
    p0 = admissible.back();
  }
  Filtration f(std::move(alg), std::move(chain), p0);
  const auto report = validate_filtration(f);
  if (!report.ok()) throw InputError("invalid filtration: " + report.issues.front().detail);
  return f;
}

Json filtration_to_json(const Filtration& f) {
  Json chain = Json::array();
  for (const auto& level : f.chain()) {
    Json vs = Json::array();
    for (std::size_t i = 0; i < level.dim(); ++i) vs.push_back(vector_to_json(level.basis_vector(i)));
    chain.push_back(std::move(vs));
  }
  return {{"p0", f.p0()}, {"chain", std::move(chain)}};
}

}  // namespace nilrep
