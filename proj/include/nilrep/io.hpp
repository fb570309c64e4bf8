#pragma once

#include <memory>
#include <json.hpp>
#include <string>

#include "nilrep/filtration.hpp"
#include "nilrep/representation.hpp"

namespace nilrep {

using Json = nlohmann::ordered_json;

/// Reads and parses a JSON file. Throws InputError when the file cannot be
/// read or is not JSON.
Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);
/// Two-space indented text with a trailing newline.
std::string dump(const Json& j);

/// Rationals are written as "num/den" text; integers are accepted on input.
Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);
Json vector_to_json(const Vector& v);
Vector vector_from_json(const Json& j, std::size_t expected_size);

/// {"name", "dim", "basis", "brackets": [{"i", "j", "terms": [[k, "c"]]}]}
/// with 1-based indices and i < j.
Json algebra_to_json(const LieAlgebra& alg);
/// Throws InputError on malformed input and, when `check_jacobi` is set, on
/// the first Jacobi violation.
LieAlgebra algebra_from_json(const Json& j, bool check_jacobi = true);

/// {"algebra": <inline>, "dimV", "matrices": [[[..row..], ...], ...]}
Json representation_to_json(const Representation& rep);
Representation representation_from_json(const Json& j);

/// Either a bare array of levels or {"p0"?: int, "chain": [levels]}; each
/// level is a list of coordinate vectors in the algebra basis. Without p0
/// the largest admissible central level is taken. Throws InputError on
/// malformed or invalid filtrations.
Filtration filtration_from_json(const Json& j, std::shared_ptr<const LieAlgebra> alg);
Json filtration_to_json(const Filtration& f);

}  // namespace nilrep
