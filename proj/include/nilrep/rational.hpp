#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace nilrep {

/// Exact scalar field. GMP keeps numerator/denominator coprime with a
/// positive denominator once canonicalized; every constructor path here
/// canonicalizes.
using Rational = mpq_class;

/// Coordinate vector over the rationals.
using Vector = std::vector<Rational>;

/// Parses "num/den" or "num". Throws InputError on malformed text or a zero
/// denominator.
Rational parse_rational(std::string_view text);

/// Formats as "num/den", omitting the denominator when it is 1.
std::string to_string(const Rational& q);

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const Vector& v);

/// y += a * x
void axpy(Vector& y, const Rational& a, const Vector& x);

}  // namespace nilrep
