#pragma once

#include <cstdint>
#include <string>

#include "nilrep/rational.hpp"

namespace nilrep {

/// sqrt(radicand) - coeff * sqrt(inner), with radicand, inner, coeff >= 0.
/// Every closed-form bound has this shape, which allows exact ceilings and
/// comparisons without trusting floating point.
struct RadicalExpr {
  Rational radicand;
  Rational coeff;
  Rational inner;

  double value() const;
  /// True when value() <= s, decided exactly.
  bool at_most(std::int64_t s) const;
  /// Smallest integer >= value(), decided exactly.
  std::int64_t ceil() const;
  /// value() >= sqrt(other), decided exactly.
  bool dominates_sqrt(const Rational& other) const;
};

enum class SecondCase { case1, case2, p0_equals_2 };
std::string to_string(SecondCase c);

struct SecondBound {
  RadicalExpr value;
  SecondCase which = SecondCase::case1;
};

/// sqrt(2(p0+1)/p0 * n1). Throws InputError unless p0, n1 >= 1.
RadicalExpr closed_bound_first(std::int64_t p0, std::int64_t n1);

/// Two-constraint relaxation: case1 when n1 >= ((p0-1)^2 + p0^2) np0, else the
/// p0 = 2 formula or case2. Throws InputError unless p0 >= 2 and n1 >= np0 >= 1.
SecondBound closed_bound_second(std::int64_t p0, std::int64_t n1, std::int64_t np0);

/// Explicit bound from the nilpotency step p, dim n and dim of the center.
/// Equal to closed_bound_second(p, dim_n, dim_z).
SecondBound theorem_mainbound(std::int64_t p, std::int64_t dim_n, std::int64_t dim_z);

/// Formats with six digits after the decimal point.
std::string format_decimal(double x);

}  // namespace nilrep
