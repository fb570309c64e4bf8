#include "nilrep/closed_forms.hpp"

#include <cmath>
#include <cstdio>

#include "nilrep/errors.hpp"

namespace nilrep {

namespace {

// Exact sign test for d + e*sqrt(b) >= 0 with b >= 0.
bool nonnegative(const Rational& d, const Rational& e, const Rational& b) {
  if (sgn(e) >= 0) return sgn(d) >= 0 || e * e * b >= d * d;
  return sgn(d) >= 0 && d * d >= e * e * b;
}

Rational q(std::int64_t v) { return Rational(static_cast<long>(v)); }

}  // namespace

double RadicalExpr::value() const {
  return std::sqrt(radicand.get_d()) - coeff.get_d() * std::sqrt(inner.get_d());
}

bool RadicalExpr::at_most(std::int64_t s) const {
  // sqrt(A) <= s + c sqrt(B); the right side must be nonnegative first.
  const Rational t = q(s);
  if (!nonnegative(t, coeff, inner)) return false;
  return nonnegative(t * t + coeff * coeff * inner - radicand, 2 * t * coeff, inner);
}

std::int64_t RadicalExpr::ceil() const {
  auto guess = static_cast<std::int64_t>(std::floor(value()));
  while (!at_most(guess)) ++guess;
  while (at_most(guess - 1)) --guess;
  return guess;
}

bool RadicalExpr::dominates_sqrt(const Rational& other) const {
  // sqrt(A) >= sqrt(F) + c sqrt(B)  <=>  A - F - c^2 B >= 2c sqrt(F B)
  return nonnegative(radicand - other - coeff * coeff * inner, -2 * coeff, other * inner);
}

std::string to_string(SecondCase c) {
  switch (c) {
    case SecondCase::case1:
      return "case1";
    case SecondCase::case2:
      return "case2";
    case SecondCase::p0_equals_2:
      return "p0_equals_2";
  }
  return {};
}

RadicalExpr closed_bound_first(std::int64_t p0, std::int64_t n1) {
  if (p0 < 1 || n1 < 1) throw InputError("closed_bound_first requires p0 >= 1 and n1 >= 1");
  Rational a = q(2 * (p0 + 1) * n1) / q(p0);
  a.canonicalize();
  return {a, 0, 0};
}

SecondBound closed_bound_second(std::int64_t p0, std::int64_t n1, std::int64_t np0) {
  if (p0 < 2) throw InputError("closed_bound_second requires p0 >= 2");
  if (np0 < 1 || n1 < np0) throw InputError("closed_bound_second requires n1 >= n_p0 >= 1");
  const Rational P = q(p0), N1 = q(n1), M = q(np0);
  if (n1 >= ((p0 - 1) * (p0 - 1) + p0 * p0) * np0) {
    Rational a = 2 * P * (N1 - M) / (P - 1);
    a.canonicalize();
    return {{a, 0, 0}, SecondCase::case1};
  }
  if (p0 == 2) {
    Rational a = (N1 + 3 * M) * (N1 + 3 * M) / (4 * M);
    a.canonicalize();
    return {{a, 0, 0}, SecondCase::p0_equals_2};
  }
  Rational a = 2 * (P - 1) / (P - 2) * N1 + 2 * P * (P - 1) / ((P - 2) * (P - 2)) * M;
  Rational c = 2 / (P - 2);
  a.canonicalize();
  c.canonicalize();
  return {{a, c, M}, SecondCase::case2};
}

SecondBound theorem_mainbound(std::int64_t p, std::int64_t dim_n, std::int64_t dim_z) {
  if (p < 2) throw InputError("the explicit center bound requires step p >= 2");
  return closed_bound_second(p, dim_n, dim_z);
}

std::string format_decimal(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

}  // namespace nilrep
