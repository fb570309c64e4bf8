#include "nilrep/rational.hpp"

#include <cctype>
#include <string>

#include "nilrep/errors.hpp"

namespace nilrep {

namespace {

bool valid_integer_text(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  const auto den = slash == std::string_view::npos ? std::string_view{"1"}
                                                   : text.substr(slash + 1);
  if (!valid_integer_text(num) || !valid_integer_text(den) || den.front() == '-') {
    throw InputError("malformed rational: '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num.front() == '+' ? num.substr(1) : num), 10);
  mpz_class d(std::string(den.front() == '+' ? den.substr(1) : den), 10);
  if (d == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n);
  v[i] = 1;
  return v;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

void axpy(Vector& y, const Rational& a, const Vector& x) {
  if (sgn(a) == 0) return;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (sgn(x[i]) != 0) y[i] += a * x[i];
  }
}

}  // namespace nilrep
