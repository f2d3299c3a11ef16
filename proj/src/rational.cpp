#include "dompack/rational.hpp"

#include <stdexcept>

namespace dompack {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.sign() == 0) throw std::domain_error("Rational: division by zero");
  value_ /= o.value_;
  return *this;
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  mpq_class q;
  if (s.empty() || q.set_str(s, 10) != 0 || q.get_den() == 0)
    throw std::invalid_argument("not a rational number: '" + s + "'");
  q.canonicalize();
  return Rational(q);
}

Rational harmonic(int k) {
  Rational h;
  for (int i = 1; i <= k; ++i) h += Rational(1, i);
  return h;
}

}  // namespace dompack
