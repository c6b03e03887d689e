#include "qm/rational.hpp"

#include <numeric>

namespace qm {

Rational::Rational(long num, long den) {
  if (den == 0) throw Error("rational with zero denominator");
  v_ = mpq_class(static_cast<signed long>(num), static_cast<signed long>(den));
  v_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (sgn(den) == 0) throw Error("rational with zero denominator");
  v_ = mpq_class(num) / mpq_class(den);
}

mpq_class Rational::from_ll(long long n) {
  mpz_class z;
  // mpz has no long long setter on LP64 either way; go through the
  // decimal string so the constructor is portable
  z = mpz_class(std::to_string(n));
  return mpq_class(z);
}

Rational Rational::parse(std::string_view s) {
  if (s.empty()) throw ParseError("empty rational literal");
  std::string buf(s);
  try {
    mpq_class v(buf);
    if (sgn(v.get_den()) == 0) throw ParseError("zero denominator in '" + buf + "'");
    v.canonicalize();
    Rational r;
    r.v_ = v;
    return r;
  } catch (const std::invalid_argument&) {
    throw ParseError("bad rational literal '" + buf + "'");
  }
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error("division by zero rational");
  v_ /= o.v_;
  return *this;
}

long Rational::to_long() const {
  if (!is_integer()) throw Error("rational " + str() + " is not an integer");
  if (!v_.get_num().fits_slong_p()) throw Error("integer " + str() + " does not fit a long");
  return v_.get_num().get_si();
}

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

int kronecker_symbol(long long a, long long n) {
  mpz_class za(std::to_string(a));
  mpz_class zn(std::to_string(n));
  return mpz_kronecker(za.get_mpz_t(), zn.get_mpz_t());
}

int psi_character(long long e, long long level) {
  if (level <= 0) throw Error("character level must be positive");
  long long r = e % level;
  if (r < 0) r += level;
  if (std::gcd(r, level) != 1)
    throw NonUnitError("psi(" + std::to_string(e) + ") undefined: not a unit mod " +
                       std::to_string(level));
  long long minus_one = (level - 1) % level;
  return (r == 1 % level || r == minus_one) ? 1 : -1;
}

}  // namespace qm
