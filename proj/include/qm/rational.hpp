#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

#include "qm/errors.hpp"

namespace qm {

// Exact rational scalar backed by GMP. Kept canonical at all times:
// gcd(num, den) = 1 and den >= 1, so equality is plain structural equality.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}
  Rational(long n) : v_(static_cast<signed long>(n)) {}
  Rational(long long n) : v_(from_ll(n)) {}
  Rational(long num, long den);
  explicit Rational(const mpz_class& n) : v_(n) {}
  Rational(const mpz_class& num, const mpz_class& den);

  // accepts "744", "-1/2", "25/-5" (canonicalized on the way in)
  static Rational parse(std::string_view s);

  const mpz_class& num() const { return v_.get_num(); }
  const mpz_class& den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  // exact conversion; throws unless the value is an integer fitting a long
  long to_long() const;

  // "744", "-1/2"; integers print without the denominator
  std::string str() const;

  Rational operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
  }

  Rational& operator+=(const Rational& o) {
    v_ += o.v_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    v_ -= o.v_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    v_ *= o.v_;
    return *this;
  }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
         : c > 0 ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
  }

 private:
  static mpq_class from_ll(long long n);
  mpq_class v_;
};

// Kronecker symbol (a|n), total extension of the Jacobi symbol to all
// integer pairs: (a|2) is 0 for even a, +1 for a = +-1 mod 8, -1 for
// a = +-3 mod 8; (a|-1) is the sign of a; (a|0) is 1 iff a = +-1.
int kronecker_symbol(long long a, long long n);

// character on (Z/N)^* that is +1 exactly on the residues +-1 mod N and
// -1 on the remaining units; throws NonUnitError off the unit group
int psi_character(long long e, long long level);

struct CharacterPsi {
  long long level;
  int operator()(long long e) const { return psi_character(e, level); }
};

}  // namespace qm
