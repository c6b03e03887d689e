#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qm/errors.hpp"
#include "qm/rational.hpp"

namespace qm {

// Truncated Laurent series with exact rational coefficients on the lattice
// (1/den)Z:
//
//     f = sum_{i} c[i] * q^{(val + i)/den},   i = 0 .. prec - val - 1.
//
// val and prec are in numerator units (multiples of 1/den). The contract is
// that every coefficient with exponent numerator < prec is stored exactly;
// exponents at or beyond prec are unknown, exponents below val are exact
// zeros. A series that is zero to its whole known range is stored with
// val == prec and an empty coefficient vector.
//
// Every constructor and operation normalizes the representation: leading
// zeros are trimmed so val points at the first nonzero coefficient, and the
// lattice denominator is reduced by gcd(den, all nonzero numerators), which
// changes no exponent. In particular series whose support is integral end
// up with den == 1 no matter how they were produced.
class LaurentSeries {
 public:
  LaurentSeries() : den_(1), val_(0), prec_(0) {}

  // storage covers exponent numerators [val, val + c.size()); normalized
  static LaurentSeries from_raw(long den, long val, std::vector<Rational> c);
  static LaurentSeries zero(long prec, long den = 1);
  static LaurentSeries constant(const Rational& c, long prec);
  // c * q^{num/den}, known through numerator precision prec
  static LaurentSeries monomial(const Rational& c, long num, long den, long prec);

  long lattice_den() const { return den_; }
  long storage_val() const { return val_; }
  long precision() const { return prec_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const { return c_.empty(); }
  // numerator of the lowest nonzero exponent; throws on an all-zero series
  long valuation() const;
  const Rational& leading_coeff() const;

  // coefficient of q^{num/den} for the current den; exact zero below the
  // valuation, InsufficientPrecisionError at or beyond prec
  const Rational& coeff_num(long num) const;
  // coefficient of the integer power q^m
  const Rational& coeff_q(long m) const;
  // largest integer m such that every coefficient of q^1..q^m is known
  long known_q_terms() const;

  std::string display(long max_terms = 12) const;

 private:
  void normalize();

  long den_;
  long val_;
  long prec_;
  std::vector<Rational> c_;
};

// arithmetic; mixed lattices are rescaled to the lcm internally
LaurentSeries add(const LaurentSeries& f, const LaurentSeries& g);
LaurentSeries sub(const LaurentSeries& f, const LaurentSeries& g);
LaurentSeries negate(const LaurentSeries& f);
LaurentSeries mul(const LaurentSeries& f, const LaurentSeries& g);
LaurentSeries mul_scalar(const LaurentSeries& f, const Rational& c);
LaurentSeries add_scalar(const LaurentSeries& f, const Rational& c);

// multiplicative inverse with f * result = 1 + O(q^{target/den});
// target is in numerator units of f's lattice. Throws
// ZeroLeadingCoefficientError on a zero series and
// InsufficientPrecisionError if f cannot support the target.
LaurentSeries invert(const LaurentSeries& f, long target);

// f / g at the best precision the operands support
LaurentSeries divide(const LaurentSeries& f, const LaurentSeries& g);

// f^e for e >= 0 (binary powering)
LaurentSeries power(const LaurentSeries& f, long e);

// U_n: keeps exponent numerators divisible by n and divides them by n;
// precision floor(prec/n)
LaurentSeries u_operator(const LaurentSeries& f, long n);

// q -> q^n: multiplies exponent numerators by n; precision n * prec
LaurentSeries dilate(const LaurentSeries& f, long n);

// inverse of dilate; throws NonDivisibleExponentError if some nonzero
// coefficient sits on an exponent numerator not divisible by n
LaurentSeries undilate(const LaurentSeries& f, long n);

// z -> z + 1/2 on an integer-exponent series: a_m -> (-1)^m a_m.
// Throws FractionalLatticeError when the support is not integral.
LaurentSeries negate_q(const LaurentSeries& f);

// a_m -> chi(m) a_m on an integer-exponent series
LaurentSeries twist(const LaurentSeries& f, const std::function<int(long)>& chi);

// drop knowledge beyond numerator precision `prec`
LaurentSeries truncate(const LaurentSeries& f, long prec);

// equality of all coefficients of q^m for m_lo <= m <= m_hi (integer
// exponents; fractional support in that window counts as inequality);
// throws InsufficientPrecisionError if either side knows less than m_hi
bool agree_on_range(const LaurentSeries& a, const LaurentSeries& b, long m_lo, long m_hi);

inline LaurentSeries operator+(const LaurentSeries& f, const LaurentSeries& g) { return add(f, g); }
inline LaurentSeries operator-(const LaurentSeries& f, const LaurentSeries& g) { return sub(f, g); }
inline LaurentSeries operator-(const LaurentSeries& f) { return negate(f); }
inline LaurentSeries operator*(const LaurentSeries& f, const LaurentSeries& g) { return mul(f, g); }
inline LaurentSeries operator*(const LaurentSeries& f, const Rational& c) { return mul_scalar(f, c); }
inline LaurentSeries operator*(const Rational& c, const LaurentSeries& f) { return mul_scalar(f, c); }

}  // namespace qm
