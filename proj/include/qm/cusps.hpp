#pragma once

#include <string>
#include <vector>

#include "qm/rational.hpp"

namespace qm {

// cusp of the upper half plane boundary, reduced fraction num/den with
// den >= 0; infinity is 1/0
struct CuspLabel {
  long num = 1;
  long den = 0;

  bool is_infinity() const { return den == 0; }
  std::string str() const;
  friend bool operator==(const CuspLabel&, const CuspLabel&) = default;
};

CuspLabel make_cusp(long num, long den);

// level-N equivalence of cusps a/c ~ a'/c': some integer n and sign s give
// a' = s(a + n c), c' = s c mod N
bool cusps_equivalent(long N, const CuspLabel& a, const CuspLabel& b);

// width of the cusp class: N / gcd(den, N). Level 4 is the genuine
// exception to that formula and is rejected.
long cusp_width(long N, const CuspLabel& c);

// one representative per equivalence class among infinity and the reduced
// fractions in [0, 1) with denominator <= max_den (default: the level)
std::vector<CuspLabel> inequivalent_cusps(long N, long max_den = 0);

// element of the quartic algebra Q(i, sqrt3): a + b i + c sqrt3 + d i sqrt3
struct QuadValue {
  Rational a, b, c, d;

  bool is_zero() const { return a.is_zero() && b.is_zero() && c.is_zero() && d.is_zero(); }
  bool is_rational() const { return b.is_zero() && c.is_zero() && d.is_zero(); }
  std::string str() const;
  friend bool operator==(const QuadValue&, const QuadValue&) = default;
};

QuadValue qv_add(const QuadValue& x, const QuadValue& y);
QuadValue qv_sub(const QuadValue& x, const QuadValue& y);
QuadValue qv_mul(const QuadValue& x, const QuadValue& y);
QuadValue qv_neg(const QuadValue& x);

struct CuspValue {
  CuspLabel cusp;
  long width = 0;
  bool is_pole = false;  // the generator has its pole at infinity
  QuadValue value;       // meaningful when !is_pole
};

// exact boundary values of the normalized level-12 generator at its ten
// cusp classes, with class widths
const std::vector<CuspValue>& cusp_value_table_level12();

// prod over finite-value classes of (x - value)^width, expanded in the
// quartic algebra; ascending coefficients
std::vector<QuadValue> expand_cusp_product(const std::vector<CuspValue>& table);

// the same product in its known integer form
// (x^2-2x-2)^12 (x+2)^6 (x^2+2x+2)^4 (x^2+x+1)^3 x^2 (x+1), ascending
std::vector<Rational> cusp_product_polynomial_level12();

}  // namespace qm
