#include <vector>

#include "doctest.h"
#include "qm/atoms.hpp"
#include "qm/errors.hpp"
#include "qm/series.hpp"

using namespace qm;

namespace {

LaurentSeries sample(long val, std::vector<Rational> c, long den = 1) {
  return LaurentSeries::from_raw(den, val, std::move(c));
}

}  // namespace

TEST_CASE("construction trims leading zeros and reduces the lattice") {
  LaurentSeries f = sample(-3, {0, 0, 5, 0, 7});
  CHECK(f.storage_val() == -1);
  CHECK(f.valuation() == -1);
  CHECK(f.precision() == 2);
  CHECK(f.leading_coeff() == Rational(5));
  CHECK(f.coeff_q(0) == Rational(0));
  CHECK(f.coeff_q(1) == Rational(7));

  // support sits on multiples of 3 of a denominator-6 lattice: reduces to 2
  LaurentSeries g = sample(0, {1, 0, 0, 4, 0, 0, 9}, 6);
  CHECK(g.lattice_den() == 2);
  CHECK(g.coeff_num(1) == Rational(4));  // was numerator 3 on /6
  CHECK(g.precision() == 3);

  LaurentSeries z = sample(2, {0, 0, 0});
  CHECK(z.is_zero());
  CHECK(z.precision() == 5);
  CHECK_THROWS_AS(z.valuation(), ZeroLeadingCoefficientError);
}

TEST_CASE("coefficient access respects the knowledge window") {
  LaurentSeries f = sample(-1, {1, 0, 3});  // q^-1 + 3 q, known below q^2
  CHECK(f.coeff_q(-5) == Rational(0));
  CHECK(f.coeff_q(1) == Rational(3));
  CHECK_THROWS_AS(f.coeff_q(2), InsufficientPrecisionError);
  CHECK(f.known_q_terms() == 1);
}

TEST_CASE("addition and multiplication precision rules") {
  LaurentSeries f = sample(-1, {1, 0, 2, 5});       // prec 3
  LaurentSeries g = sample(0, {4, 1});              // prec 2
  LaurentSeries s = add(f, g);
  CHECK(s.precision() == 2);                        // min
  CHECK(s.coeff_q(0) == Rational(4));
  CHECK(s.coeff_q(1) == Rational(3));

  // mul: P = min(P_f + v_g, P_g + v_f) = min(3 + 0, 2 - 1) = 1
  LaurentSeries p = mul(f, g);
  CHECK(p.precision() == 1);
  CHECK(p.coeff_q(-1) == Rational(4));
  CHECK(p.coeff_q(0) == Rational(1));

  LaurentSeries d = sub(f, f);
  CHECK(d.is_zero());
  CHECK(mul_scalar(f, Rational(0)).is_zero());
  CHECK(add_scalar(f, Rational(7)).coeff_q(0) == Rational(7));
}

TEST_CASE("inversion reproduces the geometric series") {
  // (1 - q)^-1 = 1 + q + q^2 + ...
  LaurentSeries f = sample(0, {1, -1, 0, 0, 0, 0, 0, 0});
  LaurentSeries inv = invert(f, 8);
  for (long m = 0; m < 8; ++m) CHECK(inv.coeff_q(m) == Rational(1));

  LaurentSeries check = mul(f, inv);
  CHECK(check.coeff_q(0) == Rational(1));
  for (long m = 1; m < 7; ++m) CHECK(check.coeff_q(m) == Rational(0));

  // inverting around a pole: (q^-1 (1 - q))^-1 = q + q^2 + ...
  LaurentSeries g = sample(-1, {1, -1, 0, 0, 0, 0});
  LaurentSeries ginv = invert(g, 6);
  CHECK(ginv.valuation() == 1);
  CHECK(ginv.coeff_q(1) == Rational(1));
  CHECK(ginv.coeff_q(2) == Rational(1));

  CHECK_THROWS_AS(invert(LaurentSeries::zero(4), 2), ZeroLeadingCoefficientError);
}

TEST_CASE("divide tracks the best reachable precision") {
  LaurentSeries num = sample(0, {1, 1, 1, 1, 1, 1});
  LaurentSeries den = sample(0, {1, 1, 0, 0, 0, 0});
  LaurentSeries q = divide(num, den);
  CHECK(q.coeff_q(0) == Rational(1));
  CHECK(q.coeff_q(1) == Rational(0));
  CHECK(q.coeff_q(2) == Rational(1));
  CHECK(q.coeff_q(3) == Rational(0));
}

TEST_CASE("power by repeated squaring") {
  LaurentSeries f = sample(0, {1, 1, 0, 0, 0, 0, 0});  // 1 + q
  LaurentSeries f4 = power(f, 4);
  CHECK(f4.coeff_q(0) == Rational(1));
  CHECK(f4.coeff_q(1) == Rational(4));
  CHECK(f4.coeff_q(2) == Rational(6));
  CHECK(f4.coeff_q(3) == Rational(4));
  CHECK(f4.coeff_q(4) == Rational(1));
  CHECK(power(f, 0).coeff_q(0) == Rational(1));
}

TEST_CASE("index operators: U_n, dilate, undilate") {
  LaurentSeries f = sample(-1, {1, 0, 2, 3, 4, 5, 6, 7});  // prec 7
  LaurentSeries u = u_operator(f, 3);
  CHECK(u.precision() == 2);  // floor(7/3)
  CHECK(u.coeff_q(0) == Rational(0));  // original exponent 0
  CHECK(u.coeff_q(1) == Rational(4));  // original exponent 3

  LaurentSeries d = dilate(f, 2);
  CHECK(d.precision() == 14);
  CHECK(d.coeff_q(-2) == Rational(1));
  CHECK(d.coeff_q(-1) == Rational(0));
  CHECK(d.coeff_q(2) == Rational(2));
  CHECK(agree_on_range(undilate(d, 2), f, -1, 6));

  CHECK_THROWS_AS(undilate(f, 2), NonDivisibleExponentError);
}

TEST_CASE("half-period shift and twisting") {
  LaurentSeries f = sample(-1, {1, 0, 2, 3, 4});
  LaurentSeries g = negate_q(f);
  CHECK(g.coeff_q(-1) == Rational(-1));
  CHECK(g.coeff_q(1) == Rational(-2));
  CHECK(g.coeff_q(2) == Rational(3));
  CHECK(g.coeff_q(3) == Rational(-4));

  // odd part extraction: (f - negate_q(f))/2 keeps odd exponents
  LaurentSeries odd = mul_scalar(sub(f, g), Rational(1, 2));
  CHECK(odd.coeff_q(-1) == Rational(1));
  CHECK(odd.coeff_q(2) == Rational(0));
  CHECK(odd.coeff_q(3) == Rational(4));

  // the eta series lives on a denominator-24 lattice
  CHECK_THROWS_AS(negate_q(eta_series(4)), FractionalLatticeError);

  LaurentSeries twisted = twist(f, [](long m) { return m % 3 == 0 ? 1 : 0; });
  CHECK(twisted.coeff_q(-1) == Rational(0));
  CHECK(twisted.coeff_q(3) == Rational(4));
}

TEST_CASE("truncate and agreement checks") {
  LaurentSeries f = sample(0, {1, 2, 3, 4});
  LaurentSeries g = truncate(f, 2);
  CHECK(g.precision() == 2);
  CHECK_THROWS_AS(g.coeff_q(2), InsufficientPrecisionError);
  CHECK(agree_on_range(f, g, 0, 1));
  CHECK_THROWS_AS(agree_on_range(f, g, 0, 3), InsufficientPrecisionError);
  LaurentSeries h = sample(0, {1, 2, 99, 4});
  CHECK(agree_on_range(f, h, 0, 1));
  CHECK(!agree_on_range(f, h, 0, 3));
}
