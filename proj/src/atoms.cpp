#include "qm/atoms.hpp"

#include <algorithm>
#include <cstdlib>

namespace qm {

namespace {

// divisor power sums sigma_k(1..n-1) for k in {1,3}; sigma[0] unused
std::vector<long long> divisor_sums(long n, int k) {
  std::vector<long long> s(static_cast<size_t>(std::max<long>(n, 1)), 0);
  for (long d = 1; d < n; ++d) {
    long long dk = d;
    if (k == 3) dk = dk * d * d;
    for (long m = d; m < n; m += d) s[static_cast<size_t>(m)] += dk;
  }
  return s;
}

}  // namespace

LaurentSeries eta_series(long qprec) {
  if (qprec < 1) throw Error("eta needs positive precision");
  long prec = 24 * qprec;
  std::vector<Rational> c(static_cast<size_t>(prec - 1));
  for (long k = 0;; ++k) {
    long n = (6 * k + 1) * (6 * k + 1);
    if (n >= prec) break;
    c[static_cast<size_t>(n - 1)] = (k % 2 == 0) ? 1 : -1;
  }
  for (long k = -1;; --k) {
    long n = (6 * k + 1) * (6 * k + 1);
    if (n >= prec) break;
    c[static_cast<size_t>(n - 1)] = (k % 2 == 0) ? 1 : -1;
  }
  return LaurentSeries::from_raw(24, 1, std::move(c));
}

LaurentSeries theta2_series(long qprec) {
  if (qprec < 1) throw Error("theta2 needs positive precision");
  long prec = 8 * qprec;
  std::vector<Rational> c(static_cast<size_t>(prec - 1));
  for (long n = 0;; ++n) {
    long e = (2 * n + 1) * (2 * n + 1);
    if (e >= prec) break;
    c[static_cast<size_t>(e - 1)] = 2;
  }
  return LaurentSeries::from_raw(8, 1, std::move(c));
}

namespace {

LaurentSeries theta34(long qprec, bool alternating) {
  if (qprec < 1) throw Error("theta needs positive precision");
  long prec = 2 * qprec;
  std::vector<Rational> c(static_cast<size_t>(prec));
  c[0] = 1;
  for (long n = 1;; ++n) {
    long e = n * n;
    if (e >= prec) break;
    c[static_cast<size_t>(e)] = (alternating && n % 2 != 0) ? -2 : 2;
  }
  return LaurentSeries::from_raw(2, 0, std::move(c));
}

}  // namespace

LaurentSeries theta3_series(long qprec) { return theta34(qprec, false); }

LaurentSeries theta4_series(long qprec) { return theta34(qprec, true); }

LaurentSeries eisenstein_e2(long qprec) {
  if (qprec < 1) throw Error("E2 needs positive precision");
  auto s1 = divisor_sums(qprec, 1);
  std::vector<Rational> c(static_cast<size_t>(qprec));
  c[0] = 1;
  for (long n = 1; n < qprec; ++n) c[static_cast<size_t>(n)] = Rational(-24LL * s1[static_cast<size_t>(n)]);
  return LaurentSeries::from_raw(1, 0, std::move(c));
}

LaurentSeries eisenstein_e4(long qprec) {
  if (qprec < 1) throw Error("E4 needs positive precision");
  auto s3 = divisor_sums(qprec, 3);
  std::vector<Rational> c(static_cast<size_t>(qprec));
  c[0] = 1;
  for (long n = 1; n < qprec; ++n) c[static_cast<size_t>(n)] = Rational(240LL * s3[static_cast<size_t>(n)]);
  return LaurentSeries::from_raw(1, 0, std::move(c));
}

LaurentSeries eisenstein_e2_level(long p, long qprec) {
  if (p < 2) throw Error("level combination needs p >= 2");
  LaurentSeries e2 = eisenstein_e2(qprec);
  return sub(e2, mul_scalar(dilate(truncate(e2, (qprec + p - 1) / p), p), Rational(p)));
}

LaurentSeries j_series(long qprec) {
  if (qprec < 1) throw Error("j needs positive precision");
  long work = qprec + 2;
  LaurentSeries eta = eta_series(work);
  LaurentSeries eta8 = power(eta, 8);     // lattice collapses to 1/3
  LaurentSeries delta = power(eta8, 3);   // eta^24, integral
  LaurentSeries e4 = eisenstein_e4(work);
  LaurentSeries num = power(e4, 3);
  LaurentSeries j = mul(num, invert(delta, delta.precision() - 2));
  return truncate(j, qprec + 1);
}

LaurentSeries wp_division_value(long N, long a1, long qprec) {
  if (N < 2 || a1 <= 0 || a1 >= N)
    throw InvalidDivisionPointError("division point (" + std::to_string(a1) + ", 0) invalid for N = " +
                                    std::to_string(N));
  long prec = std::max<long>(qprec, 1);
  std::vector<Rational> c(static_cast<size_t>(prec));
  c[0] = Rational(1, 12);
  // q^{a1} / (1 - q^{a1})^2 = sum_{k>=1} k q^{a1 k}
  for (long k = 1; a1 * k < prec; ++k) c[static_cast<size_t>(a1 * k)] += k;
  // sum over n >= 1 and d | n; the smallest exponent a term can land on is
  // N n - a1 n = (N - a1) n, so n < prec is a safe cutoff
  for (long d = 1; d < prec; ++d) {
    for (long n = d; (N - a1) * n < prec; n += d) {
      long base = N * n;
      if (base + a1 * d < prec) c[static_cast<size_t>(base + a1 * d)] += d;
      if (base - a1 * d < prec) c[static_cast<size_t>(base - a1 * d)] += d;
      if (base < prec) c[static_cast<size_t>(base)] -= 2 * d;
    }
  }
  return LaurentSeries::from_raw(1, 0, std::move(c));
}

LaurentSeries eta_quotient_series(const EtaQuotientSpec& spec, long qprec) {
  if (spec.exponents.empty()) throw Error("eta quotient with no factors");
  // generous base precision; the deepest loss is the division below
  long head = 0;
  for (const auto& [d, r] : spec.exponents) {
    if (d < 1 || r == 0) throw Error("bad eta quotient factor");
    if (r < 0) head += d * (-r);  // pole depth contributed in 1/24 units
  }
  long work = qprec + (2 * head) / 24 + 4;
  LaurentSeries num = LaurentSeries::constant(1, work);
  LaurentSeries den = num;
  for (const auto& [d, r] : spec.exponents) {
    LaurentSeries factor = power(dilate(eta_series((work + d - 1) / d + 1), d),
                                 std::abs(r));
    if (r > 0)
      num = mul(num, factor);
    else
      den = mul(den, factor);
  }
  return divide(num, den);
}

}  // namespace qm
