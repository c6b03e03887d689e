#include "qm/hauptmodul.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace qm {

const char* group_name(GroupKind g) { return g == GroupKind::gamma1 ? "gamma1" : "gamma0"; }

void verify_normalization(const LaurentSeries& t) {
  if (t.lattice_den() != 1)
    throw NormalizationError("hauptmodul must have integer exponents, lattice is 1/" +
                             std::to_string(t.lattice_den()));
  if (t.is_zero() || t.valuation() != -1)
    throw NormalizationError("hauptmodul must have a simple pole q^-1");
  if (!(t.leading_coeff() == Rational(1)))
    throw NormalizationError("hauptmodul must have leading coefficient 1, got " +
                             t.leading_coeff().str());
  if (!t.coeff_q(0).is_zero())
    throw NormalizationError("hauptmodul must have zero constant term, got " + t.coeff_q(0).str());
  for (const Rational& c : t.coeffs())
    if (!c.is_integer())
      throw NonIntegerCoefficientError("hauptmodul coefficient " + c.str() + " is not integral");
}

namespace {

// c_scale / (j + pole_shift) + c_add, truncated to know exactly q^1..q^T.
// j + pole_shift must vanish to first order, which is where every level's
// normalizing map puts the pole.
LaurentSeries mobius_finish(const LaurentSeries& j, const Rational& pole_shift,
                            const Rational& c_scale, const Rational& c_add, long T) {
  LaurentSeries shifted = add_scalar(j, pole_shift);
  if (shifted.is_zero() || shifted.valuation() != 1 * shifted.lattice_den())
    throw NormalizationError("pole shift did not produce a first-order zero");
  long max_target = shifted.precision() - 2 * shifted.valuation();
  long want = (T + 2) * shifted.lattice_den();
  LaurentSeries inv = invert(shifted, std::min(max_target, want));
  LaurentSeries t = add_scalar(mul_scalar(inv, c_scale), c_add);
  if (t.precision() < T + 1)
    throw InsufficientPrecisionError("hauptmodul assembly lost too much precision");
  return truncate(t, T + 1);
}

LaurentSeries gamma1_level1(long T) {
  return truncate(add_scalar(j_series(T + 1), Rational(-744)), T + 1);
}

LaurentSeries gamma1_level2(long T) {
  long w = T + 6;
  LaurentSeries th2_8 = power(theta2_series(w), 8);
  LaurentSeries th4_2z_8 = power(dilate(theta4_series(w), 2), 8);
  LaurentSeries j12 = divide(th2_8, th4_2z_8);
  return mobius_finish(j12, 0, 256, 24, T);
}

LaurentSeries gamma1_level3(long T) {
  long w = T + 6;
  LaurentSeries e4 = eisenstein_e4(w);
  LaurentSeries e4_3z = dilate(truncate(e4, (w + 2) / 3), 3);
  LaurentSeries j13 = divide(e4, e4_3z);
  return mobius_finish(j13, -1, 240, 9, T);
}

LaurentSeries gamma1_level4(long T) {
  long w = T + 6;
  LaurentSeries num = power(dilate(theta2_series(w), 2), 4);
  LaurentSeries den = power(dilate(theta3_series(w), 2), 4);
  LaurentSeries j14 = divide(num, den);
  return mobius_finish(j14, 0, 16, -8, T);
}

LaurentSeries gamma1_level5(long T) {
  long w = T + 8;
  LaurentSeries eta1 = eta_series(w);
  LaurentSeries eta5 = dilate(eta_series(w), 5);
  LaurentSeries a = divide(power(eta1, 5), eta5);          // eta(z)^5/eta(5z)
  LaurentSeries b = divide(power(eta5, 5), eta1);          // eta(5z)^5/eta(z)
  LaurentSeries num = add(mul_scalar(a, 4), eisenstein_e2_level(5, w));
  LaurentSeries j15 = divide(num, b);
  return mobius_finish(j15, 44, -8, -5, T);
}

LaurentSeries gamma1_level6(long T) {
  long w = T + 6;
  LaurentSeries g2 = eisenstein_e2_level(2, w);
  LaurentSeries g3 = eisenstein_e2_level(3, w);
  LaurentSeries num = sub(g2, dilate(truncate(g2, (w + 2) / 3), 3));
  LaurentSeries den = sub(mul_scalar(g2, 2), g3);
  LaurentSeries j16 = divide(num, den);
  return mobius_finish(j16, -1, 2, -1, T);
}

LaurentSeries gamma1_from_wp(long N, const Rational& c_scale, const Rational& c_add, long T) {
  long w = T + 6;
  LaurentSeries p1 = wp_division_value(N, 1, w);
  LaurentSeries p2 = wp_division_value(N, 2, w);
  LaurentSeries p4 = wp_division_value(N, 4, w);
  LaurentSeries j1n = divide(sub(p1, p2), sub(p1, p4));
  return mobius_finish(j1n, -1, c_scale, c_add, T);
}

LaurentSeries gamma1_theta_ratio(long dil_den, const Rational& c_add, long T) {
  long w = T + 6;
  LaurentSeries num = dilate(theta3_series(w), 2);
  LaurentSeries den = dilate(theta3_series(w), dil_den);
  LaurentSeries j = divide(num, den);
  return mobius_finish(j, -1, 2, c_add, T);
}

}  // namespace

Hauptmodul build_gamma1_hauptmodul(long N, long qprec) {
  if (qprec < 1) throw Error("hauptmodul needs positive precision");
  long T = qprec;
  LaurentSeries t;
  switch (N) {
    case 1: t = gamma1_level1(T); break;
    case 2: t = gamma1_level2(T); break;
    case 3: t = gamma1_level3(T); break;
    case 4: t = gamma1_level4(T); break;
    case 5: t = gamma1_level5(T); break;
    case 6: t = gamma1_level6(T); break;
    case 7: t = gamma1_from_wp(7, -1, -3, T); break;
    case 8: t = gamma1_theta_ratio(4, -1, T); break;
    case 9: t = gamma1_from_wp(9, -1, -2, T); break;
    case 10: t = gamma1_from_wp(10, -1, -2, T); break;
    case 12: t = gamma1_theta_ratio(6, 0, T); break;
    default:
      throw UnsupportedLevelError("no genus-zero construction for level " + std::to_string(N));
  }
  verify_normalization(t);
  return Hauptmodul{GroupKind::gamma1, N, std::move(t), {}};
}

namespace {

std::vector<long> divisors_of(long N) {
  std::vector<long> d;
  for (long k = 1; k <= N; ++k)
    if (N % k == 0) d.push_back(k);
  return d;
}

std::vector<long> prime_divisors(long N) {
  std::vector<long> p;
  long n = N;
  for (long q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      p.push_back(q);
      while (n % q == 0) n /= q;
    }
  }
  if (n > 1) p.push_back(n);
  return p;
}

long valuation_at(long n, long p) {
  long v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

// admissibility beyond the linear constraints; exponents aligned with divs
bool admissible_exponents(long N, const std::vector<long>& divs, const std::vector<long>& r) {
  // modularity: sum (N/d) r_d = 0 mod 24 and prod d^{r_d} a rational square
  long wsum = 0;
  for (size_t i = 0; i < divs.size(); ++i) wsum += (N / divs[i]) * r[i];
  if (wsum % 24 != 0) return false;
  for (long p : prime_divisors(N)) {
    long par = 0;
    for (size_t i = 0; i < divs.size(); ++i) par += r[i] * valuation_at(divs[i], p);
    if (par % 2 != 0) return false;
  }
  // holomorphic away from infinity
  for (long c : divs) {
    if (c == N) continue;
    Rational order;
    for (size_t i = 0; i < divs.size(); ++i) {
      long g = std::gcd(c, divs[i]);
      order += Rational(g * g * r[i], divs[i]);
    }
    if (order.sign() < 0) return false;
  }
  return true;
}

}  // namespace

Rational eta_quotient_cusp_order(const EtaQuotientSpec& spec, long c) {
  long N = spec.level;
  if (N < 1 || c < 1 || N % c != 0) throw Error("cusp denominator must divide the level");
  Rational sum;
  for (const auto& [d, r] : spec.exponents) {
    long g = std::gcd(c, d);
    sum += Rational(g * g * r, d);
  }
  return sum * Rational(N, 24 * std::gcd(c * c, N));
}

EtaQuotientSpec find_eta_hauptmodul(long N, long bound) {
  if (N < 2) throw SearchFailedError("no eta-quotient hauptmodul at level " + std::to_string(N));
  if (bound < 1) throw Error("search bound must be positive");
  std::vector<long> divs = divisors_of(N);
  size_t k = divs.size();
  // the last two exponents are solved from sum r = 0 and sum d r = -24
  long D1 = divs[k - 2], D2 = divs[k - 1];
  std::vector<long> r(k, 0);
  std::vector<long> best;
  long best_abs = 0;
  size_t free_count = k - 2;

  std::vector<long> free_r(free_count, -bound);
  bool done = free_count == 0;
  for (;;) {
    for (size_t i = 0; i < free_count; ++i) r[i] = free_r[i];
    long S = 0, W = 0;
    for (size_t i = 0; i < free_count; ++i) {
      S += r[i];
      W += divs[i] * r[i];
    }
    // D1 r1 + D2 r2 = -24 - W with r1 + r2 = -S
    long rhs = -24 - W + D1 * S;
    if (rhs % (D2 - D1) == 0) {
      long r2 = rhs / (D2 - D1);
      long r1 = -S - r2;
      if (std::abs(r1) <= bound && std::abs(r2) <= bound) {
        r[k - 2] = r1;
        r[k - 1] = r2;
        long abs_sum = 0;
        for (long x : r) abs_sum += std::abs(x);
        bool better = best.empty() || abs_sum < best_abs || (abs_sum == best_abs && r < best);
        if (better && admissible_exponents(N, divs, r)) {
          best = r;
          best_abs = abs_sum;
        }
      }
    }
    if (done) break;
    size_t i = 0;
    while (i < free_count && free_r[i] == bound) {
      free_r[i] = -bound;
      ++i;
    }
    if (i == free_count) break;
    ++free_r[i];
  }
  if (best.empty())
    throw SearchFailedError("no admissible eta quotient at level " + std::to_string(N) +
                            " within exponent bound " + std::to_string(bound));
  EtaQuotientSpec spec;
  spec.level = N;
  for (size_t i = 0; i < k; ++i)
    if (best[i] != 0) spec.exponents.push_back({divs[i], best[i]});
  return spec;
}

Hauptmodul build_gamma0_hauptmodul(long N, long qprec, const std::optional<EtaQuotientSpec>& pinned) {
  if (N != 5 && N != 8 && N != 10 && N != 12)
    throw UnsupportedLevelError("eta-quotient hauptmodul builder covers levels 5, 8, 10, 12; got " +
                                std::to_string(N));
  if (qprec < 1) throw Error("hauptmodul needs positive precision");
  EtaQuotientSpec spec;
  if (pinned) {
    if (pinned->level != N)
      throw Error("pinned eta quotient is for level " + std::to_string(pinned->level));
    spec = *pinned;
  } else {
    spec = find_eta_hauptmodul(N, 8);
  }
  LaurentSeries f = eta_quotient_series(spec, qprec + 3);
  if (f.lattice_den() != 1 || f.is_zero() || f.valuation() != -1)
    throw NormalizationError("eta quotient is not a simple-pole series at infinity");
  LaurentSeries t = add_scalar(f, -f.coeff_q(0));
  if (t.precision() < qprec + 1)
    throw InsufficientPrecisionError("eta quotient expansion lost too much precision");
  t = truncate(t, qprec + 1);
  verify_normalization(t);
  return Hauptmodul{GroupKind::gamma0, N, std::move(t), std::move(spec)};
}

long gamma1_index(long N) {
  if (N < 1) throw Error("level must be positive");
  if (N == 1) return 1;
  if (N == 2) return 3;
  // N^2 prod (1 - p^-2) is always divisible by the 2 for N >= 3
  long num = N * N, den = 1;
  for (long p : prime_divisors(N)) {
    num *= (p * p - 1);
    den *= p * p;
  }
  return num / den / 2;
}

}  // namespace qm
