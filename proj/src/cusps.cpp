#include "qm/cusps.hpp"

#include <numeric>

#include "qm/errors.hpp"

namespace qm {

namespace {

long mod_pos(long x, long N) {
  long r = x % N;
  return r < 0 ? r + N : r;
}

}  // namespace

std::string CuspLabel::str() const {
  if (is_infinity()) return "oo";
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

CuspLabel make_cusp(long num, long den) {
  if (den == 0) return CuspLabel{1, 0};
  if (den < 0) {
    num = -num;
    den = -den;
  }
  long g = std::gcd(std::abs(num), den);
  if (g == 0) g = 1;
  return CuspLabel{num / g, den / g};
}

bool cusps_equivalent(long N, const CuspLabel& a, const CuspLabel& b) {
  if (N < 1) throw Error("level must be positive");
  for (long n = 0; n < N; ++n) {
    long a2 = a.num + n * a.den;
    for (int s : {1, -1}) {
      if (mod_pos(s * a2 - b.num, N) == 0 && mod_pos(s * a.den - b.den, N) == 0) return true;
    }
  }
  return false;
}

long cusp_width(long N, const CuspLabel& c) {
  if (N < 1) throw Error("level must be positive");
  if (N == 4)
    throw UnsupportedLevelError("width formula N/gcd(den, N) fails at level 4 (the 1/2 class)");
  return N / std::gcd(mod_pos(c.den, N) == 0 ? N : c.den, N);
}

std::vector<CuspLabel> inequivalent_cusps(long N, long max_den) {
  if (N < 1) throw Error("level must be positive");
  if (max_den <= 0) max_den = N;
  std::vector<CuspLabel> kept;
  kept.push_back(CuspLabel{1, 0});
  for (long den = 1; den <= max_den; ++den) {
    for (long num = 0; num < std::max<long>(den, 1); ++num) {
      if (std::gcd(num, den) != 1) continue;
      CuspLabel c = make_cusp(num, den);
      bool fresh = true;
      for (const CuspLabel& k : kept) {
        if (cusps_equivalent(N, c, k)) {
          fresh = false;
          break;
        }
      }
      if (fresh) kept.push_back(c);
    }
  }
  return kept;
}

QuadValue qv_add(const QuadValue& x, const QuadValue& y) {
  return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
}

QuadValue qv_sub(const QuadValue& x, const QuadValue& y) {
  return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d};
}

QuadValue qv_neg(const QuadValue& x) { return {-x.a, -x.b, -x.c, -x.d}; }

QuadValue qv_mul(const QuadValue& x, const QuadValue& y) {
  // basis 1, i, r, ir with i^2 = -1, r^2 = 3
  Rational three(3);
  QuadValue out;
  out.a = x.a * y.a - x.b * y.b + three * (x.c * y.c - x.d * y.d);
  out.b = x.a * y.b + x.b * y.a + three * (x.c * y.d + x.d * y.c);
  out.c = x.a * y.c + x.c * y.a - x.b * y.d - x.d * y.b;
  out.d = x.a * y.d + x.d * y.a + x.b * y.c + x.c * y.b;
  return out;
}

std::string QuadValue::str() const {
  std::string s = a.str();
  auto append = [&s](const Rational& v, const char* unit) {
    if (v.is_zero()) return;
    if (v.sign() >= 0)
      s += " + " + v.str() + unit;
    else
      s += " - " + (-v).str() + unit;
  };
  append(b, "*i");
  append(c, "*r3");
  append(d, "*i*r3");
  return s;
}

const std::vector<CuspValue>& cusp_value_table_level12() {
  auto qv = [](Rational a, Rational b, Rational c, Rational d) {
    return QuadValue{std::move(a), std::move(b), std::move(c), std::move(d)};
  };
  static const std::vector<CuspValue> table = {
      {CuspLabel{1, 0}, 1, true, {}},
      {CuspLabel{0, 1}, 12, false, qv(1, 0, 1, 0)},                            // 1 + sqrt3
      {CuspLabel{1, 2}, 6, false, qv(-2, 0, 0, 0)},
      {CuspLabel{1, 3}, 4, false, qv(-1, -1, 0, 0)},                           // -1 - i
      {CuspLabel{1, 4}, 3, false, qv(Rational(-1, 2), 0, 0, Rational(-1, 2))}, // (-1 - i sqrt3)/2
      {CuspLabel{1, 5}, 12, false, qv(1, 0, -1, 0)},                           // 1 - sqrt3
      {CuspLabel{1, 6}, 2, false, qv(0, 0, 0, 0)},
      {CuspLabel{1, 8}, 3, false, qv(Rational(-1, 2), 0, 0, Rational(1, 2))},  // (-1 + i sqrt3)/2
      {CuspLabel{1, 9}, 4, false, qv(-1, 1, 0, 0)},                            // -1 + i
      {CuspLabel{5, 12}, 1, false, qv(-1, 0, 0, 0)},
  };
  return table;
}

namespace {

std::vector<QuadValue> qpoly_mul(const std::vector<QuadValue>& p, const std::vector<QuadValue>& q) {
  std::vector<QuadValue> out(p.size() + q.size() - 1);
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i].is_zero()) continue;
    for (size_t j = 0; j < q.size(); ++j)
      out[i + j] = qv_add(out[i + j], qv_mul(p[i], q[j]));
  }
  return out;
}

std::vector<Rational> rpoly_mul(const std::vector<Rational>& p, const std::vector<Rational>& q) {
  std::vector<Rational> out(p.size() + q.size() - 1, Rational(0));
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i].is_zero()) continue;
    for (size_t j = 0; j < q.size(); ++j) out[i + j] += p[i] * q[j];
  }
  return out;
}

std::vector<Rational> rpoly_pow(std::vector<Rational> base, long e) {
  std::vector<Rational> acc{Rational(1)};
  for (long i = 0; i < e; ++i) acc = rpoly_mul(acc, base);
  return acc;
}

}  // namespace

std::vector<QuadValue> expand_cusp_product(const std::vector<CuspValue>& table) {
  std::vector<QuadValue> acc{QuadValue{1, 0, 0, 0}};
  for (const CuspValue& cv : table) {
    if (cv.is_pole) continue;
    std::vector<QuadValue> lin{qv_neg(cv.value), QuadValue{1, 0, 0, 0}};
    for (long i = 0; i < cv.width; ++i) acc = qpoly_mul(acc, lin);
  }
  return acc;
}

std::vector<Rational> cusp_product_polynomial_level12() {
  auto p = rpoly_pow({-2, -2, 1}, 12);            // (x^2 - 2x - 2)^12
  p = rpoly_mul(p, rpoly_pow({2, 1}, 6));         // (x + 2)^6
  p = rpoly_mul(p, rpoly_pow({2, 2, 1}, 4));      // (x^2 + 2x + 2)^4
  p = rpoly_mul(p, rpoly_pow({1, 1, 1}, 3));      // (x^2 + x + 1)^3
  p = rpoly_mul(p, {0, 0, 1});                    // x^2
  p = rpoly_mul(p, {1, 1});                       // (x + 1)
  return p;
}

}  // namespace qm
