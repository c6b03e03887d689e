#include "qm/series.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qm {

namespace {

const Rational kZero;

struct Term {
  long num;
  const Rational* c;
};

std::vector<Term> nonzero_terms(const LaurentSeries& f) {
  std::vector<Term> out;
  const auto& c = f.coeffs();
  out.reserve(c.size());
  for (size_t i = 0; i < c.size(); ++i)
    if (!c[i].is_zero()) out.push_back({f.storage_val() + static_cast<long>(i), &c[i]});
  return out;
}

long lcm_den(long a, long b) { return std::lcm(a, b); }

}  // namespace

LaurentSeries LaurentSeries::from_raw(long den, long val, std::vector<Rational> c) {
  if (den < 1) throw Error("lattice denominator must be >= 1");
  LaurentSeries f;
  f.den_ = den;
  f.val_ = val;
  f.prec_ = val + static_cast<long>(c.size());
  f.c_ = std::move(c);
  f.normalize();
  return f;
}

LaurentSeries LaurentSeries::zero(long prec, long den) {
  if (den < 1) throw Error("lattice denominator must be >= 1");
  LaurentSeries f;
  f.den_ = den;
  f.val_ = prec;
  f.prec_ = prec;
  return f;
}

LaurentSeries LaurentSeries::constant(const Rational& c, long prec) {
  if (c.is_zero() || prec <= 0) return zero(prec);
  std::vector<Rational> v(static_cast<size_t>(prec));
  v[0] = c;
  return from_raw(1, 0, std::move(v));
}

LaurentSeries LaurentSeries::monomial(const Rational& c, long num, long den, long prec) {
  if (c.is_zero() || prec <= num) return zero(prec, den);
  std::vector<Rational> v(static_cast<size_t>(prec - num));
  v[0] = c;
  return from_raw(den, num, std::move(v));
}

void LaurentSeries::normalize() {
  size_t lead = 0;
  while (lead < c_.size() && c_[lead].is_zero()) ++lead;
  if (lead > 0) {
    c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
    val_ += static_cast<long>(lead);
  }
  if (c_.empty()) {
    val_ = prec_;
    return;
  }
  if (den_ == 1) return;
  long g = den_;
  for (size_t i = 0; i < c_.size() && g > 1; ++i)
    if (!c_[i].is_zero()) g = std::gcd(g, std::abs(val_ + static_cast<long>(i)));
  if (g <= 1) return;
  // keep only the multiples of g; all nonzero entries are on them
  std::vector<Rational> reduced;
  long new_val = (val_ >= 0) ? (val_ + g - 1) / g : -((-val_) / g);
  long new_prec = (prec_ >= 0) ? (prec_ + g - 1) / g : -((-prec_) / g);
  reduced.resize(static_cast<size_t>(new_prec - new_val));
  for (long m = new_val; m < new_prec; ++m) {
    long src = m * g;
    if (src >= val_ && src < prec_) reduced[static_cast<size_t>(m - new_val)] = c_[static_cast<size_t>(src - val_)];
  }
  den_ /= g;
  val_ = new_val;
  prec_ = new_prec;
  c_ = std::move(reduced);
  // reduction can expose new leading zeros only if val*g < old val, which
  // cannot happen, so one pass is enough
}

long LaurentSeries::valuation() const {
  if (c_.empty()) throw ZeroLeadingCoefficientError("valuation of a series that is zero to precision");
  return val_;
}

const Rational& LaurentSeries::leading_coeff() const {
  if (c_.empty()) throw ZeroLeadingCoefficientError("leading coefficient of a zero series");
  return c_.front();
}

const Rational& LaurentSeries::coeff_num(long num) const {
  if (num < val_) return kZero;
  if (num >= prec_)
    throw InsufficientPrecisionError("coefficient at numerator " + std::to_string(num) +
                                     " beyond precision " + std::to_string(prec_));
  return c_[static_cast<size_t>(num - val_)];
}

const Rational& LaurentSeries::coeff_q(long m) const {
  // integer exponent m sits at numerator m*den
  return coeff_num(m * den_);
}

long LaurentSeries::known_q_terms() const {
  // all of q^1..q^m known iff m*den < prec
  if (prec_ <= den_) return 0;
  return (prec_ - 1) / den_;
}

std::string LaurentSeries::display(long max_terms) const {
  std::ostringstream os;
  long shown = 0;
  bool first = true;
  for (size_t i = 0; i < c_.size() && shown < max_terms; ++i) {
    if (c_[i].is_zero()) continue;
    long num = val_ + static_cast<long>(i);
    const Rational& c = c_[i];
    std::string mag = (c.sign() < 0 ? (-c).str() : c.str());
    os << (first ? (c.sign() < 0 ? "-" : "") : (c.sign() < 0 ? " - " : " + "));
    first = false;
    ++shown;
    if (num == 0) {
      os << mag;
      continue;
    }
    if (mag != "1") os << mag << "*";
    os << "q";
    if (num != den_) {
      os << "^";
      if (num % den_ == 0) {
        os << (num / den_);
      } else {
        os << "(" << num << "/" << den_ << ")";
      }
    }
  }
  if (first) os << "0";
  os << " + O(q^";
  if (prec_ % den_ == 0)
    os << (prec_ / den_);
  else
    os << "(" << prec_ << "/" << den_ << ")";
  os << ")";
  return os.str();
}

LaurentSeries add(const LaurentSeries& f, const LaurentSeries& g) {
  long den = lcm_den(f.lattice_den(), g.lattice_den());
  long kf = den / f.lattice_den(), kg = den / g.lattice_den();
  long pf = f.precision() * kf, pg = g.precision() * kg;
  long vf = f.storage_val() * kf, vg = g.storage_val() * kg;
  long prec = std::min(pf, pg);
  long val = std::min(vf, vg);
  if (val > prec) val = prec;
  std::vector<Rational> out(static_cast<size_t>(prec - val));
  for (const auto& [num, c] : nonzero_terms(f)) {
    long n = num * kf;
    if (n < prec) out[static_cast<size_t>(n - val)] += *c;
  }
  for (const auto& [num, c] : nonzero_terms(g)) {
    long n = num * kg;
    if (n < prec) out[static_cast<size_t>(n - val)] += *c;
  }
  return LaurentSeries::from_raw(den, val, std::move(out));
}

LaurentSeries negate(const LaurentSeries& f) {
  std::vector<Rational> out(f.coeffs().size());
  for (size_t i = 0; i < out.size(); ++i) out[i] = -f.coeffs()[i];
  LaurentSeries r = LaurentSeries::from_raw(f.lattice_den(), f.storage_val(), std::move(out));
  return r;
}

LaurentSeries sub(const LaurentSeries& f, const LaurentSeries& g) { return add(f, negate(g)); }

LaurentSeries mul(const LaurentSeries& f, const LaurentSeries& g) {
  long den = lcm_den(f.lattice_den(), g.lattice_den());
  long kf = den / f.lattice_den(), kg = den / g.lattice_den();
  long pf = f.precision() * kf, pg = g.precision() * kg;
  long vf = f.storage_val() * kf, vg = g.storage_val() * kg;
  // error term: f = F + O(q^pf) gives f*g = F*G + O(q^{pf+vg}) + O(q^{pg+vf})
  long prec = std::min(pf + vg, pg + vf);
  long val = vf + vg;
  if (val > prec) val = prec;
  std::vector<Rational> out(static_cast<size_t>(prec - val));
  auto tf = nonzero_terms(f);
  auto tg = nonzero_terms(g);
  Rational tmp;
  for (const auto& [na, ca] : tf) {
    long base = na * kf;
    if (base + vg >= prec) break;  // terms are in ascending exponent order
    for (const auto& [nb, cb] : tg) {
      long n = base + nb * kg;
      if (n >= prec) break;
      tmp = *ca;
      tmp *= *cb;
      out[static_cast<size_t>(n - val)] += tmp;
    }
  }
  return LaurentSeries::from_raw(den, val, std::move(out));
}

LaurentSeries mul_scalar(const LaurentSeries& f, const Rational& c) {
  if (c.is_zero()) return LaurentSeries::zero(f.precision(), f.lattice_den());
  std::vector<Rational> out(f.coeffs().size());
  for (size_t i = 0; i < out.size(); ++i) out[i] = f.coeffs()[i] * c;
  return LaurentSeries::from_raw(f.lattice_den(), f.storage_val(), std::move(out));
}

LaurentSeries add_scalar(const LaurentSeries& f, const Rational& c) {
  if (c.is_zero()) return f;
  return add(f, LaurentSeries::monomial(c, 0, f.lattice_den(), std::max<long>(f.precision(), 1)));
}

LaurentSeries invert(const LaurentSeries& f, long target) {
  if (f.is_zero()) throw ZeroLeadingCoefficientError("inverting a series with no nonzero term");
  long vf = f.valuation();
  long max_target = f.precision() - 2 * vf;
  if (target > max_target)
    throw InsufficientPrecisionError("inverse to numerator precision " + std::to_string(target) +
                                     " needs operand precision " + std::to_string(target + 2 * vf) +
                                     ", have " + std::to_string(f.precision()));
  long vr = -vf;
  long len = target - vr;
  if (len <= 0) return LaurentSeries::zero(target, f.lattice_den());
  const Rational& lead = f.leading_coeff();
  // unit part u_j = f_{vf+j}/lead; b_0 = 1, b_k = -sum_{j>=1} u_j b_{k-j}
  std::vector<Term> unit;
  for (const auto& [num, c] : nonzero_terms(f)) {
    if (num == vf) continue;
    unit.push_back({num - vf, c});
  }
  std::vector<Rational> b(static_cast<size_t>(len));
  b[0] = Rational(1) / lead;
  Rational tmp;
  for (long k = 1; k < len; ++k) {
    Rational acc;
    for (const auto& [j, c] : unit) {
      if (j > k) break;
      tmp = *c;
      tmp *= b[static_cast<size_t>(k - j)];
      acc += tmp;
    }
    if (!acc.is_zero()) {
      acc /= lead;
      b[static_cast<size_t>(k)] = -acc;
    }
  }
  return LaurentSeries::from_raw(f.lattice_den(), vr, std::move(b));
}

LaurentSeries divide(const LaurentSeries& f, const LaurentSeries& g) {
  if (g.is_zero()) throw ZeroLeadingCoefficientError("division by a zero series");
  long target = g.precision() - 2 * g.valuation();
  return mul(f, invert(g, target));
}

LaurentSeries power(const LaurentSeries& f, long e) {
  if (e < 0) throw Error("power with negative exponent; invert first");
  if (e == 0) {
    long qprec = (f.precision() + f.lattice_den() - 1) / f.lattice_den();
    return LaurentSeries::constant(1, std::max<long>(1, qprec));
  }
  LaurentSeries acc = f;
  long bit = 63 - __builtin_clzll(static_cast<unsigned long long>(e));
  for (long i = bit - 1; i >= 0; --i) {
    acc = mul(acc, acc);
    if ((e >> i) & 1) acc = mul(acc, f);
  }
  return acc;
}

LaurentSeries u_operator(const LaurentSeries& f, long n) {
  if (n < 1) throw Error("U_n needs n >= 1");
  if (n == 1) return f;
  long prec = f.precision() >= 0 ? f.precision() / n
                                 : -((-f.precision() + n - 1) / n);  // floor division
  if (f.is_zero()) return LaurentSeries::zero(prec, f.lattice_den());
  long val = f.storage_val();
  long first = (val >= 0) ? ((val + n - 1) / n) : -((-val) / n);  // ceil(val/n)
  if (first >= prec) return LaurentSeries::zero(prec, f.lattice_den());
  std::vector<Rational> out(static_cast<size_t>(prec - first));
  for (const auto& [num, c] : nonzero_terms(f)) {
    if (num % n != 0) continue;
    long m = num / n;
    if (m >= prec) break;
    out[static_cast<size_t>(m - first)] = *c;
  }
  return LaurentSeries::from_raw(f.lattice_den(), first, std::move(out));
}

LaurentSeries dilate(const LaurentSeries& f, long n) {
  if (n < 1) throw Error("dilation needs n >= 1");
  if (n == 1) return f;
  long prec = f.precision() * n;
  if (f.is_zero()) return LaurentSeries::zero(prec, f.lattice_den());
  long val = f.storage_val() * n;
  std::vector<Rational> out(static_cast<size_t>(prec - val));
  for (const auto& [num, c] : nonzero_terms(f))
    out[static_cast<size_t>(num * n - val)] = *c;
  return LaurentSeries::from_raw(f.lattice_den(), val, std::move(out));
}

LaurentSeries undilate(const LaurentSeries& f, long n) {
  if (n < 1) throw Error("undilation needs n >= 1");
  if (n == 1) return f;
  long prec = f.precision() >= 0 ? f.precision() / n : -((-f.precision() + n - 1) / n);
  if (f.is_zero()) return LaurentSeries::zero(prec, f.lattice_den());
  for (const auto& [num, c] : nonzero_terms(f)) {
    (void)c;
    if (num % n != 0)
      throw NonDivisibleExponentError("exponent numerator " + std::to_string(num) +
                                      " not divisible by " + std::to_string(n));
  }
  long val = f.valuation() / n;
  std::vector<Rational> out(static_cast<size_t>(prec - val));
  for (const auto& [num, c] : nonzero_terms(f)) {
    long m = num / n;
    if (m >= prec) break;
    out[static_cast<size_t>(m - val)] = *c;
  }
  return LaurentSeries::from_raw(f.lattice_den(), val, std::move(out));
}

namespace {

// shared by negate_q and twist: the support must be integral
void require_integral(const LaurentSeries& f, const char* what) {
  if (f.lattice_den() == 1) return;
  // normalization reduces the lattice whenever every nonzero exponent
  // allows it, so den > 1 with nonempty support means genuinely
  // fractional exponents
  if (!f.is_zero())
    throw FractionalLatticeError(std::string(what) + " needs integer exponents, lattice is 1/" +
                                 std::to_string(f.lattice_den()));
}

}  // namespace

LaurentSeries negate_q(const LaurentSeries& f) {
  require_integral(f, "half-period shift");
  if (f.is_zero()) return f;
  std::vector<Rational> out(f.coeffs().size());
  for (size_t i = 0; i < out.size(); ++i) {
    long m = f.storage_val() + static_cast<long>(i);
    out[i] = (m % 2 != 0) ? -f.coeffs()[i] : f.coeffs()[i];
  }
  return LaurentSeries::from_raw(1, f.storage_val(), std::move(out));
}

LaurentSeries twist(const LaurentSeries& f, const std::function<int(long)>& chi) {
  require_integral(f, "coefficient twist");
  if (f.is_zero()) return f;
  std::vector<Rational> out(f.coeffs().size());
  for (size_t i = 0; i < out.size(); ++i) {
    if (f.coeffs()[i].is_zero()) continue;
    long m = f.storage_val() + static_cast<long>(i);
    int v = chi(m);
    if (v == 1)
      out[i] = f.coeffs()[i];
    else if (v == -1)
      out[i] = -f.coeffs()[i];
    else if (v != 0)
      out[i] = f.coeffs()[i] * Rational(v);
  }
  return LaurentSeries::from_raw(1, f.storage_val(), std::move(out));
}

LaurentSeries truncate(const LaurentSeries& f, long prec) {
  if (prec >= f.precision()) return f;
  if (prec <= f.storage_val()) return LaurentSeries::zero(prec, f.lattice_den());
  std::vector<Rational> out(f.coeffs().begin(),
                            f.coeffs().begin() + static_cast<long>(prec - f.storage_val()));
  return LaurentSeries::from_raw(f.lattice_den(), f.storage_val(), std::move(out));
}

bool agree_on_range(const LaurentSeries& a, const LaurentSeries& b, long m_lo, long m_hi) {
  long den = lcm_den(a.lattice_den(), b.lattice_den());
  long ka = den / a.lattice_den(), kb = den / b.lattice_den();
  if (m_hi * den >= std::min(a.precision() * ka, b.precision() * kb))
    throw InsufficientPrecisionError("comparison through q^" + std::to_string(m_hi) +
                                     " beyond operand precision");
  for (long num = m_lo * den; num <= m_hi * den; ++num) {
    const Rational& ca = (num % ka == 0) ? a.coeff_num(num / ka) : kZero;
    const Rational& cb = (num % kb == 0) ? b.coeff_num(num / kb) : kZero;
    if (!(ca == cb)) return false;
  }
  return true;
}

}  // namespace qm
