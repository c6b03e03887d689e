#include "qm/faber.hpp"

namespace qm {

FaberBasis::FaberBasis(LaurentSeries t) {
  if (t.lattice_den() != 1 || t.is_zero() || t.valuation() != -1 ||
      !(t.leading_coeff() == Rational(1)) || !t.coeff_q(0).is_zero())
    throw NormalizationError("faber basis needs a normalized q^-1 + 0 + O(q) generator");
  pow_.push_back(LaurentSeries::constant(1, t.precision()));
  pow_.push_back(std::move(t));
}

const LaurentSeries& FaberBasis::t_power(long k) {
  if (k < 0) throw Error("negative power of the generator");
  while (static_cast<long>(pow_.size()) <= k) {
    pow_.push_back(mul(pow_.back(), pow_[1]));
    if (pow_.back().precision() < 1)
      throw InsufficientPrecisionError("generator precision exhausted at power " +
                                       std::to_string(pow_.size() - 1));
  }
  return pow_[static_cast<size_t>(k)];
}

FaberPolynomial FaberBasis::faber(long n) {
  if (n < 1) throw Error("faber index must be >= 1");
  t_power(n);
  FaberPolynomial fp;
  fp.n = n;
  fp.coeffs.assign(static_cast<size_t>(n + 1), Rational(0));
  fp.coeffs[static_cast<size_t>(n)] = Rational(1, n);
  LaurentSeries s = mul_scalar(pow_[static_cast<size_t>(n)], Rational(1, n));
  // kill the principal part below q^{-n} and the constant term; subtracting
  // c * t^j only touches exponents >= -j, so sweeping j downward terminates
  for (long j = n - 1; j >= 0; --j) {
    const Rational& c = s.coeff_q(-j);
    if (c.is_zero()) continue;
    fp.coeffs[static_cast<size_t>(j)] = -c;
    s = sub(s, mul_scalar(pow_[static_cast<size_t>(j)], c));
  }
  fp.series = std::move(s);
  return fp;
}

LaurentSeries FaberBasis::eval_poly(const std::vector<Rational>& poly) {
  if (poly.empty()) throw Error("empty polynomial");
  t_power(static_cast<long>(poly.size()) - 1);
  LaurentSeries acc = LaurentSeries::zero(pow_[1].precision());
  for (size_t k = 0; k < poly.size(); ++k) {
    if (poly[k].is_zero()) continue;
    acc = add(acc, mul_scalar(pow_[k], poly[k]));
  }
  return acc;
}

FaberPolynomial faber(const LaurentSeries& t, long n) {
  FaberBasis basis(t);
  return basis.faber(n);
}

const Rational& CoeffGrid::at(long m, long n) const {
  if (m < 1 || n < 1 || m > max_m || n > max_n)
    throw GridTooSmallError("grid entry (" + std::to_string(m) + ", " + std::to_string(n) +
                            ") outside computed " + std::to_string(max_m) + " x " +
                            std::to_string(max_n) + " table");
  return entries[static_cast<size_t>((m - 1) * max_n + (n - 1))];
}

CoeffGrid coeff_grid(const Hauptmodul& h, long max_m, long max_n) {
  if (max_m < 1 || max_n < 1) throw Error("grid dimensions must be positive");
  // X_n loses n - 1 numerator units to the power chain, so reading q^max_m
  // from X_max_n needs this much headroom
  if (h.series.precision() < max_m + max_n)
    throw InsufficientPrecisionError("grid " + std::to_string(max_m) + " x " +
                                     std::to_string(max_n) + " needs generator precision " +
                                     std::to_string(max_m + max_n) + ", have " +
                                     std::to_string(h.series.precision()));
  CoeffGrid grid;
  grid.group = h.group;
  grid.level = h.level;
  grid.max_m = max_m;
  grid.max_n = max_n;
  grid.precision = h.series.precision();
  grid.entries.assign(static_cast<size_t>(max_m) * static_cast<size_t>(max_n), Rational(0));
  FaberBasis basis(h.series);
  for (long n = 1; n <= max_n; ++n) {
    FaberPolynomial fp = basis.faber(n);
    for (long m = 1; m <= max_m; ++m)
      grid.entries[static_cast<size_t>((m - 1) * max_n + (n - 1))] = fp.series.coeff_q(m);
  }
  return grid;
}

std::vector<Rational> verify_integrality_identity(const LaurentSeries& t, const LaurentSeries& j,
                                                  const std::vector<Rational>& cusp_poly,
                                                  long expected_degree) {
  FaberBasis basis(t);
  LaurentSeries s = mul(j, basis.eval_poly(cusp_poly));
  if (s.is_zero() || s.valuation() != -expected_degree)
    throw NormalizationError("product has pole order " +
                             (s.is_zero() ? std::string("none") : std::to_string(-s.valuation())) +
                             ", expected " + std::to_string(expected_degree));
  std::vector<Rational> out(static_cast<size_t>(expected_degree + 1), Rational(0));
  for (long k = expected_degree; k >= 0; --k) {
    const Rational& c = s.coeff_q(-k);
    if (c.is_zero()) continue;
    out[static_cast<size_t>(k)] = c;
    s = sub(s, mul_scalar(basis.t_power(k), c));
  }
  if (!(out[static_cast<size_t>(expected_degree)] == Rational(1)))
    throw NormalizationError("polynomial part is not monic: leading coefficient " +
                             out[static_cast<size_t>(expected_degree)].str());
  for (const Rational& c : out)
    if (!c.is_integer())
      throw NonIntegerCoefficientError("polynomial coefficient " + c.str() + " is not integral");
  if (!s.is_zero())
    throw ResidualNonzeroError("residual still has a q^" + std::to_string(s.valuation()) +
                               " term " + s.leading_coeff().str() + " after elimination");
  return out;
}

}  // namespace qm
