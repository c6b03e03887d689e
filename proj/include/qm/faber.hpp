#pragma once

#include <vector>

#include "qm/hauptmodul.hpp"
#include "qm/series.hpp"

namespace qm {

// X_n(t): the unique degree-n polynomial in t whose q-expansion is
// (1/n) q^{-n} + 0 + O(q)
struct FaberPolynomial {
  long n = 0;
  // polynomial coefficients in t, ascending; coeffs[n] = 1/n
  std::vector<Rational> coeffs;
  // the q-expansion (1/n) q^{-n} + sum_{m>=1} c_{m,n} q^m
  LaurentSeries series;
};

// caches powers of a normalized generator t = q^{-1} + 0 + O(q) and builds
// Faber polynomials by principal-part elimination against those powers
class FaberBasis {
 public:
  explicit FaberBasis(LaurentSeries t);

  const LaurentSeries& t() const { return pow_[1]; }
  const LaurentSeries& t_power(long k);
  FaberPolynomial faber(long n);

  // evaluate an arbitrary polynomial (ascending coefficients) at t
  LaurentSeries eval_poly(const std::vector<Rational>& poly);

 private:
  std::vector<LaurentSeries> pow_;
};

FaberPolynomial faber(const LaurentSeries& t, long n);

// rectangular table of the q-coefficients of the Faber expansions:
// entry (m, n) is the coefficient of q^m in X_n(t), 1 <= m <= max_m,
// 1 <= n <= max_n
struct CoeffGrid {
  GroupKind group = GroupKind::gamma1;
  long level = 0;
  long max_m = 0;
  long max_n = 0;
  // numerator precision of the generator the grid was computed from
  long precision = 0;
  std::vector<Rational> entries;  // (m-1) * max_n + (n-1)

  const Rational& at(long m, long n) const;
};

CoeffGrid coeff_grid(const Hauptmodul& h, long max_m, long max_n);

// j * cusp_poly(t) == a monic integer polynomial in t of the expected
// degree, with zero residual to the full known precision. Returns the
// polynomial's coefficients, ascending. Throws ResidualNonzeroError,
// NonIntegerCoefficientError or NormalizationError on violation.
std::vector<Rational> verify_integrality_identity(const LaurentSeries& t, const LaurentSeries& j,
                                                  const std::vector<Rational>& cusp_poly,
                                                  long expected_degree);

}  // namespace qm
