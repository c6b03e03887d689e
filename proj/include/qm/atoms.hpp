#pragma once

#include <utility>
#include <vector>

#include "qm/series.hpp"

namespace qm {

// All constructors take `qprec` in integer q-powers: the result is exact for
// every exponent below qprec (numerator precision den * qprec).

// Dedekind eta, q^{1/24} prod (1 - q^n), expanded by the pentagonal number
// theorem on the 1/24 lattice: sum_k (-1)^k q^{(6k+1)^2/24}
LaurentSeries eta_series(long qprec);

// Jacobi null theta constants. theta2 lives on the 1/8 lattice with
// numerators (2n+1)^2, theta3/theta4 on the 1/2 lattice with numerators n^2.
LaurentSeries theta2_series(long qprec);
LaurentSeries theta3_series(long qprec);
LaurentSeries theta4_series(long qprec);

// E2 = 1 - 24 sum sigma_1(n) q^n, E4 = 1 + 240 sum sigma_3(n) q^n
LaurentSeries eisenstein_e2(long qprec);
LaurentSeries eisenstein_e4(long qprec);
// E2(z) - p*E2(pz), the weight-2 level-p combination
LaurentSeries eisenstein_e2_level(long p, long qprec);

// elliptic modular invariant j = E4^3 / Delta = q^{-1} + 744 + 196884 q + ...
LaurentSeries j_series(long qprec);

// Weierstrass P at the N-division point (a1/N, 0) of the lattice spanned by
// Nz and 1, normalized by (2 pi i)^{-2}:
//   1/12 + q^{a1}/(1-q^{a1})^2
//        + sum_{n>=1} [ sum_{d|n} d (q^{a1 d} + q^{-a1 d} - 2) ] q^{Nn}
// Requires 0 < a1 < N (InvalidDivisionPointError otherwise); the expansion
// has integer exponents >= 0.
LaurentSeries wp_division_value(long N, long a1, long qprec);

// product of rescaled eta factors prod_d eta(d z)^{r_d}
struct EtaQuotientSpec {
  long level = 0;
  // (divisor of the level, exponent), divisors ascending, exponents nonzero
  std::vector<std::pair<long, long>> exponents;
};

LaurentSeries eta_quotient_series(const EtaQuotientSpec& spec, long qprec);

}  // namespace qm
