#pragma once

#include <optional>

#include "qm/atoms.hpp"
#include "qm/series.hpp"

namespace qm {

enum class GroupKind { gamma1, gamma0 };

const char* group_name(GroupKind g);

// a normalized genus-zero generator: series = q^{-1} + 0 + sum_{m>=1} H_m q^m
// with integer coefficients
struct Hauptmodul {
  GroupKind group = GroupKind::gamma1;
  long level = 0;
  LaurentSeries series;
  // the eta exponent vector behind a gamma0 construction (empty otherwise)
  EtaQuotientSpec eta;
};

// throws NormalizationError / NonIntegerCoefficientError unless the series
// is q^{-1} + 0 + (integer coefficients) on the integer lattice
void verify_normalization(const LaurentSeries& t);

// normalized Hauptmodul of the degree-1-quotient congruence group of level N
// (N in 1..10 or 12; the genus-zero levels); coefficients exact through
// q^qprec at least
Hauptmodul build_gamma1_hauptmodul(long N, long qprec);

// eta-quotient Hauptmodul for level N in {5, 8, 10, 12}; `pinned` overrides
// the exponent search (level must match)
Hauptmodul build_gamma0_hauptmodul(long N, long qprec,
                                   const std::optional<EtaQuotientSpec>& pinned = std::nullopt);

// order of the eta quotient at the cusp class 1/c of level N (c | N), on the
// curve: (N / (24 gcd(c^2, N))) * sum_d gcd(c,d)^2 r_d / d
Rational eta_quotient_cusp_order(const EtaQuotientSpec& spec, long c);

// smallest admissible eta quotient with a simple pole at infinity and no
// other pole: sum r_d = 0, sum d r_d = -24, nonnegative order at every
// other cusp, the standard mod-24 and square integrality conditions, all
// |r_d| <= bound; ties broken by smaller sum |r_d|, then lexicographically.
// Throws SearchFailedError when nothing in range qualifies.
EtaQuotientSpec find_eta_hauptmodul(long N, long bound);

// index of the image of the level-N congruence group in the full modular
// group: N^2/2 * prod_{p|N} (1 - p^-2) for N >= 3, with 1, 3 for N = 1, 2
long gamma1_index(long N);

}  // namespace qm
