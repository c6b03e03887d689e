#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "qm/faber.hpp"
#include "qm/hauptmodul.hpp"
#include "qm/series.hpp"

namespace qm {

// one failed instance of an identity: the index tuple plus both sides
struct Violation {
  std::vector<long> where;
  Rational lhs;
  Rational rhs;
};

// outcome of scanning one identity over a finite index range; all witnesses
// are collected rather than failing on the first
struct ViolationReport {
  std::string identity;
  std::string range;
  std::vector<Violation> witnesses;

  bool pass() const { return witnesses.empty(); }
};

// a normalized generator f together with the n-plicates f^{(n)} computed so
// far; plicates[1] is always f itself
struct PlicateFamily {
  Hauptmodul base;
  std::map<long, LaurentSeries> plicates;
};

PlicateFamily make_plicate_family(const Hauptmodul& f);

// the n-plicate, defined through n X_n(f)(z) = sum_{ad=n, 0<=b<d}
// f^{(a)}((az+b)/d): solve for the a=n term, i.e.
//   f^{(n)}(q^n lattice) = n X_n(f) - sum_{ad=n, d>1} d * dilate(f^{(a)}|U_d, a),
// then pull q^n back to q. Divisor plicates are computed and cached on
// demand. Throws NonDivisibleExponentError when the right side does not
// live on the q^n lattice (the family fails to replicate at n), and
// NormalizationError if the result is not q^{-1} + O(1).
const LaurentSeries& n_plicate(PlicateFamily& family, long n);

// H_{a,b} = H_{c,d} for all ab = cd <= bound with gcd(a,b) = gcd(c,d)
ViolationReport check_replication(const CoeffGrid& grid, long bound);

// H_{a,b} = psi(bd) H_{c,d} + (1 - psi(bd))/2 * h_{c,d} for all ab = cd <=
// bound with gcd(a,b) = gcd(c,d) and b, d coprime to the level; H is the
// gamma1 grid, h the gamma0 grid of the same level
ViolationReport check_super_replication(const CoeffGrid& grid1, const CoeffGrid& grid0, long bound);

// h_{m,n} = 2 H_{m,n} for all mn <= bound with gcd(mn, N) = 1 and
// mn not congruent to +-1 mod N
ViolationReport check_h_doubling(const CoeffGrid& grid1, const CoeffGrid& grid0, long bound);

// divisor-sum composition law relating the two grids: for gcd(n, N) =
// gcd(l, n) = 1,
//   sum_{e | gcd(m,n)} (1/e) [ psi(e) (2 H_{mn/e^2, l} - h_{mn/e^2, l}) + h_{mn/e^2, l} ]
//     = psi(n) (2 H_{m, ln} - h_{m, ln}) + h_{m, ln}
bool check_divisor_sum_identity(const CoeffGrid& grid1, const CoeffGrid& grid0, long n, long l,
                                long m);

// the same identity scanned over every (n, l, m) with l n m <= bound
ViolationReport check_divisor_sum_range(const CoeffGrid& grid1, const CoeffGrid& grid0, long bound);

// the odd character mod 4: 0 on even m, (-1)^((m-1)/2) on odd m
int chi_mod4(long m);

// twisted halving identity for a normalized generator t:
//   twist(t|U_{2^k}, chi_mod4) = (-1)^{k-1} * (odd-exponent part of X_{2^k}(t))
// compared exactly on exponents -2^k .. terms. Throws
// InsufficientPrecisionError when t cannot support `terms` compared terms.
bool check_twisted_plication(const LaurentSeries& t, long k, long terms);

// grid-column form of the same twist: H_{m, 2^k} = (-1)^{k-1} chi_mod4(m) *
// H_{2^k m} for odd m <= m_max and 1 <= k <= k_max, where H_j is the q^j
// coefficient of t itself
ViolationReport check_twisted_columns(const LaurentSeries& t, const CoeffGrid& grid, long k_max,
                                      long m_max);

enum class VanishMode {
  on_residue,   // coefficients at m = residue (mod modulus) must vanish
  off_residue,  // coefficients vanish unless m = residue (mod modulus)
};

// scans coefficients of q^m for 1 <= m <= max_m against the vanishing rule
ViolationReport check_periodic_vanishing(const LaurentSeries& f, long modulus, long residue,
                                         long max_m, VanishMode mode);

// true iff (f | U_p) has zero coefficient at q^1 .. q^{max_m}
bool check_up_annihilation(const LaurentSeries& f, long p, long max_m);

// the two cusp-value parameters of the four-branch coefficient recursion
struct RecursionParams {
  Rational alpha;
  Rational beta;
};

// value the four-branch recursion assigns to H_m from H_1 .. H_{m-1};
// H is 0-indexed (H[0] is H_1) and must hold at least m-1 entries, m >= 3.
// Branches by m mod 4; odd branches are linear in alpha, even in beta.
Rational recursion_step(const std::vector<Rational>& H, long m, const RecursionParams& params);

// generate H_1 .. H_M (0-indexed result) from the seed H_1..H_4
std::vector<Rational> self_recursion(const std::array<Rational, 4>& seed,
                                     const RecursionParams& params, long M);

// recover alpha from the first odd row with a nonzero H_{m-1} coefficient
// and beta from the first even row with nonzero H_{m-2}, m >= 3; throws
// SearchFailedError when every candidate row degenerates
RecursionParams solve_recursion_params(const std::vector<Rational>& H);

// H_1 .. H_max_m of an integer-lattice series (0-indexed result)
std::vector<Rational> coefficient_run(const LaurentSeries& f, long max_m);

}  // namespace qm
