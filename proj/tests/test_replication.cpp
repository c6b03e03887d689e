#include <vector>

#include "doctest.h"
#include "qm/atoms.hpp"
#include "qm/errors.hpp"
#include "qm/hauptmodul.hpp"
#include "qm/replication.hpp"

using namespace qm;

TEST_CASE("chi_mod4 is the odd character mod 4") {
  for (long m = 1; m < 100; m += 2) CHECK(chi_mod4(m) == kronecker_symbol(-1, m));
  for (long m = 0; m < 100; m += 2) CHECK(chi_mod4(m) == 0);
  for (long m = 1; m < 40; ++m) CHECK(chi_mod4(m) == chi_mod4(m + 4));
  CHECK(chi_mod4(1) == 1);
  CHECK(chi_mod4(3) == -1);
}

TEST_CASE("the full-level invariant is its own plicate") {
  Hauptmodul t = build_gamma1_hauptmodul(1, 170);
  PlicateFamily fam = make_plicate_family(t);
  CHECK(agree_on_range(fam.plicates.at(1), t.series, -1, 40));
  const LaurentSeries& p2 = n_plicate(fam, 2);
  CHECK(agree_on_range(p2, t.series, -1, 40));
  // n = 4 exercises the recursive divisor term through the cached 2-plicate
  const LaurentSeries& p4 = n_plicate(fam, 4);
  CHECK(agree_on_range(p4, t.series, -1, 8));
  CHECK(fam.plicates.size() == 3);
}

TEST_CASE("plicates of an eta-quotient generator stay normalized") {
  Hauptmodul t = build_gamma0_hauptmodul(5, 100);
  PlicateFamily fam = make_plicate_family(t);
  for (long n : {2L, 3L}) {
    const LaurentSeries& p = n_plicate(fam, n);
    CHECK(p.lattice_den() == 1);
    CHECK(p.valuation() == -1);
    CHECK(p.leading_coeff() == Rational(1));
    CHECK(p.coeff_q(0) == Rational(0));
  }
}

TEST_CASE("replication coincidences hold on gamma0 but not gamma1") {
  Hauptmodul t0 = build_gamma0_hauptmodul(5, 52);
  ViolationReport ok = check_replication(coeff_grid(t0, 24, 24), 24);
  CHECK(ok.pass());

  Hauptmodul t1 = build_gamma1_hauptmodul(12, 76);
  ViolationReport bad = check_replication(coeff_grid(t1, 36, 36), 36);
  CHECK_FALSE(bad.pass());
  for (const Violation& v : bad.witnesses) {
    REQUIRE(v.where.size() == 4);
    CHECK(v.where[0] * v.where[1] == v.where[2] * v.where[3]);
    CHECK(v.lhs != v.rhs);
  }
  CHECK_THROWS_AS(check_replication(coeff_grid(t0, 24, 24), 30), GridTooSmallError);
}

TEST_CASE("twisted grid relations between the gamma1 and gamma0 generators") {
  Hauptmodul t1 = build_gamma1_hauptmodul(12, 56);
  Hauptmodul t0 = build_gamma0_hauptmodul(12, 56);
  CoeffGrid g1 = coeff_grid(t1, 25, 25);
  CoeffGrid g0 = coeff_grid(t0, 25, 25);

  CHECK(check_super_replication(g1, g0, 24).pass());
  CHECK(check_h_doubling(g1, g0, 24).pass());
  CHECK(check_divisor_sum_range(g1, g0, 24).pass());
  CHECK(check_divisor_sum_identity(g1, g0, 5, 1, 5));

  CHECK_THROWS_AS(check_super_replication(g1, g0, 30), GridTooSmallError);

  Hauptmodul s1 = build_gamma1_hauptmodul(8, 60);
  Hauptmodul s0 = build_gamma0_hauptmodul(8, 60);
  CHECK(check_divisor_sum_identity(coeff_grid(s1, 27, 27), coeff_grid(s0, 27, 27), 3, 1, 9));
}

TEST_CASE("halving identity under the odd twist") {
  Hauptmodul t = build_gamma1_hauptmodul(12, 60);
  CHECK(check_twisted_plication(t.series, 1, 12));
  CHECK(check_twisted_plication(t.series, 2, 12));
  CHECK_THROWS_AS(check_twisted_plication(t.series, 2, 50), InsufficientPrecisionError);

  CoeffGrid g = coeff_grid(t, 9, 4);
  CHECK(check_twisted_columns(t.series, g, 2, 9).pass());
}

TEST_CASE("periodic vanishing in both scan modes") {
  Hauptmodul t12 = build_gamma1_hauptmodul(12, 104);
  CHECK(check_periodic_vanishing(t12.series, 6, 4, 100, VanishMode::on_residue).pass());
  CHECK(t12.series.coeff_q(5) == Rational(0));

  // the level-4 generator is odd in q: even coefficients vanish
  Hauptmodul t4 = build_gamma1_hauptmodul(4, 40);
  CHECK(check_periodic_vanishing(t4.series, 2, 0, 36, VanishMode::on_residue).pass());
  CHECK(check_periodic_vanishing(t4.series, 2, 1, 36, VanishMode::off_residue).pass());

  LaurentSeries f = LaurentSeries::from_raw(1, -1, {1, 0, 0, 0, 0, 1});
  ViolationReport r = check_periodic_vanishing(f, 6, 4, 4, VanishMode::on_residue);
  REQUIRE(r.witnesses.size() == 1);
  CHECK(r.witnesses[0].where == std::vector<long>{4});
  CHECK(r.witnesses[0].lhs == Rational(1));
  CHECK(r.witnesses[0].rhs == Rational(0));
  CHECK_FALSE(r.pass());
}

TEST_CASE("U_3 annihilates the level-9 cube quotient shifted by three") {
  EtaQuotientSpec spec;
  spec.level = 9;
  spec.exponents = {{1, 3}, {9, -3}};
  LaurentSeries f = add_scalar(eta_quotient_series(spec, 93), Rational(3));
  CHECK(check_up_annihilation(f, 3, 30));

  Hauptmodul t = build_gamma1_hauptmodul(12, 44);
  CHECK_FALSE(check_up_annihilation(t.series, 2, 20));
}

TEST_CASE("four-branch recursion reproduces the level-12 coefficients") {
  Hauptmodul t = build_gamma1_hauptmodul(12, 44);
  std::vector<Rational> H = coefficient_run(t.series, 40);
  RecursionParams params{Rational(1), Rational(0)};
  for (long m = 5; m <= 40; ++m) CHECK(recursion_step(H, m, params) == H[m - 1]);

  std::array<Rational, 4> seed = {H[0], H[1], H[2], H[3]};
  CHECK(self_recursion(seed, params, 40) == H);

  RecursionParams solved = solve_recursion_params(H);
  CHECK(solved.alpha == Rational(1));
  CHECK(solved.beta == Rational(0));
}

TEST_CASE("recursion parameters recovered at other levels") {
  Hauptmodul t8 = build_gamma1_hauptmodul(8, 44);
  std::vector<Rational> H8 = coefficient_run(t8.series, 40);
  RecursionParams p8 = solve_recursion_params(H8);
  CHECK(p8.alpha == Rational(2));
  CHECK(p8.beta == Rational(1));
  CHECK(self_recursion({H8[0], H8[1], H8[2], H8[3]}, p8, 40) == H8);

  Hauptmodul t10 = build_gamma1_hauptmodul(10, 44);
  RecursionParams p10 = solve_recursion_params(coefficient_run(t10.series, 40));
  CHECK(p10.alpha == Rational(2));
  CHECK(p10.beta == Rational(0));

  Hauptmodul t2 = build_gamma1_hauptmodul(2, 44);
  RecursionParams p2 = solve_recursion_params(coefficient_run(t2.series, 40));
  CHECK(p2.alpha == Rational(-24));
  CHECK(p2.beta == Rational(-24));

  std::vector<Rational> degenerate(12, Rational(0));
  degenerate[0] = Rational(1);
  CHECK_THROWS_AS(solve_recursion_params(degenerate), SearchFailedError);
}
