// end-to-end acceptance checks; always-on assertions, one summary line per
// check, first failure aborts with a nonzero exit
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "qm/cusps.hpp"
#include "qm/errors.hpp"
#include "qm/faber.hpp"
#include "qm/hauptmodul.hpp"
#include "qm/reference_data.hpp"
#include "qm/replication.hpp"
#include "qm/series.hpp"

#define REQUIRE(cond, msg)                                                      \
  do {                                                                          \
    if (!(cond)) {                                                              \
      std::cerr << "[FAIL] " << __FILE__ << ":" << __LINE__ << " " << msg       \
                << std::endl;                                                   \
      std::exit(1);                                                             \
    }                                                                           \
  } while (0)

using namespace qm;

namespace {

void pass(const std::string& what) { std::cout << "[PASS] " << what << std::endl; }

std::string at(long m, long n) {
  return "(" + std::to_string(m) + "," + std::to_string(n) + ")";
}

}  // namespace

int main() {
  // ---- 1: the published 60x6 coefficient table, bit-exact at precision 128
  const ReferenceTable& ref = reference_table();
  std::vector<Hauptmodul> table_gens;
  for (long N : ref.levels) table_gens.push_back(build_gamma1_hauptmodul(N, 128));
  for (size_t col = 0; col < ref.levels.size(); ++col) {
    for (long m = 1; m <= ref.max_m; ++m) {
      Rational got = table_gens[col].series.coeff_q(m);
      Rational want(reference_coefficient(ref.levels[col], m));
      REQUIRE(got == want, "coefficient mismatch at m=" << m << ", N=" << ref.levels[col]
                                                        << ": engine " << got.str()
                                                        << ", reference " << want.str());
    }
  }
  pass("reference coefficient table: 360/360 values reproduced at six levels");

  // ---- 2: the level-12 expansion prefix
  const Hauptmodul& t12_128 = table_gens.back();
  REQUIRE(t12_128.level == 12, "level ordering in the reference table changed");
  REQUIRE(t12_128.series.valuation() == -1 && t12_128.series.leading_coeff() == Rational(1),
          "level-12 generator is not q^{-1} + ...");
  REQUIRE(t12_128.series.coeff_q(0).is_zero(), "level-12 generator has a constant term");
  {
    const long long prefix[12] = {1, 1, 1, 0, 0, -1, -1, -1, -1, 0, 1, 2};
    for (long m = 1; m <= 12; ++m)
      REQUIRE(t12_128.series.coeff_q(m) == Rational(prefix[m - 1]),
              "level-12 prefix differs at q^" << m);
  }
  pass("level-12 expansion starts q^-1 + q + q^2 + q^3 - q^6 - q^7 - q^8 - q^9 + q^11 + 2q^12");

  // ---- 3: t * (t|U_2) = 1 at level 12, checked through q^100
  {
    Hauptmodul t = build_gamma1_hauptmodul(12, 210);
    LaurentSeries prod = mul(t.series, u_operator(t.series, 2));
    LaurentSeries one = LaurentSeries::constant(Rational(1), 101);
    REQUIRE(agree_on_range(prod, one, -2, 100),
            "t * (t|U_2) deviates from 1 within the first 100 terms");
  }
  pass("level-12 generator times its U_2 image equals 1 through q^100");

  // ---- 4/5/12: grid identities across the four levels with both groups
  {
    for (long N : {5L, 8L, 10L, 12L}) {
      Hauptmodul t1 = build_gamma1_hauptmodul(N, 124);
      Hauptmodul t0 = build_gamma0_hauptmodul(N, 124);
      CoeffGrid g1 = coeff_grid(t1, 60, 60);
      CoeffGrid g0 = coeff_grid(t0, 60, 60);

      ViolationReport sup = check_super_replication(g1, g0, 60);
      REQUIRE(sup.pass(), "super-replication violations at level "
                              << N << ": " << sup.witnesses.size() << ", first at "
                              << at(sup.witnesses[0].where[0], sup.witnesses[0].where[1]));
      ViolationReport dbl = check_h_doubling(g1, g0, 60);
      REQUIRE(dbl.pass(), "h = 2H fails at level " << N << " with "
                                                   << dbl.witnesses.size() << " witnesses");

      ViolationReport div = check_divisor_sum_range(g1, g0, 48);
      REQUIRE(div.pass(), "divisor-sum composition fails at level "
                              << N << " with " << div.witnesses.size() << " witnesses");

      ViolationReport rep = check_replication(g0, 36);
      REQUIRE(rep.pass(), "gamma0 replication coincidences fail at level "
                              << N << " with " << rep.witnesses.size() << " witnesses");
    }
  }
  pass("super-replication and h-doubling: zero violations for ab = cd <= 60 at levels 5, 8, 10, 12");
  pass("divisor-sum composition: exact for all (n, l, m) with l*n*m <= 48 at levels 5, 8, 10, 12");

  // ---- 6/7: the high-precision level-12 build
  {
    Hauptmodul t = build_gamma1_hauptmodul(12, 530);
    for (long k = 1; k <= 4; ++k)
      REQUIRE(check_twisted_plication(t.series, k, 32),
              "twisted halving identity fails at k=" << k);
    CoeffGrid g = coeff_grid(t, 31, 16);
    ViolationReport cols = check_twisted_columns(t.series, g, 4, 31);
    REQUIRE(cols.pass(),
            "twisted column identity fails with " << cols.witnesses.size() << " witnesses");
    pass("twisted halving identity holds for k = 1..4 through q^32, plus all grid columns");

    ViolationReport va = check_periodic_vanishing(t.series, 6, 4, 300, VanishMode::on_residue);
    REQUIRE(va.pass(), "coefficient at m = " << (va.witnesses.empty()
                                                     ? 0
                                                     : va.witnesses[0].where[0])
                                             << " should vanish (m = 4 mod 6)");
    REQUIRE(t.series.coeff_q(5).is_zero(), "H_5 must vanish at level 12");
    pass("level-12 coefficients vanish for m = 4 mod 6 up to 300, and at m = 5");
  }

  // ---- 8: grid symmetry at every built level
  {
    for (long N : {1L, 2L, 3L, 4L, 5L, 6L, 7L, 8L, 9L, 10L, 12L}) {
      Hauptmodul t = build_gamma1_hauptmodul(N, 52);
      CoeffGrid g = coeff_grid(t, 24, 24);
      for (long m = 1; m <= 24; ++m)
        for (long n = m + 1; n <= 24; ++n)
          REQUIRE(g.at(m, n) == g.at(n, m),
                  "gamma1(" << N << ") grid asymmetric at " << at(m, n));
    }
    for (long N : {5L, 8L, 10L, 12L}) {
      Hauptmodul t = build_gamma0_hauptmodul(N, 52);
      CoeffGrid g = coeff_grid(t, 24, 24);
      for (long m = 1; m <= 24; ++m)
        for (long n = m + 1; n <= 24; ++n)
          REQUIRE(g.at(m, n) == g.at(n, m),
                  "gamma0(" << N << ") grid asymmetric at " << at(m, n));
    }
  }
  pass("coefficient grids are symmetric through 24x24 at all fifteen generators");

  // ---- 9: the four-branch self-recursion
  {
    Hauptmodul t = build_gamma1_hauptmodul(12, 64);
    std::vector<Rational> H = coefficient_run(t.series, 60);
    RecursionParams seed12{Rational(1), Rational(0)};
    std::vector<Rational> regen =
        self_recursion({Rational(1), Rational(1), Rational(1), Rational(0)}, seed12, 60);
    for (long m = 5; m <= 60; ++m)
      REQUIRE(regen[static_cast<size_t>(m - 1)] == H[static_cast<size_t>(m - 1)],
              "level-12 recursion (alpha=1, beta=0) deviates at m=" << m);

    for (long N : {2L, 6L, 8L, 10L}) {
      Hauptmodul tn = build_gamma1_hauptmodul(N, 64);
      std::vector<Rational> Hn = coefficient_run(tn.series, 60);
      RecursionParams params = solve_recursion_params(Hn);
      std::vector<Rational> back = self_recursion({Hn[0], Hn[1], Hn[2], Hn[3]}, params, 60);
      REQUIRE(back == Hn, "solved recursion (alpha=" << params.alpha.str() << ", beta="
                                                     << params.beta.str()
                                                     << ") fails to regenerate level " << N);
    }
  }
  pass("four-branch self-recursion regenerates H_5..H_60 at levels 2, 6, 8, 10, 12");

  // ---- 10: the degree-48 integrality reduction
  {
    Hauptmodul t = build_gamma1_hauptmodul(12, 115);
    LaurentSeries j = j_series(115);
    std::vector<Rational> poly =
        verify_integrality_identity(t.series, j, cusp_product_polynomial_level12(), 48);
    REQUIRE(poly.size() == 49, "polynomial in t has degree " << poly.size() - 1 << ", not 48");
    REQUIRE(poly.back() == Rational(1), "polynomial in t is not monic");
    for (const Rational& c : poly)
      REQUIRE(c.is_integer(), "non-integer coefficient " << c.str() << " escaped the reduction");
  }
  pass("j times the cusp product reduces to a monic degree-48 integer polynomial in t");

  // ---- 11: cusp classes, widths, and the boundary-value product
  {
    std::vector<CuspLabel> reps = inequivalent_cusps(12);
    REQUIRE(reps.size() == 10, "expected ten cusp classes at level 12, found " << reps.size());
    const std::vector<CuspValue>& table = cusp_value_table_level12();
    REQUIRE(table.size() == 10, "boundary-value table does not list ten classes");
    long total = 0;
    for (const CuspValue& cv : table) {
      REQUIRE(cv.width == cusp_width(12, cv.cusp),
              "width mismatch at cusp " << cv.cusp.str());
      total += cv.width;
    }
    REQUIRE(total == 48, "cusp widths sum to " << total << ", not the index 48");
    REQUIRE(gamma1_index(12) == 48, "index of the level-12 group is not 48");

    std::vector<QuadValue> expanded = expand_cusp_product(table);
    std::vector<Rational> known = cusp_product_polynomial_level12();
    REQUIRE(expanded.size() == known.size(),
            "cusp product degree " << expanded.size() - 1 << " != " << known.size() - 1);
    for (size_t i = 0; i < known.size(); ++i) {
      REQUIRE(expanded[i].is_rational(),
              "irrational coefficient survives at x^" << i << ": " << expanded[i].str());
      REQUIRE(expanded[i].a == known[i], "cusp product differs at x^" << i);
    }
  }
  pass("ten cusp classes with widths summing to 48; boundary-value product matches the integer polynomial");
  pass("gamma0 replication coincidences: zero violations to bound 36 at levels 5, 8, 10, 12");

  std::cout << "all acceptance checks passed" << std::endl;
  return 0;
}
