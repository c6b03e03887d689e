#include "qm/replication.hpp"

#include <numeric>
#include <optional>

#include "qm/errors.hpp"

namespace qm {

namespace {

std::string group_pair_error(const CoeffGrid& grid1, const CoeffGrid& grid0) {
  if (grid1.group != GroupKind::gamma1) return "first grid must come from a gamma1 generator";
  if (grid0.group != GroupKind::gamma0) return "second grid must come from a gamma0 generator";
  if (grid1.level != grid0.level) return "grids are for different levels";
  return {};
}

void require_grid_pair(const CoeffGrid& grid1, const CoeffGrid& grid0, long bound) {
  std::string msg = group_pair_error(grid1, grid0);
  if (!msg.empty()) throw Error(msg);
  if (grid1.max_m < bound || grid1.max_n < bound || grid0.max_m < bound || grid0.max_n < bound)
    throw GridTooSmallError("bound " + std::to_string(bound) + " exceeds a grid dimension");
}

// ordered factorizations (a, b) with a * b = p, both indices grid-rangeable
std::vector<std::pair<long, long>> factor_pairs(long p) {
  std::vector<std::pair<long, long>> out;
  for (long a = 1; a <= p; ++a)
    if (p % a == 0) out.push_back({a, p / a});
  return out;
}

}  // namespace

PlicateFamily make_plicate_family(const Hauptmodul& f) {
  PlicateFamily fam{f, {}};
  fam.plicates.emplace(1, f.series);
  return fam;
}

const LaurentSeries& n_plicate(PlicateFamily& family, long n) {
  if (n < 1) throw Error("plicate order must be positive");
  auto it = family.plicates.find(n);
  if (it != family.plicates.end()) return it->second;
  for (long a = 1; a < n; ++a)
    if (n % a == 0) n_plicate(family, a);

  FaberPolynomial X = faber(family.base.series, n);
  LaurentSeries rhs = mul_scalar(X.series, Rational(n));
  for (long a = 1; a < n; ++a) {
    if (n % a != 0) continue;
    long d = n / a;
    const LaurentSeries& fa = family.plicates.at(a);
    rhs = sub(rhs, mul_scalar(dilate(u_operator(fa, d), a), Rational(d)));
  }
  LaurentSeries fn = undilate(rhs, n);
  if (fn.is_zero() || fn.lattice_den() != 1 || fn.valuation() != -1 ||
      !(fn.leading_coeff() == Rational(1)))
    throw NormalizationError("plicate of order " + std::to_string(n) + " is not q^{-1} + O(1)");
  return family.plicates.emplace(n, std::move(fn)).first->second;
}

ViolationReport check_replication(const CoeffGrid& grid, long bound) {
  if (grid.max_m < bound || grid.max_n < bound)
    throw GridTooSmallError("bound " + std::to_string(bound) + " exceeds a grid dimension");
  ViolationReport rep{"replication", "ab = cd <= " + std::to_string(bound), {}};
  for (long p = 1; p <= bound; ++p) {
    auto pairs = factor_pairs(p);
    for (size_t i = 0; i < pairs.size(); ++i) {
      for (size_t j = i + 1; j < pairs.size(); ++j) {
        if (std::gcd(pairs[i].first, pairs[i].second) != std::gcd(pairs[j].first, pairs[j].second))
          continue;
        const Rational& lhs = grid.at(pairs[i].first, pairs[i].second);
        const Rational& rhs = grid.at(pairs[j].first, pairs[j].second);
        if (!(lhs == rhs))
          rep.witnesses.push_back(
              {{pairs[i].first, pairs[i].second, pairs[j].first, pairs[j].second}, lhs, rhs});
      }
    }
  }
  return rep;
}

ViolationReport check_super_replication(const CoeffGrid& grid1, const CoeffGrid& grid0,
                                        long bound) {
  require_grid_pair(grid1, grid0, bound);
  long N = grid1.level;
  ViolationReport rep{"super-replication",
                      "ab = cd <= " + std::to_string(bound) + ", b and d coprime to " +
                          std::to_string(N),
                      {}};
  for (long p = 1; p <= bound; ++p) {
    auto pairs = factor_pairs(p);
    for (const auto& [a, b] : pairs) {
      if (std::gcd(b, N) != 1) continue;
      for (const auto& [c, d] : pairs) {
        if (std::gcd(d, N) != 1) continue;
        if (std::gcd(a, b) != std::gcd(c, d)) continue;
        int psi = psi_character(b * d, N);
        Rational lhs = grid1.at(a, b);
        Rational rhs = Rational(psi) * grid1.at(c, d) +
                       Rational(1 - psi, 2) * grid0.at(c, d);
        if (!(lhs == rhs)) rep.witnesses.push_back({{a, b, c, d}, lhs, rhs});
      }
    }
  }
  return rep;
}

ViolationReport check_h_doubling(const CoeffGrid& grid1, const CoeffGrid& grid0, long bound) {
  require_grid_pair(grid1, grid0, bound);
  long N = grid1.level;
  ViolationReport rep{"h-doubling",
                      "mn <= " + std::to_string(bound) + ", gcd(mn, " + std::to_string(N) +
                          ") = 1, mn != +-1 mod " + std::to_string(N),
                      {}};
  for (long m = 1; m <= bound; ++m) {
    for (long n = 1; m * n <= bound; ++n) {
      long mn = m * n;
      if (std::gcd(mn, N) != 1) continue;
      if (psi_character(mn, N) != -1) continue;
      const Rational& h = grid0.at(m, n);
      Rational twoH = Rational(2) * grid1.at(m, n);
      if (!(h == twoH)) rep.witnesses.push_back({{m, n}, h, twoH});
    }
  }
  return rep;
}

namespace {

std::pair<Rational, Rational> divisor_sum_sides(const CoeffGrid& grid1, const CoeffGrid& grid0,
                                                long N, long n, long l, long m) {
  if (std::gcd(n, N) != 1) throw Error("n must be coprime to the level");
  if (std::gcd(l, n) != 1) throw Error("l must be coprime to n");
  Rational lhs(0);
  long g = std::gcd(m, n);
  for (long e = 1; e <= g; ++e) {
    if (g % e != 0) continue;
    long idx = (m * n) / (e * e);
    Rational H = grid1.at(idx, l);
    Rational h = grid0.at(idx, l);
    Rational term = Rational(psi_character(e, N)) * (Rational(2) * H - h) + h;
    lhs += term / Rational(e);
  }
  Rational H = grid1.at(m, l * n);
  Rational h = grid0.at(m, l * n);
  Rational rhs = Rational(psi_character(n, N)) * (Rational(2) * H - h) + h;
  return {lhs, rhs};
}

}  // namespace

bool check_divisor_sum_identity(const CoeffGrid& grid1, const CoeffGrid& grid0, long n, long l,
                                long m) {
  std::string msg = group_pair_error(grid1, grid0);
  if (!msg.empty()) throw Error(msg);
  auto [lhs, rhs] = divisor_sum_sides(grid1, grid0, grid1.level, n, l, m);
  return lhs == rhs;
}

ViolationReport check_divisor_sum_range(const CoeffGrid& grid1, const CoeffGrid& grid0,
                                        long bound) {
  require_grid_pair(grid1, grid0, bound);
  long N = grid1.level;
  ViolationReport rep{"divisor-sum",
                      "l n m <= " + std::to_string(bound) + ", gcd(n, " + std::to_string(N) +
                          ") = gcd(l, n) = 1",
                      {}};
  for (long n = 1; n <= bound; ++n) {
    if (std::gcd(n, N) != 1) continue;
    for (long l = 1; l * n <= bound; ++l) {
      if (std::gcd(l, n) != 1) continue;
      for (long m = 1; l * n * m <= bound; ++m) {
        auto [lhs, rhs] = divisor_sum_sides(grid1, grid0, N, n, l, m);
        if (!(lhs == rhs)) rep.witnesses.push_back({{n, l, m}, lhs, rhs});
      }
    }
  }
  return rep;
}

int chi_mod4(long m) {
  if (m % 2 == 0) return 0;
  long r = ((m % 4) + 4) % 4;
  return r == 1 ? 1 : -1;
}

bool check_twisted_plication(const LaurentSeries& t, long k, long terms) {
  if (k < 1) throw Error("k must be positive");
  long n = 1;
  for (long i = 0; i < k; ++i) n *= 2;
  FaberPolynomial X = faber(t, n);
  LaurentSeries lhs = twist(u_operator(t, n), [](long m) { return chi_mod4(m); });
  LaurentSeries odd_part = mul_scalar(sub(X.series, negate_q(X.series)), Rational(1, 2));
  LaurentSeries rhs = (k % 2 == 1) ? odd_part : negate(odd_part);
  return agree_on_range(lhs, rhs, -n, terms);
}

ViolationReport check_twisted_columns(const LaurentSeries& t, const CoeffGrid& grid, long k_max,
                                      long m_max) {
  ViolationReport rep{"twisted-columns",
                      "k <= " + std::to_string(k_max) + ", odd m <= " + std::to_string(m_max),
                      {}};
  for (long k = 1; k <= k_max; ++k) {
    long n = 1;
    for (long i = 0; i < k; ++i) n *= 2;
    int sign = (k % 2 == 1) ? 1 : -1;
    for (long m = 1; m <= m_max; m += 2) {
      const Rational& lhs = grid.at(m, n);
      Rational rhs = Rational(sign * chi_mod4(m)) * t.coeff_q(n * m);
      if (!(lhs == rhs)) rep.witnesses.push_back({{k, m}, lhs, rhs});
    }
  }
  return rep;
}

ViolationReport check_periodic_vanishing(const LaurentSeries& f, long modulus, long residue,
                                         long max_m, VanishMode mode) {
  if (modulus < 1) throw Error("modulus must be positive");
  long r = ((residue % modulus) + modulus) % modulus;
  ViolationReport rep{
      mode == VanishMode::on_residue ? "vanishing-on-residue" : "vanishing-off-residue",
      "1 <= m <= " + std::to_string(max_m) + ", residue " + std::to_string(r) + " mod " +
          std::to_string(modulus),
      {}};
  for (long m = 1; m <= max_m; ++m) {
    bool at_residue = (m % modulus == r);
    bool must_vanish = (mode == VanishMode::on_residue) ? at_residue : !at_residue;
    if (!must_vanish) continue;
    const Rational& c = f.coeff_q(m);
    if (!c.is_zero()) rep.witnesses.push_back({{m}, c, Rational(0)});
  }
  return rep;
}

bool check_up_annihilation(const LaurentSeries& f, long p, long max_m) {
  LaurentSeries u = u_operator(f, p);
  for (long m = 1; m <= max_m; ++m)
    if (!u.coeff_q(m).is_zero()) return false;
  return true;
}

Rational recursion_step(const std::vector<Rational>& H, long m, const RecursionParams& params) {
  if (m < 3) throw Error("recursion starts at m = 3");
  if (static_cast<long>(H.size()) < m - 1)
    throw Error("recursion step " + std::to_string(m) + " needs H_1..H_" + std::to_string(m - 1));
  auto Hv = [&H](long i) -> const Rational& { return H[i - 1]; };
  Rational half(1, 2);
  switch (m % 4) {
    case 3: {  // m = 4k - 1
      long k = (m + 1) / 4;
      Rational v = half * Hv(2 * k - 1);
      for (long j = 1; j <= k - 1; ++j) v += Rational(2) * Hv(2 * j) * Hv(4 * k - 2 * j - 2);
      v += params.alpha * Hv(4 * k - 2);
      v -= half * Hv(2 * k - 1) * Hv(2 * k - 1);
      for (long j = 1; j <= 2 * k - 2; ++j) v -= Hv(j) * Hv(4 * k - j - 2);
      return v;
    }
    case 0: {  // m = 4k
      long k = m / 4;
      Rational v = -params.beta * Hv(4 * k - 2);
      for (long j = 1; j <= 2 * k - 2; ++j) v -= Hv(j) * Hv(2 * (2 * k - 1 - j));
      return v;
    }
    case 1: {  // m = 4k + 1
      long k = (m - 1) / 4;
      Rational v = half * Hv(2 * k);
      for (long j = 1; j <= k - 1; ++j) v += Rational(2) * Hv(2 * j) * Hv(4 * k - 2 * j);
      v += params.alpha * Hv(4 * k);
      v += half * Hv(2 * k) * Hv(2 * k);
      for (long j = 1; j <= 2 * k - 1; ++j) v -= Hv(j) * Hv(4 * k - j);
      return v;
    }
    default: {  // m = 4k + 2
      long k = (m - 2) / 4;
      Rational v = -params.beta * Hv(4 * k);
      for (long j = 1; j <= 2 * k - 1; ++j) v -= Hv(j) * Hv(2 * (2 * k - j));
      return v;
    }
  }
}

std::vector<Rational> self_recursion(const std::array<Rational, 4>& seed,
                                     const RecursionParams& params, long M) {
  std::vector<Rational> H;
  H.reserve(std::max<long>(M, 0));
  for (long i = 0; i < std::min<long>(M, 4); ++i) H.push_back(seed[i]);
  for (long m = 5; m <= M; ++m) H.push_back(recursion_step(H, m, params));
  return H;
}

RecursionParams solve_recursion_params(const std::vector<Rational>& H) {
  const long L = static_cast<long>(H.size());
  const RecursionParams zero{Rational(0), Rational(0)};
  std::optional<Rational> alpha, beta;
  for (long m = 3; m <= L && (!alpha || !beta); ++m) {
    if (m % 2 == 1) {
      if (alpha) continue;
      const Rational& c = H[m - 2];  // multiplies alpha in the odd branches
      if (c.is_zero()) continue;
      alpha = (H[m - 1] - recursion_step(H, m, zero)) / c;
    } else {
      if (beta) continue;
      const Rational& c = H[m - 3];  // multiplies -beta in the even branches
      if (c.is_zero()) continue;
      beta = (recursion_step(H, m, zero) - H[m - 1]) / c;
    }
  }
  if (!alpha || !beta)
    throw SearchFailedError("no usable recursion row to solve for alpha and beta");
  return {*alpha, *beta};
}

std::vector<Rational> coefficient_run(const LaurentSeries& f, long max_m) {
  std::vector<Rational> out;
  out.reserve(std::max<long>(max_m, 0));
  for (long m = 1; m <= max_m; ++m) out.push_back(f.coeff_q(m));
  return out;
}

}  // namespace qm
