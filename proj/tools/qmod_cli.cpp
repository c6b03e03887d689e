#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qm/cusps.hpp"
#include "qm/errors.hpp"
#include "qm/faber.hpp"
#include "qm/hauptmodul.hpp"
#include "qm/reference_data.hpp"
#include "qm/replication.hpp"
#include "qm/serialize.hpp"
#include "qm/series.hpp"

namespace {

using namespace qm;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  long precision = 128;
  long level = 0;               // expand
  std::vector<long> levels;     // verify
  long bound = -1;              // -1: per-suite default
  long max_m = -1;              // -1: per-suite default
  long terms = 20;
  std::string group = "gamma1";
  std::string suite = "all";
  std::string format = "text";
  std::string output;
  std::string eta_config_path;
  std::string cache_dir;
  bool diff = false;
};

void validate_config(const RunConfig& cfg) {
  if (cfg.precision < 8) throw ConfigError("precision must be at least 8");
  if (cfg.format != "json" && cfg.format != "csv" && cfg.format != "text")
    throw ConfigError("format must be json, csv, or text");
  auto check_level = [](long N) {
    if (!((N >= 1 && N <= 10) || N == 12))
      throw ConfigError("unsupported level " + std::to_string(N));
  };
  if (cfg.level != 0) check_level(cfg.level);
  for (long N : cfg.levels) check_level(N);
}

std::string resolve_cache_dir(const RunConfig& cfg) {
  if (!cfg.cache_dir.empty()) return cfg.cache_dir;
  if (const char* env = std::getenv("QMOD_CACHE_DIR")) return env;
  return {};
}

std::map<long, EtaQuotientSpec> load_eta_pins(const RunConfig& cfg) {
  std::map<long, EtaQuotientSpec> pins;
  if (cfg.eta_config_path.empty()) return pins;
  for (EtaQuotientSpec& s : eta_config_from_json(read_text_file(cfg.eta_config_path))) {
    long level = s.level;
    pins.emplace(level, std::move(s));
  }
  return pins;
}

std::optional<EtaQuotientSpec> pin_for(const std::map<long, EtaQuotientSpec>& pins, long level) {
  auto it = pins.find(level);
  if (it == pins.end()) return std::nullopt;
  return it->second;
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.output.empty())
    std::cout << text;
  else
    write_text_file(cfg.output, text);
}

Hauptmodul build_generator(GroupKind group, long level, long qprec,
                           const std::map<long, EtaQuotientSpec>& pins) {
  if (group == GroupKind::gamma1) return build_gamma1_hauptmodul(level, qprec);
  return build_gamma0_hauptmodul(level, qprec, pin_for(pins, level));
}

// grids are cached per (group, level); a cached grid is reused only when it
// is at least as large as requested
CoeffGrid obtain_grid(const RunConfig& cfg, const std::map<long, EtaQuotientSpec>& pins,
                      GroupKind group, long level, long dim, long qprec) {
  std::string dir = resolve_cache_dir(cfg);
  if (!dir.empty()) {
    CoeffGrid cached;
    if (load_cached_grid(dir, group, level, cached) && cached.max_m >= dim &&
        cached.max_n >= dim)
      return cached;
  }
  Hauptmodul t = build_generator(group, level, qprec, pins);
  CoeffGrid g = coeff_grid(t, dim, dim);
  if (!dir.empty()) store_cached_grid(dir, g);
  return g;
}

std::vector<long> suite_levels(const RunConfig& cfg, std::vector<long> defaults,
                               const std::vector<long>& allowed, const char* suite) {
  std::vector<long> use = cfg.levels.empty() ? std::move(defaults) : cfg.levels;
  for (long N : use)
    if (std::find(allowed.begin(), allowed.end(), N) == allowed.end())
      throw ConfigError(std::string(suite) + " suite does not support level " +
                        std::to_string(N));
  return use;
}

void tag_level(ViolationReport& rep, GroupKind group, long level) {
  rep.identity += std::string(" @ ") + group_name(group) + "(" + std::to_string(level) + ")";
}

std::vector<ViolationReport> suite_replication(const RunConfig& cfg,
                                               const std::map<long, EtaQuotientSpec>& pins) {
  long bound = cfg.bound > 0 ? cfg.bound : 36;
  long qprec = std::max(cfg.precision, 2 * bound + 4);
  std::vector<ViolationReport> out;
  for (long N : suite_levels(cfg, {5, 8, 10, 12}, {5, 8, 10, 12}, "replication")) {
    CoeffGrid g = obtain_grid(cfg, pins, GroupKind::gamma0, N, bound, qprec);
    ViolationReport rep = check_replication(g, bound);
    tag_level(rep, GroupKind::gamma0, N);
    out.push_back(std::move(rep));
  }
  return out;
}

std::vector<ViolationReport> suite_super_replication(
    const RunConfig& cfg, const std::map<long, EtaQuotientSpec>& pins) {
  long bound = cfg.bound > 0 ? cfg.bound : 60;
  long qprec = std::max(cfg.precision, 2 * bound + 4);
  std::vector<ViolationReport> out;
  for (long N : suite_levels(cfg, {5, 8, 10, 12}, {5, 8, 10, 12}, "super-replication")) {
    CoeffGrid g1 = obtain_grid(cfg, pins, GroupKind::gamma1, N, bound, qprec);
    CoeffGrid g0 = obtain_grid(cfg, pins, GroupKind::gamma0, N, bound, qprec);
    ViolationReport rep = check_super_replication(g1, g0, bound);
    tag_level(rep, GroupKind::gamma1, N);
    out.push_back(std::move(rep));
    ViolationReport dbl = check_h_doubling(g1, g0, bound);
    tag_level(dbl, GroupKind::gamma1, N);
    out.push_back(std::move(dbl));
  }
  return out;
}

std::vector<ViolationReport> suite_divisor_sum(const RunConfig& cfg,
                                               const std::map<long, EtaQuotientSpec>& pins) {
  long bound = cfg.bound > 0 ? cfg.bound : 48;
  long qprec = std::max(cfg.precision, 2 * bound + 4);
  std::vector<ViolationReport> out;
  for (long N : suite_levels(cfg, {5, 8, 10, 12}, {5, 8, 10, 12}, "divisor-sum")) {
    CoeffGrid g1 = obtain_grid(cfg, pins, GroupKind::gamma1, N, bound, qprec);
    CoeffGrid g0 = obtain_grid(cfg, pins, GroupKind::gamma0, N, bound, qprec);
    ViolationReport rep = check_divisor_sum_range(g1, g0, bound);
    tag_level(rep, GroupKind::gamma1, N);
    out.push_back(std::move(rep));
  }
  return out;
}

std::vector<ViolationReport> suite_twisted(const RunConfig& cfg) {
  suite_levels(cfg, {12}, {12}, "twisted");
  long terms = cfg.max_m > 0 ? cfg.max_m : 32;
  const long k_max = 4;
  long qprec = std::max(cfg.precision, (1L << k_max) * (terms + 2));
  Hauptmodul t = build_gamma1_hauptmodul(12, qprec);

  ViolationReport halving{"twisted halving",
                          "k = 1.." + std::to_string(k_max) + ", compared through q^" +
                              std::to_string(terms),
                          {}};
  for (long k = 1; k <= k_max; ++k)
    if (!check_twisted_plication(t.series, k, terms))
      halving.witnesses.push_back({{k}, Rational(0), Rational(1)});
  tag_level(halving, GroupKind::gamma1, 12);

  const long m_max = 31;
  CoeffGrid g = coeff_grid(t, m_max, 1L << k_max);
  ViolationReport cols = check_twisted_columns(t.series, g, k_max, m_max);
  tag_level(cols, GroupKind::gamma1, 12);
  return {std::move(halving), std::move(cols)};
}

std::vector<ViolationReport> suite_recursion(const RunConfig& cfg) {
  long bound = cfg.bound > 0 ? cfg.bound : 60;
  if (bound < 8) throw ConfigError("recursion bound must be at least 8");
  long qprec = std::max(cfg.precision, bound + 4);
  std::vector<ViolationReport> out;
  for (long N : suite_levels(cfg, {2, 6, 8, 10, 12}, {2, 6, 8, 10, 12}, "recursion")) {
    Hauptmodul t = build_gamma1_hauptmodul(N, qprec);
    std::vector<Rational> H = coefficient_run(t.series, bound);
    RecursionParams params = solve_recursion_params(H);
    ViolationReport rep{"coefficient self-recursion",
                        "5 <= m <= " + std::to_string(bound) + ", alpha = " +
                            params.alpha.str() + ", beta = " + params.beta.str(),
                        {}};
    for (long m = 5; m <= bound; ++m) {
      Rational v = recursion_step(H, m, params);
      if (!(v == H[static_cast<size_t>(m - 1)]))
        rep.witnesses.push_back({{m}, v, H[static_cast<size_t>(m - 1)]});
    }
    std::vector<Rational> regen = self_recursion({H[0], H[1], H[2], H[3]}, params, bound);
    if (regen != H) rep.witnesses.push_back({{0}, Rational(0), Rational(1)});
    tag_level(rep, GroupKind::gamma1, N);
    out.push_back(std::move(rep));
  }
  return out;
}

std::vector<ViolationReport> suite_vanishing(const RunConfig& cfg) {
  suite_levels(cfg, {12}, {12}, "vanishing");
  long max_m = cfg.max_m > 0 ? cfg.max_m : 300;
  long qprec = std::max(cfg.precision, max_m + 4);
  Hauptmodul t = build_gamma1_hauptmodul(12, qprec);
  ViolationReport rep = check_periodic_vanishing(t.series, 6, 4, max_m, VanishMode::on_residue);
  tag_level(rep, GroupKind::gamma1, 12);

  ViolationReport lone{"isolated vanishing", "m = 5", {}};
  Rational h5 = t.series.coeff_q(5);
  if (!h5.is_zero()) lone.witnesses.push_back({{5}, h5, Rational(0)});
  tag_level(lone, GroupKind::gamma1, 12);
  return {std::move(rep), std::move(lone)};
}

std::vector<ViolationReport> suite_integrality(const RunConfig& cfg) {
  suite_levels(cfg, {12}, {12}, "integrality");
  long qprec = std::max(cfg.precision, 110L);
  Hauptmodul t = build_gamma1_hauptmodul(12, qprec);
  LaurentSeries j = j_series(qprec);
  ViolationReport rep{"integrality reduction", "", {}};
  try {
    std::vector<Rational> coeffs =
        verify_integrality_identity(t.series, j, cusp_product_polynomial_level12(), 48);
    rep.range = "j times the cusp product is monic of degree " +
                std::to_string(coeffs.size() - 1) +
                " in t with integer coefficients, zero residual";
  } catch (const Error& e) {
    rep.range = e.what();
    rep.witnesses.push_back({{48}, Rational(0), Rational(1)});
  }
  tag_level(rep, GroupKind::gamma1, 12);
  return {std::move(rep)};
}

std::vector<ViolationReport> suite_cusps(const RunConfig& cfg) {
  suite_levels(cfg, {12}, {12}, "cusps");
  const std::vector<CuspValue>& table = cusp_value_table_level12();
  std::vector<CuspLabel> reps = inequivalent_cusps(12);

  ViolationReport classes{"cusp classes", "level 12: ten classes with gcd widths", {}};
  if (reps.size() != 10)
    classes.witnesses.push_back(
        {{static_cast<long>(reps.size())}, Rational(static_cast<long>(reps.size())), Rational(10)});
  for (const CuspValue& cv : table) {
    long w = cusp_width(12, cv.cusp);
    if (cv.width != w)
      classes.witnesses.push_back({{cv.cusp.num, cv.cusp.den}, Rational(cv.width), Rational(w)});
    long hits = 0;
    for (const CuspLabel& r : reps)
      if (cusps_equivalent(12, cv.cusp, r)) ++hits;
    if (hits != 1)
      classes.witnesses.push_back({{cv.cusp.num, cv.cusp.den}, Rational(hits), Rational(1)});
  }

  ViolationReport wsum{"cusp width sum", "sum of class widths equals the index", {}};
  long total = 0;
  for (const CuspValue& cv : table) total += cv.width;
  if (total != gamma1_index(12))
    wsum.witnesses.push_back({{total}, Rational(total), Rational(gamma1_index(12))});

  ViolationReport prod{"cusp product polynomial",
                       "boundary-value expansion matches the integer form", {}};
  std::vector<QuadValue> expanded = expand_cusp_product(table);
  std::vector<Rational> known = cusp_product_polynomial_level12();
  if (expanded.size() != known.size()) {
    prod.witnesses.push_back({{static_cast<long>(expanded.size())},
                              Rational(static_cast<long>(expanded.size())),
                              Rational(static_cast<long>(known.size()))});
  } else {
    for (size_t i = 0; i < known.size(); ++i) {
      if (!expanded[i].is_rational() || !(expanded[i].a == known[i]))
        prod.witnesses.push_back({{static_cast<long>(i)}, expanded[i].a, known[i]});
    }
  }
  return {std::move(classes), std::move(wsum), std::move(prod)};
}

std::vector<ViolationReport> run_suite(const RunConfig& cfg, const std::string& suite,
                                       const std::map<long, EtaQuotientSpec>& pins) {
  if (suite == "replication") return suite_replication(cfg, pins);
  if (suite == "super-replication") return suite_super_replication(cfg, pins);
  if (suite == "divisor-sum") return suite_divisor_sum(cfg, pins);
  if (suite == "twisted") return suite_twisted(cfg);
  if (suite == "recursion") return suite_recursion(cfg);
  if (suite == "vanishing") return suite_vanishing(cfg);
  if (suite == "integrality") return suite_integrality(cfg);
  if (suite == "cusps") return suite_cusps(cfg);
  throw ConfigError("unknown suite '" + suite + "'");
}

std::string format_where(const std::vector<long>& where) {
  std::string s = "(";
  for (size_t i = 0; i < where.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(where[i]);
  }
  return s + ")";
}

int cmd_verify(const RunConfig& cfg) {
  std::map<long, EtaQuotientSpec> pins = load_eta_pins(cfg);
  std::vector<std::string> suites;
  if (cfg.suite == "all") {
    if (!cfg.levels.empty())
      throw ConfigError("--level applies to a single suite; 'all' runs every suite's defaults");
    suites = {"replication", "super-replication", "divisor-sum", "twisted",
              "recursion",   "vanishing",         "integrality", "cusps"};
  } else {
    suites = {cfg.suite};
  }

  std::vector<ViolationReport> reports;
  for (const std::string& s : suites)
    for (ViolationReport& r : run_suite(cfg, s, pins)) reports.push_back(std::move(r));

  bool ok = std::all_of(reports.begin(), reports.end(),
                        [](const ViolationReport& r) { return r.pass(); });

  if (cfg.format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const ViolationReport& r : reports) arr.push_back(nlohmann::json::parse(report_to_json(r)));
    emit(cfg, arr.dump(2) + "\n");
  } else if (cfg.format == "text") {
    std::ostringstream os;
    for (const ViolationReport& r : reports) {
      if (r.pass()) {
        os << "[pass] " << r.identity << " (" << r.range << ")\n";
      } else {
        os << "[fail] " << r.identity << " (" << r.range << "): " << r.witnesses.size()
           << " violation" << (r.witnesses.size() == 1 ? "" : "s") << "\n";
        size_t shown = std::min<size_t>(r.witnesses.size(), 5);
        for (size_t i = 0; i < shown; ++i)
          os << "  at " << format_where(r.witnesses[i].where) << ": "
             << r.witnesses[i].lhs.str() << " != " << r.witnesses[i].rhs.str() << "\n";
        if (shown < r.witnesses.size())
          os << "  ... " << (r.witnesses.size() - shown) << " more\n";
      }
    }
    os << "result: " << (ok ? "pass" : "fail") << "\n";
    emit(cfg, os.str());
  } else {
    throw ConfigError("verify reports support text or json format");
  }
  return ok ? 0 : 1;
}

int cmd_expand(const RunConfig& cfg) {
  if (cfg.level == 0) throw ConfigError("expand requires --level");
  if (cfg.terms < 1) throw ConfigError("--terms must be positive");
  std::map<long, EtaQuotientSpec> pins = load_eta_pins(cfg);
  GroupKind group = group_from_name(cfg.group);
  long qprec = std::max(cfg.precision, cfg.terms + 4);
  Hauptmodul t = build_generator(group, cfg.level, qprec, pins);
  LaurentSeries shown = truncate(t.series, cfg.terms + 1);

  if (cfg.format == "json") {
    emit(cfg, series_to_json(shown));
  } else if (cfg.format == "csv") {
    std::ostringstream os;
    os << "exponent,coefficient\n";
    for (long n = -1; n <= cfg.terms; ++n) os << n << "," << shown.coeff_q(n).str() << "\n";
    emit(cfg, os.str());
  } else {
    emit(cfg, shown.display(cfg.terms + 4) + "\n");
  }
  return 0;
}

int cmd_coefficients(const RunConfig& cfg) {
  const ReferenceTable& ref = reference_table();
  long qprec = std::max(cfg.precision, ref.max_m + 4);
  std::vector<std::vector<Rational>> columns;
  for (long N : ref.levels) {
    Hauptmodul t = build_gamma1_hauptmodul(N, qprec);
    columns.push_back(coefficient_run(t.series, ref.max_m));
  }

  if (cfg.diff) {
    long total = ref.max_m * static_cast<long>(ref.levels.size());
    long matched = 0;
    std::ostringstream mism;
    for (long m = 1; m <= ref.max_m; ++m) {
      for (size_t col = 0; col < ref.levels.size(); ++col) {
        const Rational& got = columns[col][static_cast<size_t>(m - 1)];
        Rational want(reference_coefficient(ref.levels[col], m));
        if (got == want) {
          ++matched;
        } else {
          mism << "mismatch at m=" << m << ", N=" << ref.levels[col] << ": engine "
               << got.str() << ", reference " << want.str() << "\n";
        }
      }
    }
    bool ok = matched == total;
    if (cfg.format == "json") {
      nlohmann::json j;
      j["matched"] = matched;
      j["total"] = total;
      j["status"] = ok ? "pass" : "fail";
      emit(cfg, j.dump(2) + "\n");
    } else {
      emit(cfg, std::to_string(matched) + "/" + std::to_string(total) + " match\n" + mism.str());
    }
    return ok ? 0 : 1;
  }

  if (cfg.format == "json") {
    nlohmann::json j;
    j["levels"] = ref.levels;
    j["max_m"] = ref.max_m;
    nlohmann::json cols = nlohmann::json::object();
    for (size_t col = 0; col < ref.levels.size(); ++col) {
      nlohmann::json arr = nlohmann::json::array();
      for (const Rational& v : columns[col]) arr.push_back(v.str());
      cols[std::to_string(ref.levels[col])] = std::move(arr);
    }
    j["columns"] = std::move(cols);
    emit(cfg, j.dump(2) + "\n");
  } else if (cfg.format == "csv") {
    std::ostringstream os;
    os << "m";
    for (long N : ref.levels) os << "," << N;
    os << "\n";
    for (long m = 1; m <= ref.max_m; ++m) {
      os << m;
      for (size_t col = 0; col < ref.levels.size(); ++col)
        os << "," << columns[col][static_cast<size_t>(m - 1)].str();
      os << "\n";
    }
    emit(cfg, os.str());
  } else {
    std::ostringstream os;
    os << std::setw(4) << "m";
    for (long N : ref.levels) os << std::setw(14) << ("N=" + std::to_string(N));
    os << "\n";
    for (long m = 1; m <= ref.max_m; ++m) {
      os << std::setw(4) << m;
      for (size_t col = 0; col < ref.levels.size(); ++col)
        os << std::setw(14) << columns[col][static_cast<size_t>(m - 1)].str();
      os << "\n";
    }
    emit(cfg, os.str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact q-series engine for genus-zero modular generators"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&cfg](CLI::App* sub) {
    sub->add_option("--precision", cfg.precision, "series precision (highest tracked q-exponent)");
    sub->add_option("--format", cfg.format, "output format: text, json, csv");
    sub->add_option("--output", cfg.output, "write output to this file instead of stdout");
    sub->add_option("--eta-config", cfg.eta_config_path,
                    "JSON file pinning eta-quotient exponents per level");
    sub->add_option("--cache-dir", cfg.cache_dir,
                    "coefficient-grid cache directory (overrides QMOD_CACHE_DIR)");
  };

  CLI::App* expand = app.add_subcommand("expand", "print a generator's q-expansion");
  expand->add_option("--level", cfg.level, "congruence level")->required();
  expand->add_option("--group", cfg.group, "gamma1 (default) or gamma0");
  expand->add_option("--terms", cfg.terms, "coefficients through q^terms");
  add_common(expand);

  CLI::App* coefficients = app.add_subcommand(
      "coefficients", "emit the 60-row coefficient table across the six split levels");
  coefficients->add_flag("--diff", cfg.diff, "compare against the embedded reference table");
  add_common(coefficients);

  CLI::App* verify = app.add_subcommand("verify", "run identity verification suites");
  verify
      ->add_option("--suite", cfg.suite,
                   "replication, super-replication, divisor-sum, twisted, recursion, "
                   "vanishing, integrality, cusps, all")
      ->check(CLI::IsMember({"replication", "super-replication", "divisor-sum", "twisted",
                             "recursion", "vanishing", "integrality", "cusps", "all"}));
  verify->add_option("--level", cfg.levels, "restrict the suite to these levels");
  verify->add_option("--bound", cfg.bound, "index bound for grid identities");
  verify->add_option("--max", cfg.max_m, "coefficient scan limit (vanishing, twisted)");
  add_common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    validate_config(cfg);
    if (expand->parsed()) return cmd_expand(cfg);
    if (coefficients->parsed()) return cmd_coefficients(cfg);
    if (verify->parsed()) return cmd_verify(cfg);
    return 2;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const UnsupportedLevelError& e) {
    std::cerr << "error: unsupported level (" << e.what() << ")\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
