#include <algorithm>
#include <filesystem>
#include <string>

#include "doctest.h"
#include "qm/atoms.hpp"
#include "qm/errors.hpp"
#include "qm/hauptmodul.hpp"
#include "qm/replication.hpp"
#include "qm/serialize.hpp"

using namespace qm;

namespace {

bool same_series(const LaurentSeries& a, const LaurentSeries& b) {
  return a.lattice_den() == b.lattice_den() && a.storage_val() == b.storage_val() &&
         a.precision() == b.precision() && a.coeffs() == b.coeffs();
}

}  // namespace

TEST_CASE("series survive a json round trip bit-exactly") {
  for (const LaurentSeries& f :
       {eta_series(12), j_series(6), LaurentSeries::zero(5),
        LaurentSeries::from_raw(3, -2, {Rational(1, 7), 0, Rational(-5, 3)})}) {
    LaurentSeries back = series_from_json(series_to_json(f));
    CHECK(same_series(f, back));
  }
}

TEST_CASE("malformed series json is rejected") {
  CHECK_THROWS_AS(series_from_json("not json"), ParseError);
  CHECK_THROWS_AS(series_from_json("[1,2,3]"), ParseError);
  CHECK_THROWS_AS(series_from_json(R"({"denominator":1,"valuation":0})"), ParseError);
  // precision must equal valuation + coefficient count
  CHECK_THROWS_AS(
      series_from_json(
          R"({"denominator":1,"valuation":0,"precision":5,"coefficients":["1","2"]})"),
      ParseError);
  CHECK_THROWS_AS(
      series_from_json(
          R"({"denominator":1,"valuation":0,"precision":1,"coefficients":["x"]})"),
      ParseError);
  CHECK_THROWS_AS(
      series_from_json(
          R"({"denominator":0,"valuation":0,"precision":1,"coefficients":["1"]})"),
      ParseError);
}

TEST_CASE("grids round trip through json and render as csv") {
  Hauptmodul t = build_gamma1_hauptmodul(8, 16);
  CoeffGrid g = coeff_grid(t, 5, 4);
  CoeffGrid back = grid_from_json(grid_to_json(g));
  CHECK(back.group == g.group);
  CHECK(back.level == g.level);
  CHECK(back.max_m == g.max_m);
  CHECK(back.max_n == g.max_n);
  CHECK(back.precision == g.precision);
  for (long m = 1; m <= 5; ++m)
    for (long n = 1; n <= 4; ++n) CHECK(back.at(m, n) == g.at(m, n));

  std::string csv = grid_to_csv(g);
  // header plus five data rows
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 6);
  CHECK(csv.find("m,1,2,3,4") == 0);

  CHECK_THROWS_AS(grid_from_json("{}"), ParseError);
  std::string bad = grid_to_json(g);
  bad.replace(bad.find("\"1,1\""), 5, "\"0,1\"");
  CHECK_THROWS_AS(grid_from_json(bad), ParseError);
}

TEST_CASE("grid cache stores and reloads by group and level") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "qm_cache_test";
  fs::remove_all(dir);

  Hauptmodul t = build_gamma0_hauptmodul(8, 16);
  CoeffGrid g = coeff_grid(t, 4, 4);
  CHECK(grid_cache_filename(GroupKind::gamma0, 8) == "grid_gamma0_8.json");

  CoeffGrid out;
  CHECK_FALSE(load_cached_grid(dir.string(), GroupKind::gamma0, 8, out));
  store_cached_grid(dir.string(), g);
  CHECK(load_cached_grid(dir.string(), GroupKind::gamma0, 8, out));
  CHECK(out.at(3, 4) == g.at(3, 4));
  // a cached file for a different group/level is not picked up
  CHECK_FALSE(load_cached_grid(dir.string(), GroupKind::gamma1, 8, out));
  fs::remove_all(dir);
}

TEST_CASE("violation reports serialize with status") {
  ViolationReport r;
  r.identity = "demo";
  r.range = "m <= 3";
  std::string passing = report_to_json(r);
  CHECK(passing.find("\"pass\"") != std::string::npos);

  r.witnesses.push_back({{2, 3}, Rational(1, 2), Rational(0)});
  std::string failing = report_to_json(r);
  CHECK(failing.find("\"fail\"") != std::string::npos);
  CHECK(failing.find("1/2") != std::string::npos);
  CHECK(failing.find("demo") != std::string::npos);
}

TEST_CASE("eta search pins parse from json config") {
  std::string text = R"({
    "8":  { "1": 4, "2": -2, "4": 2, "8": -4 },
    "5":  { "1": 6, "5": -6 }
  })";
  std::vector<EtaQuotientSpec> specs = eta_config_from_json(text);
  REQUIRE(specs.size() == 2);
  CHECK(specs[0].level == 5);
  CHECK(specs[0].exponents == std::vector<std::pair<long, long>>{{1, 6}, {5, -6}});
  CHECK(specs[1].level == 8);
  CHECK(specs[1].exponents ==
        std::vector<std::pair<long, long>>{{1, 4}, {2, -2}, {4, 2}, {8, -4}});

  CHECK_THROWS_AS(eta_config_from_json("[]"), ParseError);
  CHECK_THROWS_AS(eta_config_from_json(R"({"abc": {"1": 1}})"), ParseError);
}

TEST_CASE("group names parse both ways") {
  CHECK(group_from_name("gamma1") == GroupKind::gamma1);
  CHECK(group_from_name("gamma0") == GroupKind::gamma0);
  CHECK_THROWS_AS(group_from_name("gamma2"), ParseError);
  CHECK(group_name(GroupKind::gamma1) == std::string("gamma1"));
}

TEST_CASE("text files write and read back") {
  namespace fs = std::filesystem;
  fs::path p = fs::temp_directory_path() / "qm_text_test.txt";
  write_text_file(p.string(), "hello\n");
  CHECK(read_text_file(p.string()) == "hello\n");
  fs::remove(p);
  CHECK_THROWS_AS(read_text_file(p.string()), Error);
}
