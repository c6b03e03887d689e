#include "qm/serialize.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "qm/errors.hpp"

namespace qm {

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

Rational parse_rational(const json& j, const char* what) {
  if (!j.is_string()) throw ParseError(std::string(what) + " must be a rational string");
  return Rational::parse(j.get<std::string>());
}

}  // namespace

std::string series_to_json(const LaurentSeries& f) {
  json j;
  j["denominator"] = f.lattice_den();
  j["valuation"] = f.storage_val();
  j["precision"] = f.precision();
  json coeffs = json::array();
  for (const Rational& c : f.coeffs()) coeffs.push_back(c.str());
  j["coefficients"] = std::move(coeffs);
  return j.dump(2) + "\n";
}

LaurentSeries series_from_json(const std::string& text) {
  json j = parse_json(text);
  try {
    long den = j.at("denominator").get<long>();
    long val = j.at("valuation").get<long>();
    long prec = j.at("precision").get<long>();
    if (den < 1) throw ParseError("lattice denominator must be >= 1");
    const json& coeffs = j.at("coefficients");
    if (!coeffs.is_array()) throw ParseError("coefficients must be an array");
    std::vector<Rational> c;
    c.reserve(coeffs.size());
    for (const json& e : coeffs) c.push_back(parse_rational(e, "coefficient"));
    if (prec != val + static_cast<long>(c.size()))
      throw ParseError("precision does not match valuation + coefficient count");
    return LaurentSeries::from_raw(den, val, std::move(c));
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad series object: ") + e.what());
  }
}

std::string grid_to_json(const CoeffGrid& g) {
  json j;
  j["group"] = group_name(g.group);
  j["level"] = g.level;
  j["precision"] = g.precision;
  j["max_m"] = g.max_m;
  j["max_n"] = g.max_n;
  json entries = json::object();
  for (long m = 1; m <= g.max_m; ++m)
    for (long n = 1; n <= g.max_n; ++n)
      entries[std::to_string(m) + "," + std::to_string(n)] = g.at(m, n).str();
  j["entries"] = std::move(entries);
  return j.dump(2) + "\n";
}

CoeffGrid grid_from_json(const std::string& text) {
  json j = parse_json(text);
  try {
    CoeffGrid g;
    g.group = group_from_name(j.at("group").get<std::string>());
    g.level = j.at("level").get<long>();
    g.precision = j.at("precision").get<long>();
    g.max_m = j.at("max_m").get<long>();
    g.max_n = j.at("max_n").get<long>();
    if (g.max_m < 1 || g.max_n < 1) throw ParseError("grid dimensions must be positive");
    g.entries.assign(static_cast<size_t>(g.max_m) * g.max_n, Rational(0));
    const json& entries = j.at("entries");
    if (!entries.is_object()) throw ParseError("entries must be an object");
    size_t seen = 0;
    for (const auto& [key, value] : entries.items()) {
      std::istringstream is(key);
      long m = 0, n = 0;
      char comma = 0;
      if (!(is >> m >> comma >> n) || comma != ',' || !is.eof())
        throw ParseError("bad grid key '" + key + "'");
      if (m < 1 || m > g.max_m || n < 1 || n > g.max_n)
        throw ParseError("grid key '" + key + "' out of range");
      g.entries[static_cast<size_t>(m - 1) * g.max_n + (n - 1)] = parse_rational(value, "entry");
      ++seen;
    }
    if (seen != g.entries.size()) throw ParseError("grid entries are incomplete");
    return g;
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad grid object: ") + e.what());
  }
}

std::string grid_to_csv(const CoeffGrid& g) {
  std::ostringstream os;
  os << "m";
  for (long n = 1; n <= g.max_n; ++n) os << "," << n;
  os << "\n";
  for (long m = 1; m <= g.max_m; ++m) {
    os << m;
    for (long n = 1; n <= g.max_n; ++n) os << "," << g.at(m, n).str();
    os << "\n";
  }
  return os.str();
}

std::string report_to_json(const ViolationReport& r) {
  json j;
  j["identity"] = r.identity;
  j["range"] = r.range;
  json v = json::array();
  for (const Violation& w : r.witnesses) {
    json e;
    e["where"] = w.where;
    e["lhs"] = w.lhs.str();
    e["rhs"] = w.rhs.str();
    v.push_back(std::move(e));
  }
  j["violations"] = std::move(v);
  j["status"] = r.pass() ? "pass" : "fail";
  return j.dump(2) + "\n";
}

std::vector<EtaQuotientSpec> eta_config_from_json(const std::string& text) {
  json j = parse_json(text);
  if (!j.is_object()) throw ParseError("eta config must be an object keyed by level");
  std::vector<EtaQuotientSpec> out;
  for (const auto& [level_key, table] : j.items()) {
    EtaQuotientSpec spec;
    try {
      spec.level = std::stol(level_key);
    } catch (const std::exception&) {
      throw ParseError("bad level key '" + level_key + "'");
    }
    if (!table.is_object()) throw ParseError("exponent table must be an object");
    for (const auto& [div_key, exp] : table.items()) {
      long d = 0;
      try {
        d = std::stol(div_key);
      } catch (const std::exception&) {
        throw ParseError("bad divisor key '" + div_key + "'");
      }
      if (!exp.is_number_integer()) throw ParseError("exponent must be an integer");
      long r = exp.get<long>();
      if (r != 0) spec.exponents.push_back({d, r});
    }
    std::sort(spec.exponents.begin(), spec.exponents.end());
    out.push_back(std::move(spec));
  }
  std::sort(out.begin(), out.end(),
            [](const EtaQuotientSpec& a, const EtaQuotientSpec& b) { return a.level < b.level; });
  return out;
}

GroupKind group_from_name(const std::string& name) {
  if (name == "gamma1") return GroupKind::gamma1;
  if (name == "gamma0") return GroupKind::gamma0;
  throw ParseError("unknown group '" + name + "'");
}

std::string grid_cache_filename(GroupKind g, long level) {
  return std::string("grid_") + group_name(g) + "_" + std::to_string(level) + ".json";
}

bool load_cached_grid(const std::string& dir, GroupKind g, long level, CoeffGrid& out) {
  std::filesystem::path path = std::filesystem::path(dir) / grid_cache_filename(g, level);
  if (!std::filesystem::exists(path)) return false;
  CoeffGrid loaded = grid_from_json(read_text_file(path.string()));
  if (loaded.group != g || loaded.level != level)
    throw ParseError("cache file " + path.string() + " holds a different grid");
  out = std::move(loaded);
  return true;
}

void store_cached_grid(const std::string& dir, const CoeffGrid& g) {
  std::filesystem::create_directories(dir);
  std::filesystem::path path = std::filesystem::path(dir) / grid_cache_filename(g.group, g.level);
  write_text_file(path.string(), grid_to_json(g));
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open " + path + " for writing");
  out << content;
  if (!out) throw Error("failed writing " + path);
}

}  // namespace qm
