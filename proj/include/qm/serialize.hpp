#pragma once

#include <string>
#include <vector>

#include "qm/atoms.hpp"
#include "qm/faber.hpp"
#include "qm/replication.hpp"
#include "qm/series.hpp"

namespace qm {

// { "denominator": D, "valuation": v, "precision": P,
//   "coefficients": [ "num/den", ... ] }; exact round-trip
std::string series_to_json(const LaurentSeries& f);
LaurentSeries series_from_json(const std::string& text);

// { "group": ..., "level": ..., "precision": ..., "max_m": ..., "max_n": ...,
//   "entries": { "m,n": "value", ... } }; exact round-trip
std::string grid_to_json(const CoeffGrid& g);
CoeffGrid grid_from_json(const std::string& text);

// header row of column indices, then one row per m
std::string grid_to_csv(const CoeffGrid& g);

// { "identity": ..., "range": ..., "violations": [ { "where": [...],
//   "lhs": ..., "rhs": ... } ], "status": "pass" | "fail" }
std::string report_to_json(const ViolationReport& r);

// JSON object mapping level to { divisor: exponent }, e.g.
// { "8": { "1": 4, "2": -2, "4": 2, "8": -4 } }; pins the eta search
std::vector<EtaQuotientSpec> eta_config_from_json(const std::string& text);

GroupKind group_from_name(const std::string& name);

// grid cache, one file per (group, level) under a directory
std::string grid_cache_filename(GroupKind g, long level);
bool load_cached_grid(const std::string& dir, GroupKind g, long level, CoeffGrid& out);
void store_cached_grid(const std::string& dir, const CoeffGrid& g);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace qm
