#pragma once

// Serialization of census records, sweeps and pattern censuses as human
// tables, versioned CSV, and JSON; plus the JSON-lines sweep cache.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <tuple>

#include <json.hpp>

#include "macbeath/census.hpp"
#include "macbeath/density.hpp"

namespace macbeath::report {

enum class Format { Table, Csv, Json };
Format parse_format(const std::string& text);

inline constexpr int kCsvSchemaVersion = 1;
inline constexpr const char* kCsvColumns = "p,residue_class,d,q,genus,k,l,parity_ok,class_details";

ErrorCode parse_error_code(const std::string& text);

/// Values recorded in report headers.
struct RunInfo {
  std::string command;
  int workers = 1;
  std::uint64_t seed = 0;
};

nlohmann::json census_to_json(const census::CensusRecord& rec);
census::CensusRecord census_from_json(const nlohmann::json& j);
/// Field-by-field equality (field elements compared by residue).
bool same_record(const census::CensusRecord& a, const census::CensusRecord& b);

/// "+1", "-1", or the residue of p mod N_n.
std::string residue_label(std::uint64_t p, std::uint64_t N);
std::string class_details(const census::CensusRecord& rec);
std::string csv_row(const census::CensusRecord& rec);

nlohmann::json sweep_to_json(const density::SweepResult& res);
nlohmann::json patterns_to_json(const density::PatternCensus& pc);
nlohmann::json model_to_json(const density::GaloisModel& model,
                             const std::optional<std::vector<Rational>>& predicted);

void write_census(std::ostream& out, const census::CensusRecord& rec, Format fmt, const RunInfo& info);
void write_sweep(std::ostream& out, const density::SweepResult& res, Format fmt, const RunInfo& info);
void write_patterns(std::ostream& out, const density::PatternCensus& pc, Format fmt, const RunInfo& info);

std::string rational_string(const Rational& r);
std::string pattern_string(const density::Pattern& pat);

// ---------------------------------------------------------------------------

struct CachedSkip {
  ErrorCode code = ErrorCode::BadReduction;
  std::string reason;
};

struct CacheEntry {
  std::optional<census::CensusRecord> record;
  std::optional<CachedSkip> skipped;
};

using CacheKey = std::tuple<unsigned, unsigned, std::uint64_t>;  // (m, n, p)

/// Reads a JSON-lines cache; a missing file is an empty cache.
std::map<CacheKey, CacheEntry> load_cache(const std::string& path);
void append_cache(std::ostream& out, const census::CensusRecord& rec);
void append_cache_skip(std::ostream& out, unsigned m, unsigned n, std::uint64_t p, ErrorCode code,
                       const std::string& reason);

}  // namespace macbeath::report
