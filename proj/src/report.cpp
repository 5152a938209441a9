#include "macbeath/report.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "macbeath/error.hpp"
#include "macbeath/gf.hpp"

namespace macbeath::report {

using census::CensusRecord;
using census::TraceClass;
using gf::FieldCtx;
using gf::FieldElem;
using gf::FpPoly;
using nlohmann::json;

Format parse_format(const std::string& text) {
  if (text == "table") return Format::Table;
  if (text == "csv") return Format::Csv;
  if (text == "json") return Format::Json;
  throw Error(ErrorCode::InvalidArgument, "unknown format '" + text + "' (expected table, csv or json)");
}

ErrorCode parse_error_code(const std::string& text) {
  for (auto c : {ErrorCode::InvalidArgument, ErrorCode::BadReduction, ErrorCode::Inadmissible, ErrorCode::Internal}) {
    if (to_string(c) == text) return c;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown error code '" + text + "'");
}

std::string rational_string(const Rational& r) {
  std::ostringstream os;
  os << numerator(r);
  if (denominator(r) != 1) os << "/" << denominator(r);
  return os.str();
}

std::string pattern_string(const density::Pattern& pat) {
  std::string s;
  for (std::size_t i = 0; i < pat.size(); ++i) s += (i ? " " : "") + std::to_string(pat[i]);
  return s;
}

namespace {

json coeffs(const FpPoly& f) { return f.coeffs(); }

FpPoly poly_from(std::uint64_t p, const json& j) { return FpPoly(p, j.get<std::vector<std::uint64_t>>()); }

std::string big(const BigInt& v) { return v.str(); }

std::string fixed(double v) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(6) << v;
  return os.str();
}

std::string s_label(const TraceClass& c) {
  if (c.e == 1) return c.s.to_string();
  return "root(" + c.factor.to_string() + ")";
}

json parity_json(const census::ParityVerdict& v) {
  return {{"applicable", v.applicable},
          {"predicted", std::string(to_string(v.predicted))},
          {"observed", std::string(to_string(v.observed))},
          {"consistent", v.consistent},
          {"shortcut_checked", v.shortcut_checked},
          {"shortcut_agrees", v.shortcut_agrees}};
}

census::Parity parse_parity(const std::string& s) {
  return s == "even" ? census::Parity::Even : census::Parity::Odd;
}

void header_line(std::ostream& out, const RunInfo& info, const std::string& extra) {
  out << "# macbeath-csv v" << kCsvSchemaVersion << " command=" << info.command << " " << extra
      << " workers=" << info.workers << " seed=" << info.seed << "\n";
}

}  // namespace

json census_to_json(const CensusRecord& rec) {
  json classes = json::array();
  for (const auto& c : rec.classes) {
    classes.push_back({{"factor", coeffs(c.factor)},
                       {"e", c.e},
                       {"s", coeffs(c.s.residue())},
                       {"s_display", s_label(c)},
                       {"chi", c.chi},
                       {"regularity", std::string(to_string(c.regularity))},
                       {"t", c.t ? coeffs(c.t->residue()) : json(nullptr)}});
  }
  return {{"m", rec.m},
          {"n", rec.n},
          {"p", rec.p},
          {"N_n", rec.field.N_n},
          {"N_m", rec.field.N_m},
          {"d", rec.field.d},
          {"q", big(rec.field.q)},
          {"genus", big(rec.genus)},
          {"classes", classes},
          {"k", rec.k},
          {"l", rec.l},
          {"class_count_flag", rec.class_count_flag},
          {"parity", parity_json(rec.parity)}};
}

CensusRecord census_from_json(const json& j) {
  try {
    CensusRecord rec;
    rec.m = j.at("m").get<unsigned>();
    rec.n = j.at("n").get<unsigned>();
    rec.p = j.at("p").get<std::uint64_t>();
    rec.field.m = rec.m;
    rec.field.n = rec.n;
    rec.field.p = rec.p;
    rec.field.N_n = j.at("N_n").get<std::uint64_t>();
    rec.field.N_m = j.at("N_m").get<std::uint64_t>();
    rec.field.d = j.at("d").get<unsigned>();
    rec.field.q = BigInt(j.at("q").get<std::string>());
    rec.genus = BigInt(j.at("genus").get<std::string>());
    for (const auto& c : j.at("classes")) {
      TraceClass tc;
      tc.factor = poly_from(rec.p, c.at("factor"));
      tc.e = c.at("e").get<unsigned>();
      const auto ctx = FieldCtx::make(tc.factor, rec.field.d);
      tc.s = FieldElem(ctx, poly_from(rec.p, c.at("s")));
      tc.chi = c.at("chi").get<int>();
      tc.regularity = c.at("regularity").get<std::string>() == "inner" ? census::Regularity::Inner
                                                                       : census::Regularity::Outer;
      if (!c.at("t").is_null()) tc.t = FieldElem(ctx, poly_from(rec.p, c.at("t")));
      rec.classes.push_back(std::move(tc));
    }
    rec.k = j.at("k").get<unsigned>();
    rec.l = j.at("l").get<unsigned>();
    rec.class_count_flag = j.at("class_count_flag").get<bool>();
    const auto& pv = j.at("parity");
    rec.parity.applicable = pv.at("applicable").get<bool>();
    rec.parity.predicted = parse_parity(pv.at("predicted").get<std::string>());
    rec.parity.observed = parse_parity(pv.at("observed").get<std::string>());
    rec.parity.consistent = pv.at("consistent").get<bool>();
    rec.parity.shortcut_checked = pv.at("shortcut_checked").get<bool>();
    rec.parity.shortcut_agrees = pv.at("shortcut_agrees").get<bool>();
    return rec;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidArgument, std::string("malformed census record: ") + e.what());
  }
}

bool same_record(const CensusRecord& a, const CensusRecord& b) {
  auto same_field = [](const census::FieldData& x, const census::FieldData& y) {
    return x.m == y.m && x.n == y.n && x.p == y.p && x.N_n == y.N_n && x.N_m == y.N_m && x.d == y.d && x.q == y.q;
  };
  auto same_parity = [](const census::ParityVerdict& x, const census::ParityVerdict& y) {
    return x.applicable == y.applicable && x.predicted == y.predicted && x.observed == y.observed &&
           x.consistent == y.consistent && x.shortcut_checked == y.shortcut_checked &&
           x.shortcut_agrees == y.shortcut_agrees;
  };
  if (a.m != b.m || a.n != b.n || a.p != b.p || !same_field(a.field, b.field) || a.genus != b.genus ||
      a.k != b.k || a.l != b.l || a.class_count_flag != b.class_count_flag || !same_parity(a.parity, b.parity) ||
      a.classes.size() != b.classes.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.classes.size(); ++i) {
    const auto& x = a.classes[i];
    const auto& y = b.classes[i];
    if (!(x.factor == y.factor) || x.e != y.e || !(x.s.residue() == y.s.residue()) || x.chi != y.chi ||
        x.regularity != y.regularity || x.t.has_value() != y.t.has_value()) {
      return false;
    }
    if (x.t && !(x.t->residue() == y.t->residue())) return false;
  }
  return true;
}

std::string residue_label(std::uint64_t p, std::uint64_t N) {
  if (N > 2 && p % N == 1) return "+1";
  if (N > 2 && p % N == N - 1) return "-1";
  return std::to_string(p % N);
}

std::string class_details(const CensusRecord& rec) {
  std::string out;
  for (std::size_t i = 0; i < rec.classes.size(); ++i) {
    const auto& c = rec.classes[i];
    if (i) out += "|";
    out += "s=" + s_label(c) + ":" + (c.chi == 1 ? "+" : "-") + ":" + std::string(to_string(c.regularity));
  }
  return out;
}

std::string csv_row(const CensusRecord& rec) {
  const std::string parity = rec.parity.applicable ? (rec.parity.consistent ? "yes" : "no") : "n/a";
  std::ostringstream os;
  os << rec.p << "," << residue_label(rec.p, rec.field.N_n) << "," << rec.field.d << "," << rec.field.q << ","
     << rec.genus << "," << rec.k << "," << rec.l << "," << parity << "," << class_details(rec);
  return os.str();
}

json model_to_json(const density::GaloisModel& model, const std::optional<std::vector<Rational>>& predicted) {
  json pred = nullptr;
  if (predicted) {
    pred = json::array();
    for (const auto& r : *predicted) pred.push_back(rational_string(r));
  }
  return {{"m", model.m},
          {"n", model.n},
          {"r", model.r},
          {"structure", std::string(to_string(model.structure))},
          {"overridden", model.overridden},
          {"negative_roots", model.negative_roots ? json(*model.negative_roots) : json(nullptr)},
          {"predicted", pred}};
}

json sweep_to_json(const density::SweepResult& res) {
  const auto& t = res.tally;
  json records = json::array();
  for (const auto& r : res.records) records.push_back(census_to_json(r));
  json skipped = json::array();
  for (const auto& s : res.skipped) {
    skipped.push_back({{"p", s.p}, {"code", std::string(to_string(s.code))}, {"reason", s.reason}});
  }
  return {{"m", t.m},
          {"n", t.n},
          {"N_n", t.N_n},
          {"swept", t.swept},
          {"counts", t.counts},
          {"counts_plus", t.counts_plus},
          {"counts_minus", t.counts_minus},
          {"members_plus", t.members_plus},
          {"members_minus", t.members_minus},
          {"frequencies", t.frequencies},
          {"model", model_to_json(t.model, t.predicted)},
          {"max_abs_deviation", t.max_abs_deviation ? json(*t.max_abs_deviation) : json(nullptr)},
          {"records", records},
          {"skipped", skipped}};
}

json patterns_to_json(const density::PatternCensus& pc) {
  json rows = json::array();
  for (const auto& row : pc.patterns) {
    rows.push_back({{"pattern", row.pattern},
                    {"count", row.count},
                    {"frequency", row.frequency},
                    {"predicted", row.predicted ? json(rational_string(*row.predicted)) : json(nullptr)}});
  }
  json bad = json::array();
  for (const auto& s : pc.bad_primes) {
    bad.push_back({{"p", s.p}, {"code", std::string(to_string(s.code))}, {"reason", s.reason}});
  }
  return {{"m", pc.m},
          {"n", pc.n},
          {"bound", pc.bound},
          {"sampled", pc.sampled},
          {"patterns", rows},
          {"bad_primes", bad},
          {"bridge_violations", pc.bridge_violations},
          {"max_abs_deviation", pc.max_abs_deviation ? json(*pc.max_abs_deviation) : json(nullptr)}};
}

void write_census(std::ostream& out, const CensusRecord& rec, Format fmt, const RunInfo& info) {
  if (fmt == Format::Json) {
    out << census_to_json(rec).dump(2) << "\n";
    return;
  }
  if (fmt == Format::Csv) {
    header_line(out, info, "m=" + std::to_string(rec.m) + " n=" + std::to_string(rec.n));
    out << kCsvColumns << "\n" << csv_row(rec) << "\n";
    return;
  }
  out << "type {" << rec.m << "," << rec.n << "}  p = " << rec.p << "  d = " << rec.field.d << "  q = " << rec.field.q
      << "  genus = " << rec.genus << "\n";
  out << std::left << std::setw(6) << "class" << std::setw(28) << "factor" << std::setw(22) << "s" << std::setw(5)
      << "chi" << "regularity\n";
  for (std::size_t i = 0; i < rec.classes.size(); ++i) {
    const auto& c = rec.classes[i];
    out << std::setw(6) << i + 1 << std::setw(28) << c.factor.to_string('s') << std::setw(22) << s_label(c)
        << std::setw(5) << (c.chi == 1 ? "+1" : "-1") << to_string(c.regularity) << "\n";
  }
  out << "k = " << rec.k << "  l = " << rec.l;
  if (rec.parity.applicable) {
    out << "  parity of l: predicted " << to_string(rec.parity.predicted) << ", observed "
        << to_string(rec.parity.observed) << (rec.parity.consistent ? " (consistent)" : " (VIOLATION)");
  } else {
    out << "  parity: not applicable";
  }
  out << "\n";
  if (rec.class_count_flag) out << "note: class count differs from phi(n)/(2d)\n";
}

void write_sweep(std::ostream& out, const density::SweepResult& res, Format fmt, const RunInfo& info) {
  const auto& t = res.tally;
  if (fmt == Format::Json) {
    json j = sweep_to_json(res);
    j["run"] = {{"command", info.command}, {"workers", info.workers}, {"seed", info.seed}};
    out << j.dump(2) << "\n";
    return;
  }
  if (fmt == Format::Csv) {
    header_line(out, info, "m=" + std::to_string(t.m) + " n=" + std::to_string(t.n));
    out << kCsvColumns << "\n";
    for (const auto& r : res.records) out << csv_row(r) << "\n";
    out << "# summary k,count,count_plus,count_minus,frequency,predicted\n";
    for (std::size_t k = 0; k < t.counts.size(); ++k) {
      out << "# summary " << k << "," << t.counts[k] << "," << t.counts_plus[k] << "," << t.counts_minus[k] << ","
          << fixed(t.frequencies[k]) << "," << (t.predicted ? rational_string((*t.predicted)[k]) : "") << "\n";
    }
    for (const auto& s : res.skipped) out << "# skipped " << s.p << "," << to_string(s.code) << "\n";
    return;
  }
  out << "sweep of type {" << t.m << "," << t.n << "}: " << t.swept << " primes, Galois model "
      << to_string(t.model.structure) << "\n";
  out << std::left << std::setw(4) << "k" << std::setw(8) << "count" << std::setw(8) << "+1" << std::setw(8) << "-1"
      << std::setw(12) << "frequency" << "predicted\n";
  for (std::size_t k = 0; k < t.counts.size(); ++k) {
    out << std::setw(4) << k << std::setw(8) << t.counts[k] << std::setw(8) << t.counts_plus[k] << std::setw(8)
        << t.counts_minus[k] << std::setw(12) << fixed(t.frequencies[k])
        << (t.predicted ? rational_string((*t.predicted)[k]) : "-") << "\n";
  }
  if (t.max_abs_deviation) out << "max |empirical - predicted| = " << fixed(*t.max_abs_deviation) << "\n";
  for (const auto& s : res.skipped) out << "skipped p = " << s.p << " (" << to_string(s.code) << ")\n";
}

void write_patterns(std::ostream& out, const density::PatternCensus& pc, Format fmt, const RunInfo& info) {
  if (fmt == Format::Json) {
    json j = patterns_to_json(pc);
    j["run"] = {{"command", info.command}, {"workers", info.workers}, {"seed", info.seed}};
    out << j.dump(2) << "\n";
    return;
  }
  if (fmt == Format::Csv) {
    header_line(out, info,
                "m=" + std::to_string(pc.m) + " n=" + std::to_string(pc.n) + " bound=" + std::to_string(pc.bound));
    out << "pattern,count,frequency,predicted\n";
    for (const auto& row : pc.patterns) {
      out << pattern_string(row.pattern) << "," << row.count << "," << fixed(row.frequency) << ","
          << (row.predicted ? rational_string(*row.predicted) : "") << "\n";
    }
    for (const auto& s : pc.bad_primes) out << "# bad " << s.p << "," << to_string(s.code) << "\n";
    return;
  }
  out << "degree patterns of f2 for {" << pc.m << "," << pc.n << "}, primes <= " << pc.bound << ": " << pc.sampled
      << " sampled\n";
  out << std::left << std::setw(20) << "pattern" << std::setw(10) << "count" << std::setw(12) << "frequency"
      << "predicted\n";
  for (const auto& row : pc.patterns) {
    out << std::setw(20) << pattern_string(row.pattern) << std::setw(10) << row.count << std::setw(12)
        << fixed(row.frequency) << (row.predicted ? rational_string(*row.predicted) : "-") << "\n";
  }
  if (pc.max_abs_deviation) out << "max |empirical - predicted| = " << fixed(*pc.max_abs_deviation) << "\n";
  out << "bad primes:";
  for (const auto& s : pc.bad_primes) out << " " << s.p;
  out << "\nlinear-factor bridge violations: " << pc.bridge_violations.size() << "\n";
}

std::map<CacheKey, CacheEntry> load_cache(const std::string& path) {
  std::map<CacheKey, CacheEntry> out;
  std::ifstream in(path);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::exception& e) {
      throw Error(ErrorCode::InvalidArgument, "corrupt cache line in " + path + ": " + e.what());
    }
    const CacheKey key{j.at("m").get<unsigned>(), j.at("n").get<unsigned>(), j.at("p").get<std::uint64_t>()};
    CacheEntry entry;
    if (j.contains("skipped")) {
      entry.skipped = CachedSkip{parse_error_code(j.at("skipped").get<std::string>()), j.value("reason", "")};
    } else {
      entry.record = census_from_json(j);
    }
    out[key] = std::move(entry);
  }
  return out;
}

void append_cache(std::ostream& out, const CensusRecord& rec) { out << census_to_json(rec).dump() << "\n"; }

void append_cache_skip(std::ostream& out, unsigned m, unsigned n, std::uint64_t p, ErrorCode code,
                       const std::string& reason) {
  const json j = {{"m", m}, {"n", n}, {"p", p}, {"skipped", std::string(to_string(code))}, {"reason", reason}};
  out << j.dump() << "\n";
}

}  // namespace macbeath::report
