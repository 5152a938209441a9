#include "macbeath/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "macbeath/appendix_data.hpp"
#include "macbeath/census.hpp"
#include "macbeath/density.hpp"
#include "macbeath/error.hpp"
#include "macbeath/gf.hpp"
#include "macbeath/intpoly.hpp"
#include "macbeath/numkit.hpp"
#include "macbeath/report.hpp"

namespace macbeath::verify {

bool SuiteResult::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

template <typename T>
std::string join(const std::vector<T>& v, const char* sep = ",") {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
  return os.str();
}

void add(SuiteResult& res, std::string name, bool ok, std::string expected, std::string actual) {
  res.checks.push_back({std::move(name), ok, std::move(expected), std::move(actual)});
}

std::string triple(unsigned m, unsigned n, std::uint64_t p) {
  return "(" + std::to_string(m) + "," + std::to_string(n) + "," + std::to_string(p) + ")";
}

std::uint64_t mod_p(long long v, std::uint64_t p) {
  long long r = v % static_cast<long long>(p);
  return static_cast<std::uint64_t>(r < 0 ? r + static_cast<long long>(p) : r);
}

std::vector<std::uint64_t> residues(const std::vector<long long>& values, std::uint64_t p) {
  std::vector<std::uint64_t> out;
  for (auto v : values) out.push_back(mod_p(v, p));
  std::sort(out.begin(), out.end());
  return out;
}

// s-values of the degree-1 classes (all classes must have degree 1).
std::optional<std::vector<std::uint64_t>> linear_s_values(const census::CensusRecord& rec, bool outer_only) {
  std::vector<std::uint64_t> out;
  for (const auto& c : rec.classes) {
    if (c.e != 1) return std::nullopt;
    if (outer_only && c.regularity != census::Regularity::Outer) continue;
    out.push_back(c.s.prime_value());
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct Example {
  unsigned m;
  unsigned n;
  std::uint64_t p;
  long long q = -1;
  int classes = -1;
  int k = -1;
  long long genus = -1;
  std::vector<long long> s = {};
  std::vector<long long> outer_s = {};
};

const std::vector<Example>& worked_examples() {
  static const std::vector<Example> table = {
      {.m = 3, .n = 7, .p = 13, .k = 1, .s = {6, 4, 7}},
      {.m = 3, .n = 7, .p = 43, .k = 2, .s = {36, 25, 29}, .outer_s = {29}},
      {.m = 3, .n = 7, .p = 2, .q = 8, .classes = 1, .k = 1, .genus = 7},
      {.m = 3, .n = 9, .p = 17, .classes = 3, .k = 1, .s = {11, 4, 5}},
      {.m = 3, .n = 9, .p = 19, .k = 2, .outer_s = {13}},
      {.m = 3, .n = 9, .p = 37, .k = 1},
      {.m = 3, .n = 11, .p = 2, .q = 32, .classes = 1, .k = 1, .genus = 1241},
      {.m = 3, .n = 13, .p = 5, .q = 25, .classes = 3, .k = 1, .genus = 351},
      {.m = 3, .n = 13, .p = 3, .q = 27, .classes = 2, .k = 0},
      {.m = 3, .n = 15, .p = 2, .q = 16, .classes = 1, .k = 1, .genus = 205},
      {.m = 3, .n = 15, .p = 31, .classes = 4, .k = 2},
      {.m = 3, .n = 17, .p = 2, .q = 16, .classes = 2, .k = 2, .genus = 221},
      {.m = 3, .n = 19, .p = 37, .classes = 9, .k = 5, .genus = 1444},
      {.m = 3, .n = 8, .p = 17, .k = 0},
      {.m = 3, .n = 8, .p = 31, .k = 1, .s = {9, -7}},
      {.m = 3, .n = 10, .p = 19, .k = 1, .genus = 115},
      {.m = 3, .n = 10, .p = 41, .k = 0},
      {.m = 3, .n = 12, .p = 23, .k = 1},
      {.m = 3, .n = 12, .p = 5, .q = 25, .classes = 1, .k = 0, .genus = 326},
      {.m = 3, .n = 14, .p = 29, .classes = 3, .k = 1, .genus = 581},
      {.m = 3, .n = 14, .p = 3, .q = 27, .classes = 1, .k = 0},
      {.m = 4, .n = 5, .p = 31, .k = 1, .genus = 373, .s = {13, -12}},
      {.m = 4, .n = 5, .p = 41, .k = 0, .s = {7, -6}},
      {.m = 4, .n = 5, .p = 89, .k = 2},
      {.m = 4, .n = 5, .p = 7, .q = 49, .classes = 1, .k = 0},
      {.m = 4, .n = 5, .p = 17, .q = 289, .classes = 1, .k = 1},
  };
  return table;
}

void check_example(SuiteResult& res, const Example& ex) {
  std::ostringstream want, got;
  bool ok = true;
  try {
    const auto rec = census::map_census(ex.m, ex.n, ex.p);
    if (ex.q >= 0) {
      want << "q=" << ex.q << " ";
      got << "q=" << rec.field.q << " ";
      ok &= rec.field.q == ex.q;
    }
    if (ex.classes >= 0) {
      want << "classes=" << ex.classes << " ";
      got << "classes=" << rec.classes.size() << " ";
      ok &= static_cast<int>(rec.classes.size()) == ex.classes;
    }
    if (ex.k >= 0) {
      want << "k=" << ex.k << " ";
      got << "k=" << rec.k << " ";
      ok &= static_cast<int>(rec.k) == ex.k;
    }
    if (ex.genus >= 0) {
      want << "genus=" << ex.genus << " ";
      got << "genus=" << rec.genus << " ";
      ok &= rec.genus == ex.genus;
    }
    if (!ex.s.empty()) {
      const auto expected = residues(ex.s, ex.p);
      const auto actual = linear_s_values(rec, false);
      want << "s={" << join(expected) << "} ";
      got << "s={" << (actual ? join(*actual) : "non-linear") << "} ";
      ok &= actual && *actual == expected;
    }
    if (!ex.outer_s.empty()) {
      const auto expected = residues(ex.outer_s, ex.p);
      const auto actual = linear_s_values(rec, true);
      want << "outer s={" << join(expected) << "}";
      got << "outer s={" << (actual ? join(*actual) : "non-linear") << "}";
      ok &= actual && *actual == expected;
    }
  } catch (const Error& e) {
    ok = false;
    got << to_string(e.code()) << ": " << e.what();
  }
  add(res, "census " + triple(ex.m, ex.n, ex.p), ok, want.str(), got.str());
}

std::string diff_lists(const std::vector<std::uint64_t>& expected, const std::vector<std::uint64_t>& actual) {
  std::vector<std::uint64_t> missing, extra;
  std::set_difference(expected.begin(), expected.end(), actual.begin(), actual.end(), std::back_inserter(missing));
  std::set_difference(actual.begin(), actual.end(), expected.begin(), expected.end(), std::back_inserter(extra));
  if (missing.empty() && extra.empty()) return "identical (" + std::to_string(actual.size()) + " primes)";
  return std::to_string(actual.size()) + " primes; listed but not computed: {" + join(missing) +
         "}; computed but not listed: {" + join(extra) + "}";
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"table1", "examples", "appendix", "parity", "oracle", "patterns"};
  return names;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& options) {
  if (name == "table1") return table1();
  if (name == "examples") return examples();
  if (name == "appendix") return appendix();
  if (name == "parity") return parity(options);
  if (name == "oracle") return oracle(options);
  if (name == "patterns") return patterns(options);
  throw Error(ErrorCode::InvalidArgument, "unknown suite '" + name + "'");
}

SuiteResult table1() {
  const auto start = Clock::now();
  SuiteResult res{"table1", {}, 0.0};
  const std::vector<long long> expected{-1, -1, -1, -1, -1, -2, 1, -1, 1, -1, 1, -3, -1};
  for (unsigned n = 7; n <= 19; ++n) {
    const long long want = expected[n - 7];
    try {
      const auto v = intpoly::psi_at_one(n);
      const bool ok = v.direct == want && v.mobius == Rational(want);
      add(res, "Psi_" + std::to_string(n) + "(1)", ok, std::to_string(want),
          v.direct.str() + " (Mobius product " + report::rational_string(v.mobius) + ")");
    } catch (const Error& e) {
      add(res, "Psi_" + std::to_string(n) + "(1)", false, std::to_string(want), e.what());
    }
  }
  res.seconds = seconds_since(start);
  return res;
}

SuiteResult examples() {
  const auto start = Clock::now();
  SuiteResult res{"examples", {}, 0.0};

  const std::vector<std::pair<unsigned, std::string>> psis{
      {7, "x^3 + x^2 - 2x - 1"}, {8, "x^2 - 2"}, {9, "x^3 - 3x + 1"}, {11, "x^5 + x^4 - 4x^3 - 3x^2 + 3x + 1"}};
  for (const auto& [n, text] : psis) {
    const auto got = intpoly::psi(n).to_string();
    add(res, "Psi_" + std::to_string(n), got == text, text, got);
  }
  {
    const auto f1 = intpoly::s_polynomial(3, 7);
    const auto disc = intpoly::discriminant(f1);
    add(res, "f1 for {3,7}", f1.to_string('s') == "s^3 - 4s^2 + 3s + 1", "s^3 - 4s^2 + 3s + 1", f1.to_string('s'));
    add(res, "disc f1 for {3,7}", disc == 49, "49", disc.str());
    const auto f2 = gf::reduce_and_factor(intpoly::doubled(f1), 13);
    std::vector<std::string> parts;
    for (const auto& fac : f2.factors) parts.push_back(fac.poly.to_string());
    const std::string want = "x - 2 | x + 2 | x^2 - 6 | x^2 + 6";
    add(res, "f2 mod 13 for {3,7}", join(parts, " | ") == want, want + " (x^2 + 6 = x^2 - 7)", join(parts, " | "));
  }
  {
    const auto ctx = gf::FieldCtx::prime_field(41);
    const auto r = gf::sqrt_in_field(gf::FieldElem::from_int(ctx, 5));
    const bool ok = r.root && (r.root->prime_value() == 13 || r.root->prime_value() == 28);
    add(res, "sqrt 5 in F_41", ok, "+-13", r.root ? r.root->to_string() : "none");
  }
  const std::vector<std::tuple<unsigned, unsigned, std::uint64_t, unsigned>> degrees{
      {3, 7, 13, 1}, {3, 7, 2, 3}, {4, 5, 7, 2}, {3, 14, 3, 3}};
  for (const auto& [m, n, p, d] : degrees) {
    const auto fd = census::field_data(m, n, p);
    add(res, "field degree " + triple(m, n, p), fd.d == d, std::to_string(d), std::to_string(fd.d));
  }

  for (const auto& ex : worked_examples()) check_example(res, ex);

  try {
    census::map_census(3, 7, 7);
    add(res, "census (3,7,7)", false, "bad_reduction", "classified");
  } catch (const Error& e) {
    add(res, "census (3,7,7)", e.code() == ErrorCode::BadReduction, "bad_reduction", std::string(to_string(e.code())));
  }

  const std::vector<std::tuple<unsigned, std::uint64_t, census::Parity>> parities{
      {7, 13, census::Parity::Even}, {12, 23, census::Parity::Odd}, {9, 19, census::Parity::Odd}};
  for (const auto& [n, p, want] : parities) {
    const auto rec = census::map_census(3, n, p);
    const bool ok = rec.parity.applicable && rec.parity.predicted == want && rec.parity.consistent;
    add(res, "parity " + triple(3, n, p), ok, std::string(census::to_string(want)),
        std::string(census::to_string(rec.parity.predicted)) + ", l=" + std::to_string(rec.l));
  }
  res.seconds = seconds_since(start);
  return res;
}

SuiteResult appendix() {
  const auto start = Clock::now();
  SuiteResult res{"appendix", {}, 0.0};
  const auto sweep = density::sweep_serial(density::default_sweep(3, 7, 400));
  const auto& t = sweep.tally;

  add(res, "400 primes swept, largest 9871", t.swept == 400 && sweep.records.back().p == 9871, "400, 9871",
      std::to_string(t.swept) + ", " + std::to_string(sweep.records.empty() ? 0 : sweep.records.back().p));
  add(res, "aggregate counts", std::equal(t.counts.begin(), t.counts.end(), std::begin(appendix::kAggregate)),
      "48,154,151,47", join(t.counts));

  std::vector<std::uint64_t> printed_split, computed_split;
  std::vector<std::vector<std::uint64_t>> corrected;
  for (const auto& list : appendix::printed_lists()) {
    const auto& members = list.sign > 0 ? t.members_plus[list.k] : t.members_minus[list.k];
    std::vector<std::uint64_t> printed = list.primes;
    std::sort(printed.begin(), printed.end());
    const std::string label = "Sigma_" + std::to_string(list.k) + (list.sign > 0 ? "^+" : "^-");
    add(res, label + " as printed", printed == members, std::to_string(list.printed_count) + " listed primes",
        diff_lists(printed, members));
    printed_split.push_back(list.printed_count);
    computed_split.push_back(members.size());

    std::vector<std::uint64_t> fixed = list.primes;
    for (const auto& e : appendix::errata()) {
      if (e.k != list.k || e.sign != list.sign) continue;
      if (e.printed != 0) fixed.erase(std::remove(fixed.begin(), fixed.end(), e.printed), fixed.end());
      if (e.corrected != 0) fixed.push_back(e.corrected);
    }
    std::sort(fixed.begin(), fixed.end());
    add(res, label + " with errata", fixed == members, std::to_string(fixed.size()) + " primes",
        diff_lists(fixed, members));
  }
  add(res, "split counts as printed", printed_split == computed_split, join(printed_split), join(computed_split));
  res.seconds = seconds_since(start);
  return res;
}

SuiteResult parity(const SuiteOptions& options) {
  const auto start = Clock::now();
  SuiteResult res{"parity", {}, 0.0};
  const auto primes = numkit::primes_up_to(options.parity_bound);
  std::uint64_t applicable = 0, violations = 0, kp_checked = 0, kp_failures = 0, corollary_checked = 0,
                corollary_failures = 0;
  std::vector<std::string> examples_of_failure;
  for (unsigned n = 7; n <= 19; ++n) {
    for (auto p : primes) {
      std::optional<census::CensusRecord> rec;
      try {
        rec = census::map_census(3, n, p);
      } catch (const Error& e) {
        if (e.code() == ErrorCode::Internal) {
          ++violations;
          if (examples_of_failure.size() < 5) examples_of_failure.push_back(triple(3, n, p));
        }
        continue;
      }
      if (rec->parity.applicable) {
        ++applicable;
        if (!rec->parity.consistent) ++violations;
      }
      if (n == 7 && p != 2) {
        const bool kp_odd = rec->k % 2 == 1;
        const bool one_mod_four = p % 4 == 1;
        if (rec->field.d == 1) {
          ++kp_checked;
          if (kp_odd != one_mod_four) ++kp_failures;
        } else {
          ++corollary_checked;
          if (kp_odd != one_mod_four) ++corollary_failures;
        }
      }
    }
  }
  add(res, "parity of l matches chi(Psi_n(1)), n = 7..19, p <= " + std::to_string(options.parity_bound),
      violations == 0 && applicable > 0, "0 violations",
      std::to_string(violations) + " violations in " + std::to_string(applicable) + " applicable records" +
          (examples_of_failure.empty() ? "" : " e.g. " + join(examples_of_failure)));
  add(res, "n = 7, p = +-1 mod 7: k odd iff p = 1 mod 4", kp_failures == 0 && kp_checked > 0, "0 exceptions",
      std::to_string(kp_failures) + " exceptions in " + std::to_string(kp_checked) + " primes");
  add(res, "n = 7, p = +-2, +-3 mod 7: single class inner iff p = 1 mod 4",
      corollary_failures == 0 && corollary_checked > 0, "0 exceptions",
      std::to_string(corollary_failures) + " exceptions in " + std::to_string(corollary_checked) + " primes");
  res.seconds = seconds_since(start);
  return res;
}

SuiteResult oracle_matrices(const SuiteOptions& options) {
  const auto start = Clock::now();
  SuiteResult res{"oracle", {}, 0.0};
  std::uint64_t classes = 0, disagreements = 0, conjugation_failures = 0, degenerate = 0, degenerate_rule_failures = 0;
  std::vector<std::string> failures;
  for (unsigned n : {7u, 9u, 11u}) {
    for (auto p : numkit::primes_up_to(options.oracle_bound)) {
      if (p == 2) continue;
      std::optional<census::CensusRecord> rec;
      try {
        rec = census::map_census(3, n, p);
      } catch (const Error& e) {
        if (e.code() == ErrorCode::Internal) throw;
        continue;
      }
      for (std::size_t i = 0; i < rec->classes.size(); ++i) {
        ++classes;
        for (auto strategy : {census::OracleStrategy::Enumerate, census::OracleStrategy::PreferDegenerate}) {
          const auto out = census::matrix_oracle(*rec, i, strategy);
          if (!out.agrees) {
            ++disagreements;
            if (failures.size() < 5) failures.push_back(triple(3, n, p) + "#" + std::to_string(i));
          }
          if (!out.witness.conjugation_ok) ++conjugation_failures;
          if (out.witness.degenerate) {
            ++degenerate;
            // Degenerate branch: 3 - t^2 is a square iff -1 is.
            const auto minus_one = gf::FieldElem::from_int(out.witness.t.ctx(), -1);
            if (gf::chi(out.witness.nonsingularity) != gf::chi(minus_one)) ++degenerate_rule_failures;
          }
        }
      }
    }
  }
  add(res, "matrix oracle agrees with chi, n in {7,9,11}, odd p <= " + std::to_string(options.oracle_bound),
      disagreements == 0 && classes > 0, "0 disagreements",
      std::to_string(disagreements) + " disagreements over " + std::to_string(classes) + " classes x 2 strategies" +
          (failures.empty() ? "" : " e.g. " + join(failures)));
  add(res, "w inverts z and x projectively", conjugation_failures == 0, "0 failures",
      std::to_string(conjugation_failures) + " failures");
  add(res, "degenerate branch (beta = 0, r = v) exercised", degenerate > 0, ">= 1", std::to_string(degenerate));
  add(res, "degenerate branch: chi(3 - t^2) = chi(-1)", degenerate_rule_failures == 0, "0 failures",
      std::to_string(degenerate_rule_failures) + " failures");
  res.seconds = seconds_since(start);
  return res;
}

SuiteResult oracle_routes(const SuiteOptions& options) {
  const auto start = Clock::now();
  SuiteResult res{"oracle", {}, 0.0};
  std::uint64_t compared = 0, mismatches = 0;
  std::vector<std::string> route_failures;
  for (unsigned m : {3u, 4u}) {
    for (unsigned n = (m == 3 ? 7 : 5); n <= 16; ++n) {
      for (auto p : numkit::primes_up_to(options.route_bound)) {
        const std::uint64_t N = n % 2 == 1 ? n : 2ull * n;
        if (N % p == 0) continue;
        try {
          const auto cmp = census::route_equivalence(m, n, p);
          ++compared;
          if (!cmp.equal) {
            ++mismatches;
            if (route_failures.size() < 5) route_failures.push_back(triple(m, n, p));
          }
        } catch (const Error& e) {
          if (e.code() != ErrorCode::BadReduction) throw;
        }
      }
    }
  }
  add(res, "s-values from Psi_N traces equal roots of f1, n <= 16, p <= " + std::to_string(options.route_bound),
      mismatches == 0 && compared > 0, "0 mismatches",
      std::to_string(mismatches) + " mismatches in " + std::to_string(compared) + " comparisons" +
          (route_failures.empty() ? "" : " e.g. " + join(route_failures)));
  res.seconds = seconds_since(start);
  return res;
}

SuiteResult oracle(const SuiteOptions& options) {
  auto res = oracle_matrices(options);
  auto routes = oracle_routes(options);
  res.checks.insert(res.checks.end(), routes.checks.begin(), routes.checks.end());
  res.seconds += routes.seconds;
  return res;
}

SuiteResult patterns(const SuiteOptions& options) {
  const auto start = Clock::now();
  SuiteResult res{"patterns", {}, 0.0};

  const std::map<density::Pattern, Rational> expected{
      {{1, 1, 1, 1, 1, 1}, Rational(1, 24)}, {{2, 2, 2}, Rational(1, 24)}, {{1, 1, 1, 1, 2}, Rational(1, 8)},
      {{1, 1, 2, 2}, Rational(1, 8)},        {{3, 3}, Rational(1, 3)},     {{6}, Rational(1, 3)}};
  const auto wreath = density::wreath_cycle_distribution(7);
  add(res, "cycle types of C2 wr C3", wreath == expected, "1/24,1/24,1/8,1/8,1/3,1/3 on the six types",
      std::to_string(wreath.size()) + " types");

  const auto pc = density::pattern_census(3, 7, options.pattern_bound, options.workers);
  for (const auto& [pat, dens] : expected) {
    auto it = std::find_if(pc.patterns.begin(), pc.patterns.end(), [&](const auto& r) { return r.pattern == pat; });
    const double freq = it == pc.patterns.end() ? 0.0 : it->frequency;
    const double want = dens.convert_to<double>();
    std::ostringstream got;
    got << freq << " (" << (it == pc.patterns.end() ? 0 : it->count) << " of " << pc.sampled << ")";
    add(res, "pattern {" + report::pattern_string(pat) + "} within 0.01", std::abs(freq - want) <= 0.01,
        report::rational_string(dens), got.str());
  }
  add(res, "patterns seen are the six predicted ones", pc.patterns.size() == expected.size(), "6",
      std::to_string(pc.patterns.size()));
  add(res, "linear factors of f2 = 2 k_p at every sampled prime", pc.bridge_violations.empty(), "0 violations",
      std::to_string(pc.bridge_violations.size()) + " violations");
  std::vector<std::uint64_t> bad;
  for (const auto& b : pc.bad_primes) bad.push_back(b.p);
  add(res, "excluded primes", bad == std::vector<std::uint64_t>{2, 7}, "2,7", join(bad));
  res.seconds = seconds_since(start);
  return res;
}

}  // namespace macbeath::verify
