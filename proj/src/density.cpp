#include "macbeath/density.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <variant>

#include "macbeath/gf.hpp"
#include "macbeath/intpoly.hpp"
#include "macbeath/report.hpp"

namespace macbeath::density {

std::string_view to_string(GaloisStructure g) {
  switch (g) {
    case GaloisStructure::FullWreath:
      return "full-wreath";
    case GaloisStructure::EvenSubgroup:
      return "even-subgroup";
    case GaloisStructure::Unknown:
      return "unknown";
  }
  return "unknown";
}

GaloisStructure parse_galois_structure(const std::string& text) {
  if (text == "full" || text == "full-wreath") return GaloisStructure::FullWreath;
  if (text == "even" || text == "even-subgroup") return GaloisStructure::EvenSubgroup;
  if (text == "unknown") return GaloisStructure::Unknown;
  throw Error(ErrorCode::InvalidArgument, "unknown Galois structure '" + text + "'");
}

unsigned negative_root_count(unsigned n) {
  if (n < 7) throw Error(ErrorCode::InvalidArgument, "negative_root_count requires n >= 7");
  unsigned count = 0;
  if (n % 2 == 1) {
    for (unsigned j = 1; j <= (n - 1) / 2; ++j) {
      if (std::gcd(j, n) == 1 && (12 * j < n || 12 * j > 5 * n)) ++count;
    }
  } else {
    for (unsigned j = 1; 2 * j < n; ++j) {
      if (std::gcd(j, 2 * n) == 1 && 6 * j < n) ++count;
    }
  }
  return count;
}

GaloisModel galois_model(unsigned m, unsigned n, std::optional<GaloisStructure> override) {
  if (m != 3 && m != 4) throw Error(ErrorCode::InvalidArgument, "galois_model supports m in {3, 4}");
  GaloisModel g;
  g.m = m;
  g.n = n;
  g.r = static_cast<unsigned>(numkit::totient(n) / 2);
  if (m == 3) {
    static const std::vector<unsigned> full{7, 8, 9, 10, 11, 12, 14, 16, 18, 19};
    static const std::vector<unsigned> even{13, 15};
    if (std::find(full.begin(), full.end(), n) != full.end()) {
      g.structure = GaloisStructure::FullWreath;
    } else if (std::find(even.begin(), even.end(), n) != even.end()) {
      g.structure = GaloisStructure::EvenSubgroup;
    }
    if (n >= 7) g.negative_roots = negative_root_count(n);
  } else if (n == 5) {
    g.structure = GaloisStructure::FullWreath;
  }
  if (override) {
    g.structure = *override;
    g.overridden = true;
  }
  return g;
}

namespace {

Rational binomial(unsigned r, unsigned k) {
  BigInt c = 1;
  for (unsigned i = 0; i < k; ++i) c = c * (r - i) / (i + 1);
  return Rational(c);
}

}  // namespace

std::optional<std::vector<Rational>> predicted_sigma_densities(const GaloisModel& model) {
  if (model.structure == GaloisStructure::Unknown) return std::nullopt;
  const unsigned r = model.r;
  const Rational full = Rational(numkit::pow_big(2, r));
  std::vector<Rational> out(r + 1);
  for (unsigned k = 0; k <= r; ++k) {
    if (model.structure == GaloisStructure::FullWreath) {
      out[k] = binomial(r, k) / full;
    } else {
      out[k] = (k % 2 == r % 2) ? binomial(r, k) / (full / 2) : Rational(0);
    }
  }
  return out;
}

std::map<Pattern, Rational> wreath_cycle_distribution(unsigned n) {
  const unsigned r = static_cast<unsigned>(numkit::totient(n) / 2);
  if (n < 3 || r > 16) throw Error(ErrorCode::InvalidArgument, "wreath enumeration needs 3 <= n, phi(n)/2 <= 16");
  // Points of the top group: unit classes mod n up to sign, by least representative.
  std::vector<unsigned> reps;
  for (unsigned j = 1; 2 * j < n; ++j) {
    if (std::gcd(j, n) == 1) reps.push_back(j);
  }
  auto index_of = [&](unsigned v) {
    v %= n;
    if (2 * v > n) v = n - v;
    return static_cast<unsigned>(std::lower_bound(reps.begin(), reps.end(), v) - reps.begin());
  };

  std::map<Pattern, std::uint64_t> counts;
  for (unsigned a : reps) {
    // Cycles of multiplication by a.
    std::vector<std::vector<unsigned>> cycles;
    std::vector<bool> seen(r, false);
    for (unsigned i = 0; i < r; ++i) {
      if (seen[i]) continue;
      std::vector<unsigned> cyc;
      for (unsigned j = i; !seen[j]; j = index_of(a * reps[j])) {
        seen[j] = true;
        cyc.push_back(j);
      }
      cycles.push_back(std::move(cyc));
    }
    for (std::uint64_t v = 0; v < (1ull << r); ++v) {
      Pattern pat;
      for (const auto& cyc : cycles) {
        unsigned parity = 0;
        for (auto j : cyc) parity ^= (v >> j) & 1u;
        const auto len = static_cast<unsigned>(cyc.size());
        if (parity == 0) {
          pat.push_back(len);
          pat.push_back(len);
        } else {
          pat.push_back(2 * len);
        }
      }
      std::sort(pat.begin(), pat.end());
      ++counts[pat];
    }
  }
  const BigInt order = numkit::pow_big(2, r) * r;
  std::map<Pattern, Rational> out;
  for (const auto& [pat, c] : counts) out[pat] = Rational(BigInt(c), order);
  return out;
}

// ---------------------------------------------------------------------------

SweepSpec default_sweep(unsigned m, unsigned n, std::size_t count) {
  SweepSpec spec;
  spec.m = m;
  spec.n = n;
  const std::uint64_t N = n % 2 == 1 ? n : 2ull * n;
  spec.primes.modulus = N;
  spec.primes.residues = {1, N - 1};
  spec.primes.limit = numkit::FirstK{count};
  return spec;
}

namespace {

struct PrimeOutcome {
  std::optional<census::CensusRecord> record;
  std::optional<SkippedPrime> skipped;
};

PrimeOutcome classify_prime(unsigned m, unsigned n, std::uint64_t p) {
  PrimeOutcome out;
  try {
    out.record = census::map_census(m, n, p);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Internal || e.code() == ErrorCode::InvalidArgument) throw;
    out.skipped = SkippedPrime{p, e.code(), e.what()};
  }
  return out;
}

SweepResult assemble(const SweepSpec& spec, std::vector<PrimeOutcome>& outcomes) {
  SweepResult res;
  for (auto& o : outcomes) {
    if (o.record) res.records.push_back(std::move(*o.record));
    if (o.skipped) res.skipped.push_back(std::move(*o.skipped));
  }
  res.tally = tally_records(spec, res.records);
  return res;
}

void set_workers(int workers) {
  if (workers > 0) omp_set_num_threads(workers);
}

}  // namespace

SigmaTally tally_records(const SweepSpec& spec, const std::vector<census::CensusRecord>& records) {
  SigmaTally t;
  t.m = spec.m;
  t.n = spec.n;
  t.N_n = spec.n % 2 == 1 ? spec.n : 2ull * spec.n;
  const unsigned r = static_cast<unsigned>(numkit::totient(spec.n) / 2);
  t.counts.assign(r + 1, 0);
  t.counts_plus.assign(r + 1, 0);
  t.counts_minus.assign(r + 1, 0);
  t.members_plus.assign(r + 1, {});
  t.members_minus.assign(r + 1, {});
  for (const auto& rec : records) {
    ++t.swept;
    ++t.counts[rec.k];
    if (rec.p % t.N_n == 1) {
      ++t.counts_plus[rec.k];
      t.members_plus[rec.k].push_back(rec.p);
    } else if (rec.p % t.N_n == t.N_n - 1) {
      ++t.counts_minus[rec.k];
      t.members_minus[rec.k].push_back(rec.p);
    }
  }
  t.frequencies.assign(r + 1, 0.0);
  for (unsigned k = 0; k <= r && t.swept > 0; ++k) {
    t.frequencies[k] = static_cast<double>(t.counts[k]) / static_cast<double>(t.swept);
  }
  if (spec.m == 3 || spec.m == 4) {
    t.model = galois_model(spec.m, spec.n, spec.galois_override);
    t.predicted = predicted_sigma_densities(t.model);
  }
  if (t.predicted && t.swept > 0) {
    double worst = 0.0;
    for (unsigned k = 0; k <= r; ++k) {
      worst = std::max(worst, std::abs(t.frequencies[k] - (*t.predicted)[k].convert_to<double>()));
    }
    t.max_abs_deviation = worst;
  }
  return t;
}

SweepResult sweep_serial(const SweepSpec& spec) {
  const auto primes = numkit::primes_in_classes(spec.primes);
  std::vector<PrimeOutcome> outcomes;
  outcomes.reserve(primes.size());
  for (auto p : primes) outcomes.push_back(classify_prime(spec.m, spec.n, p));
  return assemble(spec, outcomes);
}

SweepResult sweep(const SweepSpec& spec, const SweepOptions& options) {
  const auto primes = numkit::primes_in_classes(spec.primes);
  std::vector<PrimeOutcome> outcomes(primes.size());
  std::vector<bool> cached(primes.size(), false);

  if (options.cache) {
    const auto entries = report::load_cache(*options.cache);
    for (std::size_t i = 0; i < primes.size(); ++i) {
      auto it = entries.find({spec.m, spec.n, primes[i]});
      if (it == entries.end()) continue;
      cached[i] = true;
      if (it->second.record) outcomes[i].record = it->second.record;
      if (it->second.skipped) {
        outcomes[i].skipped = SkippedPrime{primes[i], it->second.skipped->code, it->second.skipped->reason};
      }
    }
  }

  intpoly::psi(spec.n);  // warm the memo before the workers start
  set_workers(options.workers);
  const auto count = static_cast<std::int64_t>(primes.size());
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < count; ++i) {
    if (cached[i]) continue;
    try {
      outcomes[i] = classify_prime(spec.m, spec.n, primes[i]);
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  if (options.cache) {
    std::ofstream out(*options.cache, std::ios::app);
    for (std::size_t i = 0; i < primes.size(); ++i) {
      if (cached[i]) continue;
      if (outcomes[i].record) report::append_cache(out, *outcomes[i].record);
      if (outcomes[i].skipped) {
        report::append_cache_skip(out, spec.m, spec.n, primes[i], outcomes[i].skipped->code,
                                  outcomes[i].skipped->reason);
      }
    }
  }
  return assemble(spec, outcomes);
}

// ---------------------------------------------------------------------------

namespace {

struct PatternOutcome {
  std::optional<Pattern> pattern;
  std::optional<SkippedPrime> bad;
  bool bridge_ok = true;
};

PatternOutcome pattern_for_prime(unsigned m, unsigned n, const intpoly::IntPoly& f2, std::uint64_t p) {
  PatternOutcome out;
  const auto factors = gf::reduce_and_factor(f2, p);
  if (!factors.squarefree) {
    out.bad = SkippedPrime{p, ErrorCode::BadReduction, "f2 is not squarefree mod " + std::to_string(p)};
    return out;
  }
  const auto outcome = classify_prime(m, n, p);
  if (outcome.skipped) {
    out.bad = outcome.skipped;
    return out;
  }
  out.pattern = gf::degree_pattern(factors);
  const auto linear = static_cast<unsigned>(std::count(out.pattern->begin(), out.pattern->end(), 1u));
  unsigned square_linear = 0;
  for (const auto& c : outcome.record->classes) {
    if (c.e == 1 && gf::legendre(c.s.prime_value(), p) == 1) ++square_linear;
  }
  out.bridge_ok = linear == 2 * square_linear;
  if (outcome.record->field.d == 1 && linear != 2 * outcome.record->k) out.bridge_ok = false;
  return out;
}

PatternCensus assemble_patterns(unsigned m, unsigned n, std::uint64_t bound, const std::vector<std::uint64_t>& primes,
                                std::vector<PatternOutcome>& outcomes,
                                std::optional<GaloisStructure> galois_override) {
  PatternCensus pc;
  pc.m = m;
  pc.n = n;
  pc.bound = bound;
  std::map<Pattern, std::uint64_t> counts;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    auto& o = outcomes[i];
    if (o.bad) {
      pc.bad_primes.push_back(std::move(*o.bad));
      continue;
    }
    ++pc.sampled;
    ++counts[*o.pattern];
    if (!o.bridge_ok) pc.bridge_violations.push_back(primes[i]);
  }
  std::map<Pattern, Rational> predicted;
  if (m == 3 || m == 4) {
    const auto model = galois_model(m, n, galois_override);
    if (model.structure == GaloisStructure::FullWreath) predicted = wreath_cycle_distribution(n);
  }
  for (const auto& [pat, dens] : predicted) counts.try_emplace(pat, 0);

  double worst = 0.0;
  for (const auto& [pat, c] : counts) {
    PatternCount row;
    row.pattern = pat;
    row.count = c;
    row.frequency = pc.sampled ? static_cast<double>(c) / static_cast<double>(pc.sampled) : 0.0;
    if (!predicted.empty()) {
      auto it = predicted.find(pat);
      row.predicted = it == predicted.end() ? Rational(0) : it->second;
      worst = std::max(worst, std::abs(row.frequency - row.predicted->convert_to<double>()));
    }
    pc.patterns.push_back(std::move(row));
  }
  if (!predicted.empty()) pc.max_abs_deviation = worst;
  return pc;
}

}  // namespace

PatternCensus pattern_census_serial(unsigned m, unsigned n, std::uint64_t bound,
                                    std::optional<GaloisStructure> galois_override) {
  const auto f2 = intpoly::doubled(intpoly::s_polynomial(m, n));
  const auto primes = numkit::primes_up_to(bound);
  std::vector<PatternOutcome> outcomes;
  outcomes.reserve(primes.size());
  for (auto p : primes) outcomes.push_back(pattern_for_prime(m, n, f2, p));
  return assemble_patterns(m, n, bound, primes, outcomes, galois_override);
}

PatternCensus pattern_census(unsigned m, unsigned n, std::uint64_t bound, int workers,
                             std::optional<GaloisStructure> galois_override) {
  const auto f2 = intpoly::doubled(intpoly::s_polynomial(m, n));
  const auto primes = numkit::primes_up_to(bound);
  std::vector<PatternOutcome> outcomes(primes.size());
  set_workers(workers);
  const auto count = static_cast<std::int64_t>(primes.size());
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 256)
  for (std::int64_t i = 0; i < count; ++i) {
    try {
      outcomes[i] = pattern_for_prime(m, n, f2, primes[i]);
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return assemble_patterns(m, n, bound, primes, outcomes, galois_override);
}

}  // namespace macbeath::density
