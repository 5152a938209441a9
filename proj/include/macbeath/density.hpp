#pragma once

// Prime sweeps over Sigma_k, Galois-structure predictions, wreath-product
// cycle statistics and degree-pattern censuses. The sweeping kernels run
// under OpenMP; the *_serial variants are the reference implementations the
// tests compare against.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "macbeath/bigint.hpp"
#include "macbeath/census.hpp"
#include "macbeath/error.hpp"
#include "macbeath/numkit.hpp"

namespace macbeath::density {

enum class GaloisStructure { FullWreath, EvenSubgroup, Unknown };
std::string_view to_string(GaloisStructure g);
/// Accepts "full", "full-wreath", "even", "even-subgroup", "unknown".
GaloisStructure parse_galois_structure(const std::string& text);

struct GaloisModel {
  unsigned m = 3;
  unsigned n = 7;
  unsigned r = 3;  // phi(n)/2
  GaloisStructure structure = GaloisStructure::Unknown;
  bool overridden = false;
  std::optional<unsigned> negative_roots;  // m = 3 only
};

/// Negative roots of f1 over the reals, counted with exact integer
/// inequalities. Requires n >= 7.
unsigned negative_root_count(unsigned n);

GaloisModel galois_model(unsigned m, unsigned n, std::optional<GaloisStructure> override = std::nullopt);

/// Binomial (full wreath) or even-subgroup densities of Sigma_k, k = 0..r;
/// nullopt for an Unknown structure.
std::optional<std::vector<Rational>> predicted_sigma_densities(const GaloisModel& model);

using Pattern = std::vector<unsigned>;  // ascending cycle lengths / factor degrees

/// Cycle-type distribution of C2 wr (Z_n^* / +-1) on phi(n) points, by brute
/// enumeration. Requires phi(n)/2 <= 16.
std::map<Pattern, Rational> wreath_cycle_distribution(unsigned n);

// ---------------------------------------------------------------------------

struct SweepSpec {
  unsigned m = 3;
  unsigned n = 7;
  numkit::PrimeStream primes;
  std::optional<GaloisStructure> galois_override;
};

/// Primes = +-1 mod N_n, first `count` of them.
SweepSpec default_sweep(unsigned m, unsigned n, std::size_t count);

struct SkippedPrime {
  std::uint64_t p = 0;
  ErrorCode code = ErrorCode::BadReduction;
  std::string reason;
};

struct SigmaTally {
  unsigned m = 3;
  unsigned n = 7;
  std::uint64_t N_n = 7;
  std::size_t swept = 0;
  std::vector<std::uint64_t> counts;       // by k
  std::vector<std::uint64_t> counts_plus;  // p = +1 mod N_n
  std::vector<std::uint64_t> counts_minus; // p = -1 mod N_n
  std::vector<std::vector<std::uint64_t>> members_plus;   // primes by k
  std::vector<std::vector<std::uint64_t>> members_minus;
  std::vector<double> frequencies;
  GaloisModel model;
  std::optional<std::vector<Rational>> predicted;
  std::optional<double> max_abs_deviation;
};

struct SweepResult {
  SigmaTally tally;
  std::vector<census::CensusRecord> records;  // ascending p
  std::vector<SkippedPrime> skipped;
};

struct SweepOptions {
  int workers = 0;                  // 0: OpenMP default
  std::optional<std::string> cache; // append-mode JSON-lines cache
};

SweepResult sweep(const SweepSpec& spec, const SweepOptions& options = {});
SweepResult sweep_serial(const SweepSpec& spec);

/// Builds the tally from per-prime records (used by both sweep drivers).
SigmaTally tally_records(const SweepSpec& spec, const std::vector<census::CensusRecord>& records);

// ---------------------------------------------------------------------------

struct PatternCount {
  Pattern pattern;
  std::uint64_t count = 0;
  double frequency = 0.0;
  std::optional<Rational> predicted;
};

struct PatternCensus {
  unsigned m = 3;
  unsigned n = 7;
  std::uint64_t bound = 0;
  std::uint64_t sampled = 0;
  std::vector<PatternCount> patterns;  // ascending pattern order, predicted-but-unseen included
  std::vector<SkippedPrime> bad_primes;
  /// Primes where the linear-factor count of f2 differs from twice the
  /// number of degree-1 classes with square s.
  std::vector<std::uint64_t> bridge_violations;
  std::optional<double> max_abs_deviation;
};

PatternCensus pattern_census(unsigned m, unsigned n, std::uint64_t bound, int workers = 0,
                             std::optional<GaloisStructure> galois_override = std::nullopt);
PatternCensus pattern_census_serial(unsigned m, unsigned n, std::uint64_t bound,
                                    std::optional<GaloisStructure> galois_override = std::nullopt);

}  // namespace macbeath::density
