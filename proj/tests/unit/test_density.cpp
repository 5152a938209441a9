#include <doctest.h>

#include "macbeath/density.hpp"
#include "macbeath/report.hpp"

using namespace macbeath;

TEST_SUITE("density") {
  TEST_CASE("negative root counts") {
    CHECK(density::negative_root_count(7) == 1);
    CHECK(density::negative_root_count(9) == 1);
    CHECK(density::negative_root_count(13) == 2);
  }

  TEST_CASE("galois models") {
    CHECK(density::galois_model(3, 7).structure == density::GaloisStructure::FullWreath);
    CHECK(density::galois_model(3, 13).structure == density::GaloisStructure::EvenSubgroup);
    CHECK(density::galois_model(3, 17).structure == density::GaloisStructure::Unknown);
    const auto forced = density::galois_model(3, 17, density::GaloisStructure::FullWreath);
    CHECK(forced.overridden);
    CHECK_FALSE(density::predicted_sigma_densities(density::galois_model(3, 17)));
    const auto full = *density::predicted_sigma_densities(density::galois_model(3, 7));
    CHECK(full == std::vector<Rational>{Rational(1, 8), Rational(3, 8), Rational(3, 8), Rational(1, 8)});
    const auto even = *density::predicted_sigma_densities(density::galois_model(3, 13));
    CHECK(even[1] == 0);
    CHECK(even[0] == Rational(1, 32));
    CHECK(density::parse_galois_structure("even") == density::GaloisStructure::EvenSubgroup);
  }

  TEST_CASE("wreath distribution sums to one") {
    for (unsigned n : {5u, 7u, 8u, 9u, 11u, 13u}) {
      Rational total = 0;
      for (const auto& [pat, dens] : density::wreath_cycle_distribution(n)) total += dens;
      CHECK(total == 1);
    }
    const auto d7 = density::wreath_cycle_distribution(7);
    CHECK(d7.size() == 6);
    CHECK(d7.at({6}) == Rational(1, 3));
    CHECK(d7.at({1, 1, 1, 1, 1, 1}) == Rational(1, 24));
  }

  TEST_CASE("parallel sweep equals serial sweep") {
    const auto spec = density::default_sweep(3, 7, 120);
    const auto serial = density::sweep_serial(spec);
    for (int workers : {1, 2, 4}) {
      const auto par = density::sweep(spec, {workers, std::nullopt});
      CHECK(par.tally.counts == serial.tally.counts);
      CHECK(par.tally.members_plus == serial.tally.members_plus);
      CHECK(par.tally.members_minus == serial.tally.members_minus);
      REQUIRE(par.records.size() == serial.records.size());
      for (std::size_t i = 0; i < par.records.size(); ++i) CHECK(report::same_record(par.records[i], serial.records[i]));
    }
  }

  TEST_CASE("sweep skips bad primes") {
    auto spec = density::default_sweep(3, 8, 30);
    spec.primes.residues = {1, 3, 5, 7, 9, 11, 13, 15};
    const auto res = density::sweep_serial(spec);
    CHECK(res.records.size() + res.skipped.size() == 30);
  }

  TEST_CASE("parallel pattern census equals serial") {
    const auto serial = density::pattern_census_serial(3, 7, 20000);
    const auto par = density::pattern_census(3, 7, 20000, 3);
    CHECK(par.sampled == serial.sampled);
    REQUIRE(par.patterns.size() == serial.patterns.size());
    for (std::size_t i = 0; i < par.patterns.size(); ++i) {
      CHECK(par.patterns[i].pattern == serial.patterns[i].pattern);
      CHECK(par.patterns[i].count == serial.patterns[i].count);
    }
    CHECK(par.bridge_violations.empty());
  }
}
