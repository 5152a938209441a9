#include <doctest.h>

#include "macbeath/numkit.hpp"

using namespace macbeath;

TEST_SUITE("numkit") {
  TEST_CASE("primality agrees with trial division") {
    for (std::uint64_t v = 0; v < 5000; ++v) {
      bool trial = v >= 2;
      for (std::uint64_t d = 2; d * d <= v && trial; ++d) trial = v % d != 0;
      CHECK(numkit::is_prime(v) == trial);
    }
    CHECK(numkit::is_prime(2305843009213693951ull));
    CHECK_FALSE(numkit::is_prime(3215031751ull));  // strong pseudoprime to bases 2, 3, 5, 7
  }

  TEST_CASE("primes in classes") {
    numkit::PrimeStream s;
    s.modulus = 7;
    s.residues = {1, 6};
    s.limit = numkit::FirstK{5};
    CHECK(numkit::primes_in_classes(s) == std::vector<std::uint64_t>{13, 29, 41, 43, 71});
    s.limit = numkit::FirstK{400};
    CHECK(numkit::primes_in_classes(s).back() == 9871);
    s.limit = numkit::UpTo{50};
    CHECK(numkit::primes_in_classes(s).size() == 4);
    CHECK(numkit::primes_up_to(100).size() == 25);
  }

  TEST_CASE("signed multiplicative order") {
    CHECK(numkit::mult_order_signed(13, 7) == 1);
    CHECK(numkit::mult_order_signed(2, 7) == 3);
    CHECK(numkit::mult_order_signed(5, 13) == 2);
    CHECK(numkit::mult_order_signed(3, 8) == 2);
    CHECK(numkit::mult_order_signed(7, 8) == 1);
  }

  TEST_CASE("arithmetic tables") {
    const auto t = numkit::arith_tables(12);
    CHECK(t.divisors == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12});
    CHECK(t.mobius == std::vector<int>{1, -1, -1, 0, 1, 0});
    CHECK(t.totient == 4);
    CHECK(numkit::mobius(30) == -1);
    CHECK(numkit::totient(19) == 18);
  }

  TEST_CASE("prime powers and genus") {
    const auto pp = numkit::prime_power_decompose(BigInt(289));
    CHECK(pp.prime == 17);
    CHECK(pp.exponent == 2);
    CHECK_THROWS(numkit::prime_power_decompose(BigInt(12)));
    CHECK(numkit::psl2_order(BigInt(8)) == 504);
    CHECK(numkit::psl2_order(BigInt(13)) == 1092);
    CHECK(numkit::genus(3, 7, BigInt(8)) == 7);
    CHECK(numkit::genus(3, 7, BigInt(13)) == 14);
    CHECK(numkit::genus(4, 5, BigInt(31)) == 373);
  }

  TEST_CASE("hyperbolic types") {
    CHECK(numkit::is_hyperbolic(3, 7));
    CHECK_FALSE(numkit::is_hyperbolic(3, 6));
    CHECK(numkit::is_hyperbolic(4, 5));
    CHECK_FALSE(numkit::is_hyperbolic(4, 4));
  }
}
