#pragma once

// Integer and prime utilities shared by the census and density layers.

#include <cstdint>
#include <set>
#include <variant>
#include <vector>

#include "macbeath/bigint.hpp"

namespace macbeath::numkit {

/// Deterministic Miller-Rabin over the full 64-bit range.
bool is_prime(std::uint64_t v);

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);
std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

struct FirstK {
  std::size_t count;
};
struct UpTo {
  std::uint64_t bound;
};

/// Primes p with (p mod modulus) in residues, either the first K of them or
/// all of them up to a bound.
struct PrimeStream {
  std::uint64_t modulus = 1;
  std::set<std::uint64_t> residues{0};
  std::variant<FirstK, UpTo> limit = FirstK{0};
};

std::vector<std::uint64_t> primes_in_classes(const PrimeStream& stream);

/// All primes <= bound (segmented sieve).
std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);

/// Least e >= 1 with p^e = +-1 (mod N). Throws if gcd(p, N) != 1.
unsigned mult_order_signed(std::uint64_t p, std::uint64_t modulus);

struct ArithTables {
  std::vector<std::uint64_t> divisors;  // ascending
  std::vector<int> mobius;              // mobius[i] = mu(divisors[i])
  std::uint64_t totient = 0;
};

ArithTables arith_tables(std::uint64_t n);

int mobius(std::uint64_t n);
std::uint64_t totient(std::uint64_t n);

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;
};

/// Decomposes q = p^d; throws InvalidArgument if q is not a prime power.
PrimePower prime_power_decompose(const BigInt& q);

BigInt pow_big(std::uint64_t base, unsigned exp);

/// |PSL(2, q)|.
BigInt psl2_order(const BigInt& q);

/// Genus of an orientably regular map of type {m, n} with rotation group
/// PSL(2, q). Throws for non-hyperbolic types or non-integral results.
BigInt genus(unsigned m, unsigned n, const BigInt& q);

bool is_hyperbolic(unsigned m, unsigned n);

}  // namespace macbeath::numkit
