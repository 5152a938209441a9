#include "macbeath/numkit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "macbeath/error.hpp"

namespace macbeath {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument:
      return "invalid_argument";
    case ErrorCode::BadReduction:
      return "bad_reduction";
    case ErrorCode::Inadmissible:
      return "inadmissible";
    case ErrorCode::Internal:
      return "internal";
  }
  return "unknown";
}

}  // namespace macbeath

namespace macbeath::numkit {

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp != 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool is_prime(std::uint64_t v) {
  if (v < 2) return false;
  static constexpr std::uint64_t kSmall[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (auto sp : kSmall) {
    if (v % sp == 0) return v == sp;
  }
  std::uint64_t d = v - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These twelve bases are a proven witness set below 3.3e24.
  for (auto a : kSmall) {
    std::uint64_t x = powmod(a, d, v);
    if (x == 1 || x == v - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulmod(x, x, v);
      if (x == v - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

namespace {

std::vector<std::uint64_t> simple_sieve(std::uint64_t limit) {
  std::vector<bool> composite(limit + 1, false);
  std::vector<std::uint64_t> primes;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return primes;
}

std::uint64_t isqrt(std::uint64_t v) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(v)));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

// Walks the integers in fixed-size windows, growing the base-prime table on
// demand so the "first K" mode never needs an up-front bound.
class SegmentedSieve {
 public:
  static constexpr std::uint64_t kSegment = 1 << 18;

  // Appends primes in [lo, hi) to out.
  void sieve(std::uint64_t lo, std::uint64_t hi, std::vector<std::uint64_t>& out) {
    if (hi <= lo) return;
    ensure_base(isqrt(hi) + 1);
    std::vector<bool> composite(hi - lo, false);
    for (auto bp : base_) {
      if (bp * bp >= hi) break;
      std::uint64_t start = std::max(bp * bp, (lo + bp - 1) / bp * bp);
      for (std::uint64_t j = start; j < hi; j += bp) composite[j - lo] = true;
    }
    for (std::uint64_t v = std::max<std::uint64_t>(lo, 2); v < hi; ++v) {
      if (!composite[v - lo]) out.push_back(v);
    }
  }

 private:
  void ensure_base(std::uint64_t limit) {
    if (limit <= base_limit_) return;
    base_limit_ = std::max(limit, base_limit_ * 2);
    base_ = simple_sieve(base_limit_);
  }

  std::vector<std::uint64_t> base_;
  std::uint64_t base_limit_ = 0;
};

void validate_stream(const PrimeStream& stream) {
  if (stream.modulus == 0) {
    throw Error(ErrorCode::InvalidArgument, "prime stream modulus must be positive");
  }
  if (stream.residues.empty()) {
    throw Error(ErrorCode::InvalidArgument, "prime stream residue set is empty");
  }
  for (auto r : stream.residues) {
    if (r >= stream.modulus || (stream.modulus > 1 && gcd(r, stream.modulus) != 1)) {
      throw Error(ErrorCode::InvalidArgument,
                  "residue " + std::to_string(r) + " is not a unit mod " +
                      std::to_string(stream.modulus));
    }
  }
}

}  // namespace

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  SegmentedSieve sieve;
  for (std::uint64_t lo = 0; lo <= bound; lo += SegmentedSieve::kSegment) {
    sieve.sieve(lo, std::min(bound + 1, lo + SegmentedSieve::kSegment), out);
  }
  return out;
}

std::vector<std::uint64_t> primes_in_classes(const PrimeStream& stream) {
  validate_stream(stream);
  std::vector<std::uint64_t> result;
  auto matches = [&](std::uint64_t p) { return stream.residues.count(p % stream.modulus) != 0; };

  SegmentedSieve sieve;
  std::vector<std::uint64_t> chunk;
  if (const auto* upto = std::get_if<UpTo>(&stream.limit)) {
    for (std::uint64_t lo = 0; lo <= upto->bound; lo += SegmentedSieve::kSegment) {
      chunk.clear();
      sieve.sieve(lo, std::min(upto->bound + 1, lo + SegmentedSieve::kSegment), chunk);
      for (auto p : chunk) {
        if (matches(p)) result.push_back(p);
      }
    }
    return result;
  }

  const auto want = std::get<FirstK>(stream.limit).count;
  for (std::uint64_t lo = 0; result.size() < want; lo += SegmentedSieve::kSegment) {
    chunk.clear();
    sieve.sieve(lo, lo + SegmentedSieve::kSegment, chunk);
    for (auto p : chunk) {
      if (result.size() == want) break;
      if (matches(p)) result.push_back(p);
    }
  }
  return result;
}

unsigned mult_order_signed(std::uint64_t p, std::uint64_t modulus) {
  if (modulus == 0 || gcd(p % modulus, modulus) != 1) {
    throw Error(ErrorCode::InvalidArgument,
                "mult_order_signed: gcd(" + std::to_string(p) + ", " +
                    std::to_string(modulus) + ") != 1");
  }
  if (modulus <= 2) return 1;
  std::uint64_t x = p % modulus;
  for (unsigned e = 1;; ++e) {
    if (x == 1 || x == modulus - 1) return e;
    x = mulmod(x, p % modulus, modulus);
  }
}

int mobius(std::uint64_t n) {
  int sign = 1;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f != 0) continue;
    n /= f;
    if (n % f == 0) return 0;
    sign = -sign;
  }
  if (n > 1) sign = -sign;
  return sign;
}

std::uint64_t totient(std::uint64_t n) {
  std::uint64_t result = n;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f != 0) continue;
    while (n % f == 0) n /= f;
    result -= result / f;
  }
  if (n > 1) result -= result / n;
  return result;
}

ArithTables arith_tables(std::uint64_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "arith_tables requires n >= 1");
  ArithTables t;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    t.divisors.push_back(d);
    if (d * d != n) t.divisors.push_back(n / d);
  }
  std::sort(t.divisors.begin(), t.divisors.end());
  for (auto d : t.divisors) t.mobius.push_back(mobius(d));
  t.totient = totient(n);
  return t;
}

BigInt pow_big(std::uint64_t base, unsigned exp) {
  BigInt r = 1;
  for (unsigned i = 0; i < exp; ++i) r *= base;
  return r;
}

PrimePower prime_power_decompose(const BigInt& q) {
  if (q < 2) throw Error(ErrorCode::InvalidArgument, "q must be a prime power >= 2");
  const auto bits = boost::multiprecision::msb(q) + 1;
  for (unsigned d = 1; d <= bits; ++d) {
    // Candidate d-th root from floating point, corrected by exact checks.
    const double approx = std::pow(static_cast<double>(q), 1.0 / d);
    if (approx > 9.0e18) continue;
    const auto base = static_cast<std::uint64_t>(std::llround(approx));
    for (std::uint64_t r = base > 2 ? base - 1 : 2; r <= base + 1; ++r) {
      if (pow_big(r, d) == q && is_prime(r)) return {r, d};
    }
  }
  throw Error(ErrorCode::InvalidArgument, "q = " + q.str() + " is not a prime power");
}

BigInt psl2_order(const BigInt& q) {
  auto pp = prime_power_decompose(q);
  BigInt full = q * (q * q - 1);
  return pp.prime == 2 ? full : full / 2;
}

bool is_hyperbolic(unsigned m, unsigned n) {
  // 1/m + 1/n < 1/2
  return m >= 2 && n >= 2 && 2ull * (m + n) < 1ull * m * n;
}

BigInt genus(unsigned m, unsigned n, const BigInt& q) {
  if (!is_hyperbolic(m, n)) {
    throw Error(ErrorCode::InvalidArgument,
                "type {" + std::to_string(m) + "," + std::to_string(n) + "} is not hyperbolic");
  }
  // g = 1 + |G| (mn - 2m - 2n) / (4mn)
  BigInt num = psl2_order(q) * (BigInt(m) * n - 2 * m - 2 * n);
  BigInt den = BigInt(4) * m * n;
  if (num % den != 0) {
    throw Error(ErrorCode::Inadmissible,
                "non-integral genus for type {" + std::to_string(m) + "," + std::to_string(n) +
                    "} and q = " + q.str());
  }
  return 1 + num / den;
}

}  // namespace macbeath::numkit
