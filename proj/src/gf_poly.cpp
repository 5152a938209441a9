#include <algorithm>
#include <sstream>

#include "macbeath/error.hpp"
#include "macbeath/gf.hpp"
#include "macbeath/numkit.hpp"

namespace macbeath::gf {

using numkit::mulmod;

namespace {

std::uint64_t addm(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t s = a + b;
  return (s >= p || s < a) ? s - p : s;
}

std::uint64_t subm(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return a >= b ? a - b : a + (p - b); }

void require_same_field(const FpPoly& a, const FpPoly& b) {
  if (a.prime() != b.prime()) throw Error(ErrorCode::InvalidArgument, "polynomials over different primes");
}

}  // namespace

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw Error(ErrorCode::InvalidArgument, "inverse of zero mod " + std::to_string(p));
  return numkit::powmod(a, p - 2, p);
}

int legendre(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) return 0;
  if (p == 2) return 1;
  return numkit::powmod(a, (p - 1) / 2, p) == 1 ? 1 : -1;
}

FpPoly::FpPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs) : p_(p), c_(std::move(coeffs)) {
  for (auto& c : c_) c %= p_;
  trim();
}

FpPoly FpPoly::constant(std::uint64_t p, std::uint64_t c) { return FpPoly(p, {c}); }

FpPoly FpPoly::x(std::uint64_t p) { return FpPoly(p, {0, 1}); }

FpPoly FpPoly::reduce(const intpoly::IntPoly& f, std::uint64_t p) {
  std::vector<std::uint64_t> c;
  c.reserve(f.coeffs().size());
  const BigInt bp = p;
  for (const auto& v : f.coeffs()) {
    BigInt r = v % bp;
    if (r < 0) r += bp;
    c.push_back(static_cast<std::uint64_t>(r));
  }
  return FpPoly(p, std::move(c));
}

void FpPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::uint64_t FpPoly::eval(std::uint64_t x) const {
  std::uint64_t acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = addm(mulmod(acc, x % p_, p_), *it, p_);
  return acc;
}

FpPoly FpPoly::derivative() const {
  if (c_.size() <= 1) return FpPoly(p_, {});
  std::vector<std::uint64_t> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = mulmod(c_[i], i % p_, p_);
  return FpPoly(p_, std::move(d));
}

FpPoly FpPoly::monic() const {
  if (is_zero()) return *this;
  return *this * inv_mod(leading(), p_);
}

FpPoly operator+(const FpPoly& a, const FpPoly& b) {
  require_same_field(a, b);
  std::vector<std::uint64_t> r(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = addm(a.coeff(i), b.coeff(i), a.p_);
  return FpPoly(a.p_, std::move(r));
}

FpPoly operator-(const FpPoly& a, const FpPoly& b) {
  require_same_field(a, b);
  std::vector<std::uint64_t> r(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = subm(a.coeff(i), b.coeff(i), a.p_);
  return FpPoly(a.p_, std::move(r));
}

FpPoly operator*(const FpPoly& a, const FpPoly& b) {
  require_same_field(a, b);
  if (a.is_zero() || b.is_zero()) return FpPoly(a.p_, {});
  const std::uint64_t p = a.p_;
  std::vector<std::uint64_t> r(a.c_.size() + b.c_.size() - 1, 0);
  if (p < (1ull << 31)) {
    // Products fit in 62 bits; reduce lazily.
    std::vector<unsigned __int128> acc(r.size(), 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) acc[i + j] += a.c_[i] * b.c_[j];
    }
    for (std::size_t k = 0; k < r.size(); ++k) r[k] = static_cast<std::uint64_t>(acc[k] % p);
  } else {
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = addm(r[i + j], mulmod(a.c_[i], b.c_[j], p), p);
    }
  }
  return FpPoly(p, std::move(r));
}

FpPoly operator*(const FpPoly& a, std::uint64_t c) {
  std::vector<std::uint64_t> r(a.c_);
  for (auto& x : r) x = mulmod(x, c % a.p_, a.p_);
  return FpPoly(a.p_, std::move(r));
}

std::vector<long long> FpPoly::balanced() const {
  std::vector<long long> out;
  out.reserve(c_.size());
  for (auto c : c_) {
    out.push_back(c > p_ / 2 ? -static_cast<long long>(p_ - c) : static_cast<long long>(c));
  }
  return out;
}

std::string FpPoly::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  const auto b = balanced();
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const long long c = b[i];
    if (c == 0) continue;
    const long long mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (mag != 1 || i == 0) os << mag;
    if (i >= 1) os << var;
    if (i >= 2) os << "^" << i;
    first = false;
  }
  return os.str();
}

FpDivResult divmod(const FpPoly& a, const FpPoly& b) {
  require_same_field(a, b);
  if (b.is_zero()) throw Error(ErrorCode::InvalidArgument, "polynomial division by zero");
  const std::uint64_t p = a.prime();
  if (a.degree() < b.degree()) return {FpPoly(p, {}), a};
  std::vector<std::uint64_t> rem = a.coeffs();
  const int db = b.degree();
  const std::uint64_t inv_lead = inv_mod(b.leading(), p);
  std::vector<std::uint64_t> quot(a.degree() - db + 1, 0);
  for (int i = a.degree(); i >= db; --i) {
    if (rem[i] == 0) continue;
    const std::uint64_t c = mulmod(rem[i], inv_lead, p);
    quot[i - db] = c;
    for (int j = 0; j <= db; ++j) rem[i - db + j] = subm(rem[i - db + j], mulmod(c, b.coeffs()[j], p), p);
  }
  rem.resize(db);
  return {FpPoly(p, std::move(quot)), FpPoly(p, std::move(rem))};
}

FpPoly operator%(const FpPoly& a, const FpPoly& b) { return divmod(a, b).remainder; }

FpPoly operator/(const FpPoly& a, const FpPoly& b) { return divmod(a, b).quotient; }

FpPoly gcd(const FpPoly& a, const FpPoly& b) {
  FpPoly x = a, y = b;
  while (!y.is_zero()) {
    FpPoly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

FpPoly mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& modulus) { return (a * b) % modulus; }

FpPoly powmod(const FpPoly& base, const BigInt& exp, const FpPoly& modulus) {
  FpPoly result = FpPoly::constant(base.prime(), 1) % modulus;
  if (exp == 0) return result;
  FpPoly b = base % modulus;
  const auto top = boost::multiprecision::msb(exp);
  for (std::size_t i = top + 1; i-- > 0;) {
    result = mulmod(result, result, modulus);
    if (boost::multiprecision::bit_test(exp, i)) result = mulmod(result, b, modulus);
  }
  return result;
}

FpPoly powmod(const FpPoly& base, std::uint64_t exp, const FpPoly& modulus) {
  FpPoly result = FpPoly::constant(base.prime(), 1) % modulus;
  FpPoly b = base % modulus;
  while (exp != 0) {
    if (exp & 1) result = mulmod(result, b, modulus);
    exp >>= 1;
    if (exp != 0) b = mulmod(b, b, modulus);
  }
  return result;
}

bool canonical_less(const FpPoly& a, const FpPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  const std::uint64_t p = a.prime();
  for (int i = 0; i <= a.degree(); ++i) {
    const std::uint64_t na = (p - a.coeff(i)) % p;
    const std::uint64_t nb = (p - b.coeff(i)) % p;
    if (na != nb) return na < nb;
  }
  return false;
}

bool is_irreducible(const FpPoly& f) {
  const int n = f.degree();
  if (n < 1) return false;
  if (n == 1) return true;
  const FpPoly g = f.monic();
  const std::uint64_t p = g.prime();
  const FpPoly x = FpPoly::x(p);
  // Rabin: x^(p^n) = x mod g and gcd(x^(p^(n/r)) - x, g) = 1 for primes r | n.
  std::vector<FpPoly> frob{x % g};
  for (int i = 1; i <= n; ++i) frob.push_back(powmod(frob.back(), p, g));
  if (!(frob[n] == x % g)) return false;
  for (auto r : numkit::arith_tables(n).divisors) {
    if (r == 1 || !numkit::is_prime(r)) continue;
    if (!gcd(frob[n / r] - x, g).is_one()) return false;
  }
  return true;
}

}  // namespace macbeath::gf
