#include "macbeath/intpoly.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <sstream>

#include "macbeath/error.hpp"
#include "macbeath/numkit.hpp"

namespace macbeath::intpoly {

IntPoly::IntPoly(std::initializer_list<long long> coeffs) {
  for (auto c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::monomial(const BigInt& c, unsigned degree) {
  std::vector<BigInt> v(degree + 1);
  v[degree] = c;
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }

BigInt IntPoly::eval(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Rational IntPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Rational(*it);
  return acc;
}

double IntPoly::eval(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->convert_to<double>();
  return acc;
}

IntPoly IntPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<BigInt> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned>(i);
  return IntPoly(std::move(d));
}

IntPoly IntPoly::compose(const IntPoly& inner) const {
  IntPoly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= inner;
    acc += IntPoly(std::vector<BigInt>{*it});
  }
  return acc;
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator*=(const IntPoly& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<BigInt> r(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(r);
  trim();
  return *this;
}

IntPoly& IntPoly::operator*=(const BigInt& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

std::string IntPoly::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    BigInt mag = abs(c);
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

DivResult divmod_monic(const IntPoly& dividend, const IntPoly& divisor) {
  if (!divisor.is_monic()) {
    throw Error(ErrorCode::InvalidArgument, "divmod_monic requires a monic divisor");
  }
  std::vector<BigInt> rem = dividend.coeffs();
  const int dd = divisor.degree();
  if (dividend.degree() < dd) return {IntPoly{}, dividend};
  std::vector<BigInt> quot(dividend.degree() - dd + 1);
  for (int i = dividend.degree(); i >= dd; --i) {
    BigInt c = rem[i];
    if (c == 0) continue;
    quot[i - dd] = c;
    for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= c * divisor.coeffs()[j];
  }
  return {IntPoly(std::move(quot)), IntPoly(std::move(rem))};
}

IntPoly vieta_lucas(unsigned m) {
  IntPoly prev{2};
  if (m == 0) return prev;
  IntPoly cur{0, 1};
  const IntPoly y{0, 1};
  for (unsigned k = 1; k < m; ++k) {
    IntPoly next = y * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

IntPoly divisor_product(unsigned n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "divisor_product requires n >= 1");
  const unsigned k = n / 2;
  if (n % 2 == 1) return vieta_lucas(k + 1) - vieta_lucas(k);
  return vieta_lucas(k + 1) - vieta_lucas(k - 1);
}

namespace {

struct PsiMemo {
  std::shared_mutex mutex;
  std::map<unsigned, IntPoly> table;
  unsigned cap = 200;
};

PsiMemo& memo() {
  static PsiMemo m;
  return m;
}

}  // namespace

unsigned psi_cap() {
  std::shared_lock lock(memo().mutex);
  return memo().cap;
}

void set_psi_cap(unsigned cap) {
  std::unique_lock lock(memo().mutex);
  memo().cap = cap;
}

IntPoly psi(unsigned n) {
  auto& m = memo();
  {
    std::shared_lock lock(m.mutex);
    if (n == 0 || n > m.cap) {
      throw Error(ErrorCode::InvalidArgument,
                  "psi(n) requires 1 <= n <= " + std::to_string(m.cap));
    }
    if (auto it = m.table.find(n); it != m.table.end()) return it->second;
  }
  IntPoly acc = divisor_product(n);
  for (auto e : numkit::arith_tables(n).divisors) {
    if (e == n) continue;
    auto [q, r] = divmod_monic(acc, psi(e));
    if (!r.is_zero()) {
      throw Error(ErrorCode::Internal, "psi(" + std::to_string(n) +
                                           "): inexact division by psi(" + std::to_string(e) + ")");
    }
    acc = std::move(q);
  }
  std::unique_lock lock(m.mutex);
  return m.table.emplace(n, std::move(acc)).first->second;
}

Rational b_value(unsigned e) {
  static constexpr int kOdd[6] = {-1, -2, -1, 1, 2, 1};  // e = 1, 3, 5, 7, 9, 11 mod 12
  static constexpr int kEven[6] = {0, -3, -3, 0, 3, 3};  // e = 0, 2, 4, 6, 8, 10 mod 12
  if (e == 0) throw Error(ErrorCode::InvalidArgument, "b_value requires e >= 1");
  const unsigned r = e % 12;
  return Rational(r % 2 == 1 ? kOdd[r / 2] : kEven[r / 2]);
}

PsiAtOne psi_at_one(unsigned n) {
  if (n < 3) throw Error(ErrorCode::InvalidArgument, "psi_at_one requires n >= 3");
  PsiAtOne out;
  out.direct = psi(n).eval(BigInt(1));

  // b_e vanishes exactly when 6 | e (the simple root of psi(6) = y - 1). Those
  // factors are replaced by the deflated value and the zero multiplicity is
  // tracked separately; it cancels unless n = 6.
  const auto tables = numkit::arith_tables(n);
  Rational product = 1;
  int zero_exponent = 0;
  const IntPoly y_minus_one{-1, 1};
  for (std::size_t i = 0; i < tables.divisors.size(); ++i) {
    const auto e = static_cast<unsigned>(tables.divisors[i]);
    const int mu = numkit::mobius(n / e);
    if (mu == 0) continue;
    Rational b = b_value(e);
    if (b == 0) {
      auto [q, r] = divmod_monic(divisor_product(e), y_minus_one);
      if (!r.is_zero()) throw Error(ErrorCode::Internal, "b_value deflation failed");
      b = Rational(q.eval(BigInt(1)));
      zero_exponent += mu;
    }
    product *= mu > 0 ? b : Rational(1) / b;
  }
  out.mobius = zero_exponent > 0 ? Rational(0) : product;
  if (zero_exponent < 0 || out.mobius != Rational(out.direct)) {
    throw Error(ErrorCode::Internal, "psi_at_one(" + std::to_string(n) +
                                         "): Mobius cross-check disagrees with direct value");
  }
  return out;
}

int s_shift(unsigned m) {
  switch (m) {
    case 3:
      return 1;
    case 4:
      return 0;
    case 6:
      return -1;
    default:
      throw Error(ErrorCode::InvalidArgument,
                  "s_polynomial supports m in {3, 4, 6}; got m = " + std::to_string(m));
  }
}

IntPoly s_polynomial(unsigned m, unsigned n) {
  const int c = s_shift(m);
  if (!numkit::is_hyperbolic(m, n)) {
    throw Error(ErrorCode::InvalidArgument, "type {" + std::to_string(m) + "," +
                                                std::to_string(n) + "} is not hyperbolic");
  }
  IntPoly f = psi(n).compose(IntPoly{c, -1});
  if (f.degree() % 2 == 1) f = -f;
  return f;
}

IntPoly doubled(const IntPoly& f) { return f.compose(IntPoly{0, 0, 1}); }

BigInt resultant(const IntPoly& f, const IntPoly& g) {
  const int m = f.degree();
  const int n = g.degree();
  if (m < 0 || n < 0) return 0;
  if (m == 0 && n == 0) return 1;
  const int size = m + n;
  std::vector<std::vector<BigInt>> a(size, std::vector<BigInt>(size));
  // Rows hold coefficients from the leading term down.
  for (int r = 0; r < n; ++r) {
    for (int j = 0; j <= m; ++j) a[r][r + j] = f.coeff(m - j);
  }
  for (int r = 0; r < m; ++r) {
    for (int j = 0; j <= n; ++j) a[n + r][r + j] = g.coeff(n - j);
  }
  // Bareiss fraction-free elimination.
  int sign = 1;
  BigInt prev = 1;
  for (int k = 0; k < size - 1; ++k) {
    if (a[k][k] == 0) {
      int swap_row = -1;
      for (int r = k + 1; r < size; ++r) {
        if (a[r][k] != 0) {
          swap_row = r;
          break;
        }
      }
      if (swap_row < 0) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < size; ++i) {
      for (int j = k + 1; j < size; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[size - 1][size - 1];
}

BigInt discriminant(const IntPoly& f) {
  const int n = f.degree();
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "discriminant requires degree >= 1");
  BigInt r = resultant(f, f.derivative()) / f.leading();
  const long long pairs = 1ll * n * (n - 1) / 2;
  return pairs % 2 == 0 ? r : BigInt(-r);
}

}  // namespace macbeath::intpoly
