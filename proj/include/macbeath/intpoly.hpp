#pragma once

// Exact integer polynomials and the named polynomials of the classification:
// minimal polynomials of 2cos(2pi/n), the s-polynomials and their doublings.

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "macbeath/bigint.hpp"

namespace macbeath::intpoly {

/// Integer polynomial, coefficients stored constant term first. The zero
/// polynomial has no coefficients and degree -1.
class IntPoly {
 public:
  IntPoly() = default;
  IntPoly(std::initializer_list<long long> coeffs);
  explicit IntPoly(std::vector<BigInt> coeffs);

  static IntPoly monomial(const BigInt& c, unsigned degree);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  /// Coefficient of x^i; zero beyond the degree.
  BigInt coeff(std::size_t i) const;
  const BigInt& leading() const { return coeffs_.back(); }
  bool is_monic() const { return !is_zero() && leading() == 1; }

  BigInt eval(const BigInt& x) const;
  Rational eval(const Rational& x) const;
  double eval(double x) const;

  IntPoly derivative() const;
  /// this(inner(x)).
  IntPoly compose(const IntPoly& inner) const;

  IntPoly operator-() const;
  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  IntPoly& operator*=(const IntPoly& o);
  IntPoly& operator*=(const BigInt& c);

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(IntPoly a, const IntPoly& b) { return a *= b; }
  friend IntPoly operator*(IntPoly a, const BigInt& c) { return a *= c; }
  friend bool operator==(const IntPoly&, const IntPoly&) = default;

  std::string to_string(char var = 'x') const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

struct DivResult {
  IntPoly quotient;
  IntPoly remainder;
};

/// Division by a monic divisor (exact in Z[x]).
DivResult divmod_monic(const IntPoly& dividend, const IntPoly& divisor);

/// V_m(y) = 2 T_m(y/2): V_0 = 2, V_1 = y, V_{m+1} = y V_m - V_{m-1}.
IntPoly vieta_lucas(unsigned m);

/// Product of psi(e) over all divisors e of n, as the Vieta-Lucas
/// combination V_{k+1} - V_k (n = 2k+1) or V_{k+1} - V_{k-1} (n = 2k).
IntPoly divisor_product(unsigned n);

/// Minimal polynomial of 2cos(2pi/n). Memoized, thread safe.
IntPoly psi(unsigned n);

/// Largest n accepted by psi(); defaults to 200.
unsigned psi_cap();
void set_psi_cap(unsigned cap);

struct PsiAtOne {
  BigInt direct;        // psi(n)(1)
  Rational mobius;      // product over e | n of b_e^mu(n/e)
};

/// b_e = prod_{d | e} psi(d)(1) from the closed-form case table (zero when
/// 6 | e).
Rational b_value(unsigned e);

/// Psi_n(1) directly and through Mobius inversion of the b_e values; throws
/// Internal if they disagree. Requires n >= 3.
PsiAtOne psi_at_one(unsigned n);

/// Shift c = 2 - omega_m^2 for m in {3, 4, 6}.
int s_shift(unsigned m);

/// Monic polynomial whose roots are the Hall parameters s = c - t_{2j}:
/// (-1)^deg psi(n)(c - s).
IntPoly s_polynomial(unsigned m, unsigned n);

/// f(x^2).
IntPoly doubled(const IntPoly& f);

/// Resultant via fraction-free elimination on the Sylvester matrix.
BigInt resultant(const IntPoly& f, const IntPoly& g);

/// disc(f) = (-1)^{n(n-1)/2} res(f, f') / lc(f).
BigInt discriminant(const IntPoly& f);

}  // namespace macbeath::intpoly
