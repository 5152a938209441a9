#pragma once

// Finite-field arithmetic: polynomials over F_p, extension fields F_p[x]/(g)
// sitting inside an ambient F_q, factorization of integer polynomials mod p,
// and the quadratic residue character of the ambient field.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "macbeath/bigint.hpp"
#include "macbeath/intpoly.hpp"

namespace macbeath::gf {

/// Dense polynomial over F_p, constant term first, no trailing zeros.
class FpPoly {
 public:
  FpPoly() = default;
  FpPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs);

  static FpPoly constant(std::uint64_t p, std::uint64_t c);
  static FpPoly x(std::uint64_t p);
  /// Coefficients reduced into [0, p).
  static FpPoly reduce(const intpoly::IntPoly& f, std::uint64_t p);

  std::uint64_t prime() const { return p_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  const std::vector<std::uint64_t>& coeffs() const { return c_; }
  std::uint64_t coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  std::uint64_t leading() const { return c_.back(); }

  std::uint64_t eval(std::uint64_t x) const;
  FpPoly derivative() const;
  FpPoly monic() const;

  friend FpPoly operator+(const FpPoly& a, const FpPoly& b);
  friend FpPoly operator-(const FpPoly& a, const FpPoly& b);
  friend FpPoly operator*(const FpPoly& a, const FpPoly& b);
  friend FpPoly operator*(const FpPoly& a, std::uint64_t c);
  friend bool operator==(const FpPoly&, const FpPoly&) = default;

  /// Coefficients as signed values in (-p/2, p/2], constant term first.
  std::vector<long long> balanced() const;
  std::string to_string(char var = 'x') const;

 private:
  void trim();
  std::uint64_t p_ = 2;
  std::vector<std::uint64_t> c_;
};

struct FpDivResult {
  FpPoly quotient;
  FpPoly remainder;
};

FpDivResult divmod(const FpPoly& a, const FpPoly& b);
FpPoly operator%(const FpPoly& a, const FpPoly& b);
FpPoly operator/(const FpPoly& a, const FpPoly& b);
/// Monic gcd (zero if both inputs are zero).
FpPoly gcd(const FpPoly& a, const FpPoly& b);
FpPoly mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& modulus);
FpPoly powmod(const FpPoly& base, const BigInt& exp, const FpPoly& modulus);
FpPoly powmod(const FpPoly& base, std::uint64_t exp, const FpPoly& modulus);

/// Canonical ordering: degree, then lexicographic on the negated
/// coefficients from the constant term up. Linear factors x - r sort by r.
bool canonical_less(const FpPoly& a, const FpPoly& b);

bool is_irreducible(const FpPoly& f);

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p);
/// Euler criterion in F_p: +1, -1, or 0.
int legendre(std::uint64_t a, std::uint64_t p);

// ---------------------------------------------------------------------------

/// The field F_p[x]/(g), g monic irreducible of degree e, viewed inside the
/// ambient field F_{p^ambient_d}.
class FieldCtx {
 public:
  static std::shared_ptr<const FieldCtx> make(const FpPoly& modulus, unsigned ambient_d);
  /// The prime field F_p inside F_{p^ambient_d}.
  static std::shared_ptr<const FieldCtx> prime_field(std::uint64_t p, unsigned ambient_d = 1);

  std::uint64_t p() const { return modulus_.prime(); }
  const FpPoly& modulus() const { return modulus_; }
  unsigned degree() const { return static_cast<unsigned>(modulus_.degree()); }
  unsigned ambient_degree() const { return ambient_d_; }
  /// p^degree.
  BigInt order() const;

 private:
  FieldCtx(FpPoly modulus, unsigned ambient_d) : modulus_(std::move(modulus)), ambient_d_(ambient_d) {}
  FpPoly modulus_;
  unsigned ambient_d_;
};

using FieldRef = std::shared_ptr<const FieldCtx>;

class FieldElem {
 public:
  /// Placeholder with no field; only assignable.
  FieldElem() = default;
  FieldElem(FieldRef ctx, FpPoly residue);
  static FieldElem from_int(FieldRef ctx, long long v);
  /// The class of x.
  static FieldElem generator(FieldRef ctx);

  const FieldRef& ctx() const { return ctx_; }
  const FpPoly& residue() const { return residue_; }
  bool is_zero() const { return residue_.is_zero(); }
  bool is_one() const { return residue_.is_one(); }
  /// True if the element lies in the prime field.
  bool in_prime_field() const { return residue_.degree() <= 0; }
  std::uint64_t prime_value() const;

  FieldElem operator-() const;
  friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator-(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
  friend bool operator==(const FieldElem& a, const FieldElem& b);

  FieldElem inverse() const;
  FieldElem pow(const BigInt& exp) const;
  FieldElem pow(std::uint64_t exp) const;
  /// a -> a^p.
  FieldElem frobenius() const;
  /// Product of the Galois conjugates over F_p, an element of F_p.
  std::uint64_t norm() const;

  /// Prime-field elements print as balanced integers, others as polynomials.
  std::string to_string() const;

 private:
  FieldRef ctx_;
  FpPoly residue_;
};

/// Quadratic character of the ambient field F_q: +1 on nonzero squares, -1
/// on non-squares, 0 on zero.
int chi(const FieldElem& a);

struct SqrtResult {
  enum class Status { Root, AmbientOnly, NonSquare };
  Status status = Status::NonSquare;
  /// Present when status == Root; its negative is the other root.
  std::optional<FieldElem> root;
};

/// Square root inside the element's own field F_p[x]/(g).
SqrtResult sqrt_in_field(const FieldElem& a);

/// Minimal polynomial over F_p of an element of an extension field.
FpPoly minimal_polynomial(const FieldElem& a);

// ---------------------------------------------------------------------------

struct Factor {
  FpPoly poly;  // monic irreducible
  unsigned multiplicity = 1;
};

struct FactorList {
  std::vector<Factor> factors;  // canonical order
  bool squarefree = true;
};

/// Complete factorization of a polynomial over F_p (made monic first).
FactorList factor(const FpPoly& f);

/// Reduces f mod p and factors it. Throws InvalidArgument if the leading
/// coefficient vanishes mod p.
FactorList reduce_and_factor(const intpoly::IntPoly& f, std::uint64_t p);

/// Degrees of the irreducible factors, repeated by multiplicity, ascending.
std::vector<unsigned> degree_pattern(const intpoly::IntPoly& f, std::uint64_t p);
std::vector<unsigned> degree_pattern(const FactorList& factors);

/// Roots in F_p, ascending.
std::vector<std::uint64_t> roots_in_prime_field(const FpPoly& f);

}  // namespace macbeath::gf
