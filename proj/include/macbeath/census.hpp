#pragma once

// Classification of Macbeath maps of type {m, n} over F_p: trace classes,
// the inner/outer verdict from the quadratic character, parity, and two
// independent oracles (explicit matrices, and traces via Psi_N).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "macbeath/bigint.hpp"
#include "macbeath/gf.hpp"

namespace macbeath::census {

struct FieldData {
  unsigned m = 3;
  unsigned n = 7;
  std::uint64_t p = 2;
  std::uint64_t N_n = 7;  // n for odd n, 2n for even n
  std::uint64_t N_m = 3;  // 3, 8, 12 for m = 3, 4, 6
  unsigned d = 1;
  BigInt q;
};

/// Field degree d and q = p^d for (m, n, p). Throws Inadmissible when p
/// divides N_n or the m-side is impossible in characteristic p.
FieldData field_data(unsigned m, unsigned n, std::uint64_t p);

enum class Regularity { Inner, Outer };
std::string_view to_string(Regularity r);

struct TraceClass {
  gf::FpPoly factor;                 // irreducible factor of f1 mod p
  unsigned e = 1;                    // its degree
  gf::FieldElem s;                   // root of factor in F_p[x]/(factor)
  int chi = 1;                       // character of s in F_q
  Regularity regularity = Regularity::Inner;
  std::optional<gf::FieldElem> t;    // t^2 = 4 - omega^2 - s, when representable
};

enum class Parity { Even, Odd };
std::string_view to_string(Parity p);

struct ParityVerdict {
  bool applicable = false;  // m = 3, d odd, Psi_n(1) nonzero mod p
  Parity predicted = Parity::Even;
  Parity observed = Parity::Even;
  bool consistent = true;
  /// For odd n with q = p, the product of the b_e case rules was evaluated
  /// as well; shortcut_agrees records whether it matched.
  bool shortcut_checked = false;
  bool shortcut_agrees = true;
};

struct CensusRecord {
  unsigned m = 3;
  unsigned n = 7;
  std::uint64_t p = 2;
  FieldData field;
  BigInt genus;
  std::vector<TraceClass> classes;
  unsigned k = 0;
  unsigned l = 0;
  ParityVerdict parity;
  /// Set when the factor count differs from phi(n)/(2d).
  bool class_count_flag = false;
};

/// Full classification. Throws BadReduction if f1 is not squarefree mod p
/// (or has the root s = 0), Inadmissible for an inadmissible (m, n, p).
CensusRecord map_census(unsigned m, unsigned n, std::uint64_t p);

ParityVerdict parity_verdict(const CensusRecord& record);

struct CpsValue {
  gf::FieldElem value;  // -D = 4 + abc - a^2 - b^2 - c^2
  int chi = 0;
};

CpsValue cps_discriminant(const gf::FieldElem& a, const gf::FieldElem& b, const gf::FieldElem& c);

// ---------------------------------------------------------------------------

struct Mat2 {
  gf::FieldElem a, b, c, d;  // [[a, b], [c, d]]
};

Mat2 operator*(const Mat2& x, const Mat2& y);
gf::FieldElem det(const Mat2& x);
/// Equality up to sign (as elements of PSL/PGL).
bool projectively_equal(const Mat2& x, const Mat2& y);

enum class OracleStrategy {
  Enumerate,         // r = 0, 1, ..., p-1
  PreferDegenerate,  // r = 1/2 first
};

struct OracleWitness {
  gf::FieldElem t;
  Mat2 z;
  Mat2 x;
  Mat2 w;
  gf::FieldElem r;
  gf::FieldElem nonsingularity;  // 4 + abc - a^2 - b^2 - c^2 with a = 0, b = 1, c = t
  int sign = -1;                 // alpha (r - v) = sign * beta (s + u)
  bool degenerate = false;       // beta = 0 and r = v
  bool conjugation_ok = false;   // w z w^-1 = z^-1 and w x w^-1 = x^-1 projectively
  int chi_det_w = 0;
};

struct OracleResult {
  Regularity verdict = Regularity::Inner;
  bool agrees = false;  // verdict equals the class regularity
  OracleWitness witness;
};

/// Builds generating matrices for one class of a (3, n, p) record and
/// decides regularity from the involution w. Requires m = 3 and p odd.
OracleResult matrix_oracle(const CensusRecord& record, std::size_t class_index,
                           OracleStrategy strategy = OracleStrategy::Enumerate);

// ---------------------------------------------------------------------------

struct RouteComparison {
  /// (minimal polynomial of an s-value, number of times each of its roots
  /// is hit), canonical order.
  std::vector<std::pair<gf::FpPoly, unsigned>> from_traces;
  std::vector<std::pair<gf::FpPoly, unsigned>> from_f1;
  bool equal = false;
};

/// s-values obtained from the roots t of Psi_{N_n} mod p via
/// s = 4 - omega^2 - t^2 (+-pairs merged for even n), against the roots of
/// f1 mod p. Throws BadReduction if either polynomial is not squarefree.
RouteComparison route_equivalence(unsigned m, unsigned n, std::uint64_t p);

}  // namespace macbeath::census
