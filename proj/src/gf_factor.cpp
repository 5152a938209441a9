#include <algorithm>
#include <functional>
#include <random>

#include "macbeath/error.hpp"
#include "macbeath/gf.hpp"
#include "macbeath/numkit.hpp"

namespace macbeath::gf {

namespace {

// Squarefree decomposition over F_p: pairs (squarefree part, multiplicity).
std::vector<Factor> squarefree_decompose(const FpPoly& f) {
  std::vector<Factor> out;
  const std::uint64_t p = f.prime();
  FpPoly c = gcd(f, f.derivative());
  FpPoly w = f / c;
  unsigned i = 1;
  while (!w.is_one()) {
    FpPoly y = gcd(w, c);
    FpPoly fac = w / y;
    if (fac.degree() > 0) out.push_back({fac.monic(), i});
    w = y;
    c = c / y;
    ++i;
  }
  if (c.degree() > 0) {
    // c is a polynomial in x^p; take its p-th root (a^p = a on F_p).
    std::vector<std::uint64_t> root;
    for (int k = 0; k <= c.degree(); k += static_cast<int>(p)) root.push_back(c.coeff(k));
    for (auto& sub : squarefree_decompose(FpPoly(p, std::move(root)).monic())) {
      out.push_back({sub.poly, sub.multiplicity * static_cast<unsigned>(p)});
    }
  }
  return out;
}

// Distinct-degree factorization of a monic squarefree polynomial.
std::vector<std::pair<FpPoly, unsigned>> distinct_degree(FpPoly f) {
  std::vector<std::pair<FpPoly, unsigned>> out;
  const std::uint64_t p = f.prime();
  const FpPoly x = FpPoly::x(p);
  FpPoly h = x % f;
  for (unsigned i = 1; f.degree() >= 2 * static_cast<int>(i); ++i) {
    h = powmod(h, p, f);
    FpPoly g = gcd(f, h - x);
    if (!g.is_one()) {
      out.emplace_back(g, i);
      f = f / g;
      h = h % f;
    }
  }
  if (f.degree() > 0) out.emplace_back(f, static_cast<unsigned>(f.degree()));
  return out;
}

std::uint64_t seed_for(const FpPoly& f) {
  std::uint64_t h = std::hash<std::uint64_t>{}(f.prime());
  for (auto c : f.coeffs()) h = h * 0x100000001B3ull ^ std::hash<std::uint64_t>{}(c + 0x9E3779B97F4A7C15ull);
  return h;
}

// Splits a monic squarefree f whose irreducible factors all have degree d.
void equal_degree(const FpPoly& f, unsigned d, std::mt19937_64& rng, std::vector<FpPoly>& out) {
  if (f.degree() == static_cast<int>(d)) {
    out.push_back(f);
    return;
  }
  const std::uint64_t p = f.prime();
  const int n = f.degree();
  while (true) {
    std::vector<std::uint64_t> c(n);
    for (auto& v : c) v = rng() % p;
    FpPoly a(p, std::move(c));
    if (a.degree() < 1) continue;
    FpPoly b;
    if (p == 2) {
      // Trace map a + a^2 + ... + a^(2^(d-1)).
      FpPoly term = a % f;
      b = term;
      for (unsigned k = 1; k < d; ++k) {
        term = mulmod(term, term, f);
        b = b + term;
      }
    } else {
      // a^((p^d - 1)/2) = (a * a^p * ... * a^(p^(d-1)))^((p-1)/2).
      FpPoly conj = a % f;
      FpPoly norm_like = conj;
      for (unsigned k = 1; k < d; ++k) {
        conj = powmod(conj, p, f);
        norm_like = mulmod(norm_like, conj, f);
      }
      b = powmod(norm_like, (p - 1) / 2, f) - FpPoly::constant(p, 1);
    }
    FpPoly g = gcd(f, b);
    if (g.degree() > 0 && g.degree() < n) {
      equal_degree(g, d, rng, out);
      equal_degree(f / g, d, rng, out);
      return;
    }
  }
}

}  // namespace

FactorList factor(const FpPoly& input) {
  if (input.is_zero()) throw Error(ErrorCode::InvalidArgument, "cannot factor the zero polynomial");
  const FpPoly f = input.monic();
  FactorList result;
  std::mt19937_64 rng(seed_for(f));
  for (const auto& sq : squarefree_decompose(f)) {
    if (sq.multiplicity > 1) result.squarefree = false;
    for (auto& [part, d] : distinct_degree(sq.poly)) {
      std::vector<FpPoly> pieces;
      equal_degree(part, d, rng, pieces);
      for (auto& piece : pieces) result.factors.push_back({piece.monic(), sq.multiplicity});
    }
  }
  std::sort(result.factors.begin(), result.factors.end(),
            [](const Factor& a, const Factor& b) { return canonical_less(a.poly, b.poly); });

  FpPoly product = FpPoly::constant(f.prime(), 1);
  for (const auto& fac : result.factors) {
    for (unsigned k = 0; k < fac.multiplicity; ++k) product = product * fac.poly;
  }
  if (!(product == f)) {
    throw Error(ErrorCode::Internal, "factorization of " + f.to_string() + " does not reconstruct its input");
  }
  return result;
}

FactorList reduce_and_factor(const intpoly::IntPoly& f, std::uint64_t p) {
  if (!numkit::is_prime(p)) throw Error(ErrorCode::InvalidArgument, std::to_string(p) + " is not prime");
  if (f.is_zero() || f.leading() % p == 0) {
    throw Error(ErrorCode::InvalidArgument,
                "leading coefficient of " + f.to_string() + " vanishes mod " + std::to_string(p));
  }
  return factor(FpPoly::reduce(f, p));
}

std::vector<unsigned> degree_pattern(const FactorList& factors) {
  std::vector<unsigned> out;
  for (const auto& fac : factors.factors) {
    for (unsigned k = 0; k < fac.multiplicity; ++k) out.push_back(static_cast<unsigned>(fac.poly.degree()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<unsigned> degree_pattern(const intpoly::IntPoly& f, std::uint64_t p) {
  return degree_pattern(reduce_and_factor(f, p));
}

std::vector<std::uint64_t> roots_in_prime_field(const FpPoly& f) {
  std::vector<std::uint64_t> roots;
  for (const auto& fac : factor(f).factors) {
    if (fac.poly.degree() == 1) roots.push_back((f.prime() - fac.poly.coeff(0)) % f.prime());
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace macbeath::gf
