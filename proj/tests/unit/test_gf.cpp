#include <doctest.h>

#include <random>
#include <set>

#include "macbeath/gf.hpp"
#include "macbeath/intpoly.hpp"

using namespace macbeath;
using gf::FieldElem;
using gf::FpPoly;

namespace {

FpPoly first_irreducible(std::uint64_t p, unsigned d) {
  std::vector<std::uint64_t> c(d + 1, 0);
  c[d] = 1;
  while (true) {
    FpPoly f(p, c);
    if (gf::is_irreducible(f)) return f;
    for (unsigned i = 0; i < d; ++i) {
      if (++c[i] < p) break;
      c[i] = 0;
    }
  }
}

std::vector<FieldElem> all_elements(const gf::FieldRef& ctx) {
  const unsigned d = ctx->degree();
  std::vector<FieldElem> out;
  std::vector<std::uint64_t> c(d, 0);
  while (true) {
    out.emplace_back(ctx, FpPoly(ctx->p(), c));
    unsigned i = 0;
    for (; i < d; ++i) {
      if (++c[i] < ctx->p()) break;
      c[i] = 0;
    }
    if (i == d) break;
  }
  return out;
}

}  // namespace

TEST_SUITE("gf") {
  TEST_CASE("polynomial arithmetic mod p") {
    const FpPoly a(7, {1, 2, 3});
    const FpPoly b(7, {6, 1});
    const auto [q, r] = gf::divmod(a, b);
    CHECK(q * b + r == a);
    CHECK(r.degree() < b.degree());
    CHECK(gf::gcd(a * b, b * b) == b.monic());
    CHECK(FpPoly(13, {6, 0, 1}).to_string() == "x^2 + 6");
  }

  TEST_CASE("legendre symbol") {
    CHECK(gf::legendre(5, 41) == 1);
    CHECK(gf::legendre(3, 7) == -1);
    CHECK(gf::legendre(0, 7) == 0);
  }

  TEST_CASE("chi matches squares and is multiplicative") {
    for (auto [p, d] : std::vector<std::pair<std::uint64_t, unsigned>>{{3, 3}, {5, 2}, {7, 2}, {2, 4}, {11, 1}}) {
      const auto ctx = gf::FieldCtx::make(first_irreducible(p, d), d);
      const auto elems = all_elements(ctx);
      std::set<std::vector<std::uint64_t>> squares;
      for (const auto& x : elems) {
        if (!x.is_zero()) squares.insert((x * x).residue().coeffs());
      }
      for (const auto& x : elems) {
        const int want = x.is_zero() ? 0 : (squares.count(x.residue().coeffs()) ? 1 : -1);
        CHECK(gf::chi(x) == want);
        for (std::size_t j = 0; j < elems.size(); j += 3) CHECK(gf::chi(x * elems[j]) == gf::chi(x) * gf::chi(elems[j]));
      }
    }
  }

  TEST_CASE("subfield elements use the ambient character") {
    // F_p inside F_{p^2}: everything is a square.
    const auto ctx = gf::FieldCtx::prime_field(7, 2);
    for (int v = 1; v < 7; ++v) CHECK(gf::chi(FieldElem::from_int(ctx, v)) == 1);
    const auto odd = gf::FieldCtx::prime_field(7, 3);
    CHECK(gf::chi(FieldElem::from_int(odd, 3)) == -1);
  }

  TEST_CASE("square roots") {
    const auto ctx = gf::FieldCtx::prime_field(41);
    const auto r = gf::sqrt_in_field(FieldElem::from_int(ctx, 5));
    REQUIRE(r.root);
    CHECK(((*r.root) * (*r.root)) == FieldElem::from_int(ctx, 5));
    const auto ext = gf::FieldCtx::make(first_irreducible(3, 3), 3);
    for (const auto& x : all_elements(ext)) {
      const auto s = gf::sqrt_in_field(x * x);
      REQUIRE(s.root);
      CHECK((*s.root) * (*s.root) == x * x);
    }
  }

  TEST_CASE("minimal polynomial and norm") {
    const auto h = first_irreducible(5, 3);
    const auto ctx = gf::FieldCtx::make(h, 3);
    const auto g = FieldElem::generator(ctx);
    CHECK(gf::minimal_polynomial(g) == h);
    CHECK(gf::minimal_polynomial(FieldElem::from_int(ctx, 2)) == FpPoly(5, {3, 1}));
    CHECK(g.norm() == (5 - h.coeff(0)) % 5);
  }

  TEST_CASE("factorization reconstructs and is deterministic") {
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 200; ++trial) {
      const std::uint64_t primes[] = {2, 3, 5, 7, 13, 101, 997};
      const std::uint64_t p = primes[trial % 7];
      std::vector<std::uint64_t> c(2 + rng() % 10);
      for (auto& v : c) v = rng() % p;
      c.back() = 1;
      const FpPoly f(p, c);
      const auto fl = gf::factor(f);
      FpPoly prod = FpPoly::constant(p, 1);
      for (const auto& fac : fl.factors) {
        CHECK(gf::is_irreducible(fac.poly));
        for (unsigned k = 0; k < fac.multiplicity; ++k) prod = prod * fac.poly;
      }
      CHECK(prod == f);
      const auto again = gf::factor(f);
      REQUIRE(again.factors.size() == fl.factors.size());
      for (std::size_t i = 0; i < fl.factors.size(); ++i) CHECK(again.factors[i].poly == fl.factors[i].poly);
    }
  }

  TEST_CASE("f2 for {3,7} mod 13") {
    const auto f2 = intpoly::doubled(intpoly::s_polynomial(3, 7));
    CHECK(gf::degree_pattern(f2, 13) == std::vector<unsigned>{1, 1, 2, 2});
    CHECK(gf::roots_in_prime_field(gf::FpPoly::reduce(intpoly::s_polynomial(3, 7), 13)) ==
          std::vector<std::uint64_t>{4, 6, 7});
  }
}
