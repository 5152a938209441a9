#include <doctest.h>

#include <cmath>
#include <numbers>

#include "macbeath/intpoly.hpp"
#include "macbeath/numkit.hpp"

using namespace macbeath;
using intpoly::IntPoly;

TEST_SUITE("intpoly") {
  TEST_CASE("small psi") {
    CHECK(intpoly::psi(7) == IntPoly{-1, -2, 1, 1});
    CHECK(intpoly::psi(9) == IntPoly{1, -3, 0, 1});
    CHECK(intpoly::psi(8) == IntPoly{-2, 0, 1});
    CHECK(intpoly::psi(5) == IntPoly{-1, 1, 1});
    CHECK(intpoly::psi(6) == IntPoly{-1, 1});
  }

  TEST_CASE("psi has degree phi(n)/2 and vanishes at 2cos(2pi/n)") {
    for (unsigned n = 3; n <= 60; ++n) {
      const auto f = intpoly::psi(n);
      CHECK(f.is_monic());
      CHECK(static_cast<std::uint64_t>(f.degree()) == numkit::totient(n) / 2);
      const double x = 2.0 * std::cos(2.0 * std::numbers::pi / n);
      CHECK(std::abs(f.eval(x)) < 1e-6);
    }
  }

  TEST_CASE("psi(n)(1) table") {
    const long long want[] = {-1, -1, -1, -1, -1, -2, 1, -1, 1, -1, 1, -3, -1};
    for (unsigned n = 7; n <= 19; ++n) {
      const auto v = intpoly::psi_at_one(n);
      CHECK(v.direct == want[n - 7]);
      CHECK(v.mobius == Rational(want[n - 7]));
    }
  }

  TEST_CASE("b_e is an integer equal to the divisor product at 1") {
    for (unsigned e = 1; e <= 72; ++e) {
      const Rational b = intpoly::b_value(e);
      CHECK(denominator(b) == 1);
      CHECK(b == Rational(intpoly::divisor_product(e).eval(BigInt(1))));
      if (e >= 4 && e % 2 == 0) CHECK(abs(b) != Rational(3, 2));
    }
  }

  TEST_CASE("psi_at_one Mobius route for n up to 120") {
    for (unsigned n = 3; n <= 120; ++n) CHECK_NOTHROW(intpoly::psi_at_one(n));
  }

  TEST_CASE("s polynomial and discriminant") {
    const auto f1 = intpoly::s_polynomial(3, 7);
    CHECK(f1 == IntPoly{1, 3, -4, 1});
    CHECK(intpoly::discriminant(f1) == 49);
    CHECK(intpoly::doubled(f1) == IntPoly{1, 0, 3, 0, -4, 0, 1});
    CHECK(intpoly::s_polynomial(4, 5) == IntPoly{-1, -1, 1});
    CHECK_THROWS(intpoly::s_polynomial(5, 7));
    CHECK_THROWS(intpoly::s_polynomial(3, 6));
  }

  TEST_CASE("resultant of linear polynomials") {
    CHECK(intpoly::resultant(IntPoly{-2, 1}, IntPoly{-5, 1}) == -3);
  }
}
