#include <doctest.h>

#include <algorithm>

#include "macbeath/census.hpp"
#include "macbeath/error.hpp"

using namespace macbeath;

namespace {

ErrorCode code_of(unsigned m, unsigned n, std::uint64_t p) {
  try {
    census::map_census(m, n, p);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error for (" << m << "," << n << "," << p << ")");
  return ErrorCode::Internal;
}

}  // namespace

TEST_SUITE("census") {
  TEST_CASE("field degree") {
    CHECK(census::field_data(3, 7, 13).d == 1);
    CHECK(census::field_data(3, 7, 2).q == 8);
    CHECK(census::field_data(3, 13, 5).q == 25);
    CHECK(census::field_data(3, 14, 3).d == 3);
    CHECK(census::field_data(4, 5, 17).q == 289);
    CHECK(census::field_data(4, 5, 7).d == 2);
  }

  TEST_CASE("error codes") {
    CHECK(code_of(3, 7, 7) == ErrorCode::BadReduction);
    CHECK(code_of(4, 5, 2) == ErrorCode::Inadmissible);
    CHECK(code_of(4, 5, 5) == ErrorCode::BadReduction);
    CHECK(code_of(3, 6, 7) == ErrorCode::InvalidArgument);
    CHECK(code_of(5, 7, 13) == ErrorCode::InvalidArgument);
    CHECK(code_of(3, 7, 15) == ErrorCode::InvalidArgument);
  }

  TEST_CASE("(3,7,13)") {
    const auto rec = census::map_census(3, 7, 13);
    REQUIRE(rec.classes.size() == 3);
    CHECK(rec.k == 1);
    CHECK(rec.l == 2);
    CHECK(rec.genus == 14);
    CHECK(rec.parity.applicable);
    CHECK(rec.parity.predicted == census::Parity::Even);
    CHECK(rec.parity.consistent);
    std::vector<std::uint64_t> s;
    for (const auto& c : rec.classes) s.push_back(c.s.prime_value());
    std::sort(s.begin(), s.end());
    CHECK(s == std::vector<std::uint64_t>{4, 6, 7});
  }

  TEST_CASE("classes share a degree dividing d") {
    for (unsigned n = 7; n <= 20; ++n) {
      for (std::uint64_t p : {2, 3, 5, 11, 13, 29, 31, 97, 101}) {
        try {
          const auto rec = census::map_census(3, n, p);
          for (const auto& c : rec.classes) {
            CHECK(c.e == rec.classes.front().e);
            CHECK(rec.field.d % c.e == 0);
          }
          CHECK(rec.k + rec.l == rec.classes.size());
        } catch (const Error& e) {
          CHECK(e.code() != ErrorCode::Internal);
        }
      }
    }
  }

  TEST_CASE("even n flags extra classes") {
    const auto rec = census::map_census(3, 8, 7);
    CHECK(rec.field.d == 2);
    CHECK(rec.class_count_flag);
  }

  TEST_CASE("matrix oracle") {
    const auto rec = census::map_census(3, 7, 43);
    for (std::size_t i = 0; i < rec.classes.size(); ++i) {
      for (auto strategy : {census::OracleStrategy::Enumerate, census::OracleStrategy::PreferDegenerate}) {
        const auto res = census::matrix_oracle(rec, i, strategy);
        CHECK(res.agrees);
        CHECK(res.witness.conjugation_ok);
        CHECK(census::det(res.witness.x).is_one());
      }
    }
  }

  TEST_CASE("projective equality") {
    const auto F = gf::FieldCtx::prime_field(7);
    auto e = [&](long long v) { return gf::FieldElem::from_int(F, v); };
    const census::Mat2 a{e(1), e(2), e(3), e(4)};
    const census::Mat2 b{e(-1), e(-2), e(-3), e(-4)};
    CHECK(census::projectively_equal(a, b));
    CHECK_FALSE(census::projectively_equal(a, census::Mat2{e(1), e(2), e(3), e(5)}));
    CHECK(census::det(a * b) == census::det(a) * census::det(b));
  }

  TEST_CASE("route equivalence") {
    for (unsigned n : {7u, 8u, 9u, 12u}) CHECK(census::route_equivalence(3, n, 97).equal);
    CHECK(census::route_equivalence(4, 5, 31).equal);
  }
}
