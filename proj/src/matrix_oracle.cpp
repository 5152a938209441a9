#include <vector>

#include "macbeath/census.hpp"
#include "macbeath/error.hpp"

namespace macbeath::census {

using gf::FieldCtx;
using gf::FieldElem;
using gf::FpPoly;

Mat2 operator*(const Mat2& x, const Mat2& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

FieldElem det(const Mat2& x) { return x.a * x.d - x.b * x.c; }

bool projectively_equal(const Mat2& x, const Mat2& y) {
  const bool same = x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  const bool negated = x.a == -y.a && x.b == -y.b && x.c == -y.c && x.d == -y.d;
  return same || negated;
}

namespace {

constexpr std::uint64_t kMaxCandidates = 1 << 16;

FpPoly compose(const FpPoly& outer, const FpPoly& inner) {
  FpPoly acc(outer.prime(), {});
  for (int i = outer.degree(); i >= 0; --i) acc = acc * inner + FpPoly::constant(outer.prime(), outer.coeff(i));
  return acc;
}

// w inverts z and x by conjugation: w z = +-z^-1 w and w x = +-x^-1 w.
bool inverts(const Mat2& w, const Mat2& z, const Mat2& x) {
  const Mat2 z_inv{z.d, -z.b, -z.c, z.a};
  const Mat2 x_inv{x.d, -x.b, -x.c, x.a};
  return projectively_equal(w * z, z_inv * w) && projectively_equal(w * x, x_inv * w);
}

}  // namespace

OracleResult matrix_oracle(const CensusRecord& record, std::size_t class_index, OracleStrategy strategy) {
  if (record.m != 3) throw Error(ErrorCode::InvalidArgument, "matrix oracle supports m = 3 only");
  if (record.p == 2) throw Error(ErrorCode::InvalidArgument, "matrix oracle needs odd characteristic");
  if (class_index >= record.classes.size()) throw Error(ErrorCode::InvalidArgument, "class index out of range");
  const TraceClass& cls = record.classes[class_index];
  const std::uint64_t p = record.p;
  const unsigned d = record.field.d;

  // A field holding t with s = 3 - t^2: a factor of g(3 - y^2) of degree dividing d.
  const FpPoly inner(p, {3, 0, p - 1});
  const auto pieces = gf::factor(compose(cls.factor, inner));
  const FpPoly* h = nullptr;
  for (const auto& fac : pieces.factors) {
    if (d % static_cast<unsigned>(fac.poly.degree()) == 0) {
      h = &fac.poly;
      break;
    }
  }
  if (h == nullptr) throw Error(ErrorCode::Internal, "no trace t with 3 - t^2 = s inside F_q");
  const auto ctx = FieldCtx::make(*h, d);
  auto num = [&](long long v) { return FieldElem::from_int(ctx, v); };

  OracleWitness wit;
  wit.t = FieldElem::generator(ctx);
  const FieldElem& t = wit.t;
  wit.nonsingularity = num(3) - t * t;
  if (wit.nonsingularity.is_zero()) throw Error(ErrorCode::BadReduction, "t^2 = 3: the triple cannot generate");
  wit.z = {num(0), num(1), num(-1), num(0)};

  const FieldElem half = num(2).inverse();
  // Prime-field values first, then the rest of the working field (capped).
  const unsigned e = ctx->degree();
  const BigInt field_size = ctx->order();
  const std::uint64_t limit = field_size < kMaxCandidates ? static_cast<std::uint64_t>(field_size) : kMaxCandidates;
  auto element = [&](std::uint64_t i) {
    std::vector<std::uint64_t> digits(e);
    for (std::uint64_t k = 0, rest = i; k < e; ++k, rest /= p) digits[k] = rest % p;
    return FieldElem(ctx, FpPoly(p, std::move(digits)));
  };
  const bool degenerate_first = strategy == OracleStrategy::PreferDegenerate;

  for (std::uint64_t i = 0; i < limit + (degenerate_first ? 1 : 0); ++i) {
    FieldElem r = degenerate_first ? (i == 0 ? half : element(i - 1)) : element(i);
    if (degenerate_first && i > 0 && r == half) continue;
    // det x = 1 with v = 1 - r, u = s + t: s^2 + t s + (1 - r + r^2) = 0.
    const FieldElem disc = t * t - num(4) * (num(1) - r + r * r);
    const auto root = gf::sqrt_in_field(disc);
    if (root.status != gf::SqrtResult::Status::Root) continue;
    const FieldElem s = (*root.root - t) * half;
    const FieldElem u = s + t;
    const FieldElem v = num(1) - r;
    const Mat2 x{r, s, u, v};
    const Mat2 zx = wit.z * x;
    if (!det(x).is_one() || !(x.a + x.d).is_one() || !(zx.a + zx.d == t)) {
      throw Error(ErrorCode::Internal, "constructed x has the wrong invariants");
    }

    bool found = false;
    Mat2 w;
    int sign = 0;
    const bool degenerate = r == v;
    if (degenerate) {
      w = {num(1), num(0), num(0), num(-1)};
      found = inverts(w, wit.z, x);
    } else {
      for (int sg : {-1, 1}) {
        const FieldElem beta = r - v;
        const FieldElem alpha = sg == 1 ? s + u : -(s + u);
        const Mat2 cand{alpha, beta, beta, -alpha};
        if (det(cand).is_zero() || !inverts(cand, wit.z, x)) continue;
        w = cand;
        sign = sg;
        found = true;
        break;
      }
    }
    if (!found) throw Error(ErrorCode::Internal, "no involution inverting z and x");

    wit.x = x;
    wit.w = w;
    wit.r = r;
    wit.sign = sign;
    wit.degenerate = degenerate;
    wit.conjugation_ok = true;
    wit.chi_det_w = gf::chi(det(w));

    OracleResult out;
    out.verdict = wit.chi_det_w == 1 ? Regularity::Inner : Regularity::Outer;
    out.agrees = out.verdict == cls.regularity;
    out.witness = std::move(wit);
    return out;
  }
  throw Error(ErrorCode::Internal, "no r gives a solvable x");
}

}  // namespace macbeath::census
