#include <random>

#include "macbeath/error.hpp"
#include "macbeath/gf.hpp"
#include "macbeath/numkit.hpp"

namespace macbeath::gf {

std::shared_ptr<const FieldCtx> FieldCtx::make(const FpPoly& modulus, unsigned ambient_d) {
  if (modulus.degree() < 1) throw Error(ErrorCode::InvalidArgument, "field modulus must have degree >= 1");
  if (!numkit::is_prime(modulus.prime())) throw Error(ErrorCode::InvalidArgument, "field characteristic must be prime");
  FpPoly g = modulus.monic();
  const auto e = static_cast<unsigned>(g.degree());
  if (ambient_d == 0 || ambient_d % e != 0) {
    throw Error(ErrorCode::InvalidArgument, "ambient degree " + std::to_string(ambient_d) +
                                                " is not a multiple of the field degree " + std::to_string(e));
  }
  if (!is_irreducible(g)) {
    throw Error(ErrorCode::InvalidArgument, "field modulus " + g.to_string() + " is reducible mod " +
                                                std::to_string(g.prime()));
  }
  return std::shared_ptr<const FieldCtx>(new FieldCtx(std::move(g), ambient_d));
}

std::shared_ptr<const FieldCtx> FieldCtx::prime_field(std::uint64_t p, unsigned ambient_d) {
  return make(FpPoly::x(p), ambient_d);
}

BigInt FieldCtx::order() const { return numkit::pow_big(p(), degree()); }

FieldElem::FieldElem(FieldRef ctx, FpPoly residue) : ctx_(std::move(ctx)), residue_(std::move(residue)) {
  if (residue_.prime() != ctx_->p()) throw Error(ErrorCode::InvalidArgument, "residue over the wrong prime");
  if (residue_.degree() >= static_cast<int>(ctx_->degree())) residue_ = residue_ % ctx_->modulus();
}

FieldElem FieldElem::from_int(FieldRef ctx, long long v) {
  const auto p = static_cast<long long>(ctx->p());
  long long r = v % p;
  if (r < 0) r += p;
  const auto p_u = ctx->p();
  return FieldElem(std::move(ctx), FpPoly::constant(p_u, static_cast<std::uint64_t>(r)));
}

FieldElem FieldElem::generator(FieldRef ctx) {
  const auto p = ctx->p();
  return FieldElem(std::move(ctx), FpPoly::x(p));
}

std::uint64_t FieldElem::prime_value() const {
  if (!in_prime_field()) throw Error(ErrorCode::InvalidArgument, "element is not in the prime field");
  return residue_.coeff(0);
}

namespace {

void require_same_ctx(const FieldElem& a, const FieldElem& b) {
  if (a.ctx() != b.ctx() && !(a.ctx()->modulus() == b.ctx()->modulus())) {
    throw Error(ErrorCode::InvalidArgument, "field elements from different contexts");
  }
}

}  // namespace

FieldElem FieldElem::operator-() const { return FieldElem(ctx_, FpPoly(ctx_->p(), {}) - residue_); }

FieldElem operator+(const FieldElem& a, const FieldElem& b) {
  require_same_ctx(a, b);
  return FieldElem(a.ctx_, a.residue_ + b.residue_);
}

FieldElem operator-(const FieldElem& a, const FieldElem& b) {
  require_same_ctx(a, b);
  return FieldElem(a.ctx_, a.residue_ - b.residue_);
}

FieldElem operator*(const FieldElem& a, const FieldElem& b) {
  require_same_ctx(a, b);
  return FieldElem(a.ctx_, mulmod(a.residue_, b.residue_, a.ctx_->modulus()));
}

bool operator==(const FieldElem& a, const FieldElem& b) {
  require_same_ctx(a, b);
  return a.residue_ == b.residue_;
}

FieldElem FieldElem::inverse() const {
  if (is_zero()) throw Error(ErrorCode::InvalidArgument, "inverse of zero field element");
  // Extended Euclid on (residue, modulus).
  const std::uint64_t p = ctx_->p();
  FpPoly r0 = ctx_->modulus(), r1 = residue_;
  FpPoly s0(p, {}), s1 = FpPoly::constant(p, 1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    FpPoly s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  // r0 is a nonzero constant since the modulus is irreducible.
  return FieldElem(ctx_, s0 * inv_mod(r0.coeff(0), p));
}

FieldElem FieldElem::pow(const BigInt& exp) const {
  if (exp < 0) return inverse().pow(BigInt(-exp));
  return FieldElem(ctx_, powmod(residue_, exp, ctx_->modulus()));
}

FieldElem FieldElem::pow(std::uint64_t exp) const { return FieldElem(ctx_, powmod(residue_, exp, ctx_->modulus())); }

FieldElem FieldElem::frobenius() const { return pow(ctx_->p()); }

std::uint64_t FieldElem::norm() const {
  FieldElem acc = FieldElem::from_int(ctx_, 1);
  FieldElem conj = *this;
  for (unsigned i = 0; i < ctx_->degree(); ++i) {
    acc = acc * conj;
    conj = conj.frobenius();
  }
  if (!acc.in_prime_field()) throw Error(ErrorCode::Internal, "norm left the prime field");
  return acc.is_zero() ? 0 : acc.prime_value();
}

std::string FieldElem::to_string() const {
  if (in_prime_field()) {
    const auto b = residue_.balanced();
    return b.empty() ? "0" : std::to_string(b[0]);
  }
  return residue_.to_string('x');
}

int chi(const FieldElem& a) {
  if (a.is_zero()) return 0;
  const auto& ctx = *a.ctx();
  if (ctx.p() == 2) return 1;
  // Every element of F_{p^e} is a square in F_{p^{ke}} for even k; for odd k
  // the character restricts to the subfield character, which is the Legendre
  // symbol of the norm.
  if ((ctx.ambient_degree() / ctx.degree()) % 2 == 0) return 1;
  return legendre(a.norm(), ctx.p());
}

namespace {

FieldElem find_nonresidue(const FieldRef& ctx) {
  // Own-field character (ambient parity ignored).
  const auto own = FieldCtx::make(ctx->modulus(), ctx->degree());
  std::mt19937_64 rng(ctx->p() * 0x9E3779B97F4A7C15ull + ctx->degree());
  for (int attempt = 0; attempt < 100000; ++attempt) {
    std::vector<std::uint64_t> c(ctx->degree());
    for (auto& v : c) v = rng() % ctx->p();
    FieldElem cand(own, FpPoly(ctx->p(), std::move(c)));
    if (chi(cand) == -1) return FieldElem(ctx, cand.residue());
  }
  throw Error(ErrorCode::Internal, "no quadratic non-residue found");
}

}  // namespace

SqrtResult sqrt_in_field(const FieldElem& a) {
  const auto& ctx = a.ctx();
  SqrtResult out;
  if (a.is_zero()) {
    out.status = SqrtResult::Status::Root;
    out.root = a;
    return out;
  }
  const BigInt q = ctx->order();
  if (ctx->p() == 2) {
    out.status = SqrtResult::Status::Root;
    out.root = a.pow(BigInt(q / 2));
    return out;
  }
  const FieldElem own_a(FieldCtx::make(ctx->modulus(), ctx->degree()), a.residue());
  if (chi(own_a) == -1) {
    out.status = chi(a) == 1 ? SqrtResult::Status::AmbientOnly : SqrtResult::Status::NonSquare;
    return out;
  }
  // Tonelli-Shanks in F_q.
  BigInt odd = q - 1;
  unsigned s = 0;
  while (odd % 2 == 0) {
    odd /= 2;
    ++s;
  }
  FieldElem c = find_nonresidue(ctx).pow(odd);
  FieldElem x = a.pow(BigInt((odd + 1) / 2));
  FieldElem t = a.pow(odd);
  unsigned m = s;
  while (!t.is_one()) {
    unsigned i = 0;
    FieldElem t2 = t;
    while (!t2.is_one()) {
      t2 = t2 * t2;
      ++i;
      if (i == m) throw Error(ErrorCode::Internal, "Tonelli-Shanks failed to converge");
    }
    FieldElem b = c;
    for (unsigned j = 0; j + i + 1 < m; ++j) b = b * b;
    m = i;
    c = b * b;
    t = t * c;
    x = x * b;
  }
  out.status = SqrtResult::Status::Root;
  out.root = x;
  return out;
}

FpPoly minimal_polynomial(const FieldElem& a) {
  const auto& ctx = a.ctx();
  const std::uint64_t p = ctx->p();
  std::vector<FieldElem> conj{a};
  for (FieldElem c = a.frobenius(); !(c == a); c = c.frobenius()) conj.push_back(c);
  // prod (X - c) with coefficients in the field.
  std::vector<FieldElem> poly{FieldElem::from_int(ctx, 1)};
  for (const auto& c : conj) {
    std::vector<FieldElem> next(poly.size() + 1, FieldElem::from_int(ctx, 0));
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] = next[i + 1] + poly[i];
      next[i] = next[i] - poly[i] * c;
    }
    poly = std::move(next);
  }
  std::vector<std::uint64_t> coeffs;
  for (const auto& c : poly) {
    if (!c.in_prime_field()) throw Error(ErrorCode::Internal, "minimal polynomial not defined over F_p");
    coeffs.push_back(c.is_zero() ? 0 : c.prime_value());
  }
  return FpPoly(p, std::move(coeffs));
}

}  // namespace macbeath::gf
