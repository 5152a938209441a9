#include "macbeath/census.hpp"

#include <algorithm>
#include <numeric>

#include "macbeath/error.hpp"
#include "macbeath/intpoly.hpp"
#include "macbeath/numkit.hpp"

namespace macbeath::census {

using gf::FieldCtx;
using gf::FieldElem;
using gf::FpPoly;

std::string_view to_string(Regularity r) { return r == Regularity::Inner ? "inner" : "outer"; }

std::string_view to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

namespace {

void require_prime(std::uint64_t p) {
  if (!numkit::is_prime(p)) throw Error(ErrorCode::InvalidArgument, std::to_string(p) + " is not prime");
}

std::string triple(unsigned m, unsigned n, std::uint64_t p) {
  return "(" + std::to_string(m) + ", " + std::to_string(n) + ", " + std::to_string(p) + ")";
}

}  // namespace

FieldData field_data(unsigned m, unsigned n, std::uint64_t p) {
  intpoly::s_shift(m);
  if (!numkit::is_hyperbolic(m, n)) {
    throw Error(ErrorCode::InvalidArgument,
                "type {" + std::to_string(m) + "," + std::to_string(n) + "} is not hyperbolic");
  }
  require_prime(p);
  FieldData fd;
  fd.m = m;
  fd.n = n;
  fd.p = p;
  fd.N_n = n % 2 == 1 ? n : 2ull * n;
  fd.N_m = m == 3 ? 3 : (m == 4 ? 8 : 12);
  if (fd.N_n % p == 0) {
    throw Error(ErrorCode::Inadmissible, triple(m, n, p) + ": p divides N_n = " + std::to_string(fd.N_n));
  }
  if ((m == 4 && p == 2) || (m == 6 && (p == 2 || p == 3))) {
    throw Error(ErrorCode::Inadmissible, triple(m, n, p) + ": no elements of order " + std::to_string(m) +
                                             " in characteristic " + std::to_string(p));
  }
  const unsigned dn = numkit::mult_order_signed(p, fd.N_n);
  const unsigned dm = (m == 3 && p == 3) ? 1 : numkit::mult_order_signed(p, fd.N_m);
  fd.d = std::lcm(dn, dm);
  fd.q = numkit::pow_big(p, fd.d);
  return fd;
}

CensusRecord map_census(unsigned m, unsigned n, std::uint64_t p) {
  const intpoly::IntPoly f1 = intpoly::s_polynomial(m, n);
  require_prime(p);
  const gf::FactorList factors = gf::reduce_and_factor(f1, p);
  if (!factors.squarefree) {
    throw Error(ErrorCode::BadReduction,
                triple(m, n, p) + ": f1 = " + f1.to_string('s') + " is not squarefree mod " + std::to_string(p));
  }

  CensusRecord rec;
  rec.m = m;
  rec.n = n;
  rec.p = p;
  rec.field = field_data(m, n, p);
  rec.genus = numkit::genus(m, n, rec.field.q);
  const unsigned d = rec.field.d;
  const long long t_square_shift = intpoly::s_shift(m) + 2;

  for (const auto& fac : factors.factors) {
    const auto e = static_cast<unsigned>(fac.poly.degree());
    if (e == 1 && fac.poly.coeff(0) == 0) {
      throw Error(ErrorCode::BadReduction, triple(m, n, p) + ": s = 0 is a root of f1 mod p");
    }
    if (d % e != 0) {
      throw Error(ErrorCode::Internal, triple(m, n, p) + ": factor degree " + std::to_string(e) +
                                           " does not divide d = " + std::to_string(d));
    }
    TraceClass tc;
    tc.factor = fac.poly;
    tc.e = e;
    const auto ctx = FieldCtx::make(fac.poly, d);
    tc.s = FieldElem::generator(ctx);
    tc.chi = gf::chi(tc.s);
    tc.regularity = tc.chi == 1 ? Regularity::Inner : Regularity::Outer;
    const auto root = gf::sqrt_in_field(FieldElem::from_int(ctx, t_square_shift) - tc.s);
    if (root.status == gf::SqrtResult::Status::Root) tc.t = root.root;
    if (tc.regularity == Regularity::Inner) {
      ++rec.k;
    } else {
      ++rec.l;
    }
    rec.classes.push_back(std::move(tc));
  }

  const unsigned e0 = rec.classes.front().e;
  for (const auto& c : rec.classes) {
    if (c.e != e0) throw Error(ErrorCode::Internal, triple(m, n, p) + ": factors of f1 have unequal degrees");
  }
  rec.class_count_flag = e0 != d;

  rec.parity = parity_verdict(rec);
  if (rec.parity.applicable && !(rec.parity.consistent && rec.parity.shortcut_agrees)) {
    throw Error(ErrorCode::Internal, triple(m, n, p) + ": parity of l contradicts chi(Psi_n(1))");
  }
  return rec;
}

namespace {

// chi(b_e) from the residue of p mod 8, for odd e and q = p.
int chi_b_rule(unsigned e, std::uint64_t p) {
  switch (e % 12) {
    case 7:
    case 11:
      return 1;
    case 1:
    case 5:
      return p % 4 == 1 ? 1 : -1;
    case 9:
      return (p % 8 == 1 || p % 8 == 7) ? 1 : -1;
    case 3:
      return (p % 8 == 1 || p % 8 == 3) ? 1 : -1;
    default:
      throw Error(ErrorCode::InvalidArgument, "chi_b_rule requires odd e");
  }
}

}  // namespace

ParityVerdict parity_verdict(const CensusRecord& record) {
  ParityVerdict v;
  v.observed = record.l % 2 == 0 ? Parity::Even : Parity::Odd;
  if (record.m != 3 || record.field.d % 2 == 0) return v;

  const std::uint64_t p = record.p;
  const BigInt value = intpoly::psi(record.n).eval(BigInt(1));
  BigInt r = value % p;
  if (r < 0) r += p;
  const auto ctx = FieldCtx::prime_field(p, record.field.d);
  const int c = gf::chi(FieldElem(ctx, FpPoly::constant(p, static_cast<std::uint64_t>(r))));
  if (c == 0) return v;

  v.applicable = true;
  v.predicted = c == 1 ? Parity::Even : Parity::Odd;
  v.consistent = v.predicted == v.observed;

  if (record.n % 2 == 1 && record.field.d == 1 && p != 2) {
    const auto tables = numkit::arith_tables(record.n);
    int product = 1;
    for (auto e : tables.divisors) {
      if (numkit::mobius(record.n / e) != 0) product *= chi_b_rule(static_cast<unsigned>(e), p);
    }
    v.shortcut_checked = true;
    v.shortcut_agrees = product == c;
  }
  return v;
}

CpsValue cps_discriminant(const FieldElem& a, const FieldElem& b, const FieldElem& c) {
  if (!(a.ctx()->modulus() == b.ctx()->modulus()) || !(a.ctx()->modulus() == c.ctx()->modulus()) ||
      a.ctx()->ambient_degree() != b.ctx()->ambient_degree() ||
      a.ctx()->ambient_degree() != c.ctx()->ambient_degree()) {
    throw Error(ErrorCode::InvalidArgument, "cps_discriminant: arguments from different fields");
  }
  CpsValue out;
  out.value = FieldElem::from_int(a.ctx(), 4) + a * b * c - a * a - b * b - c * c;
  out.chi = gf::chi(out.value);
  return out;
}

RouteComparison route_equivalence(unsigned m, unsigned n, std::uint64_t p) {
  const intpoly::IntPoly f1 = intpoly::s_polynomial(m, n);
  require_prime(p);
  const std::uint64_t N = n % 2 == 1 ? n : 2ull * n;
  if (N % p == 0) throw Error(ErrorCode::Inadmissible, triple(m, n, p) + ": p divides N_n");
  const auto f1_factors = gf::reduce_and_factor(f1, p);
  const auto psi_factors = gf::reduce_and_factor(intpoly::psi(static_cast<unsigned>(N)), p);
  if (!f1_factors.squarefree || !psi_factors.squarefree) {
    throw Error(ErrorCode::BadReduction, triple(m, n, p) + ": bad reduction for the route comparison");
  }

  const long long shift = intpoly::s_shift(m) + 2;
  std::vector<std::pair<FpPoly, unsigned>> hits;
  for (const auto& h : psi_factors.factors) {
    const auto ctx = FieldCtx::make(h.poly, static_cast<unsigned>(h.poly.degree()));
    const FieldElem t = FieldElem::generator(ctx);
    const FpPoly g = gf::minimal_polynomial(FieldElem::from_int(ctx, shift) - t * t);
    auto it = std::find_if(hits.begin(), hits.end(), [&](const auto& e) { return e.first == g; });
    if (it == hits.end()) {
      hits.emplace_back(g, 0);
      it = hits.end() - 1;
    }
    it->second += static_cast<unsigned>(h.poly.degree());
  }

  RouteComparison out;
  bool well_formed = true;
  const unsigned pairing = n % 2 == 0 ? 2 : 1;
  for (auto& [g, count] : hits) {
    const auto deg = static_cast<unsigned>(g.degree());
    if (count % (deg * pairing) != 0) well_formed = false;
    out.from_traces.emplace_back(g, count / (deg * pairing));
  }
  for (const auto& fac : f1_factors.factors) out.from_f1.emplace_back(fac.poly, fac.multiplicity);
  auto by_factor = [](const auto& a, const auto& b) { return gf::canonical_less(a.first, b.first); };
  std::sort(out.from_traces.begin(), out.from_traces.end(), by_factor);
  std::sort(out.from_f1.begin(), out.from_f1.end(), by_factor);
  out.equal = well_formed && out.from_traces == out.from_f1;
  return out;
}

}  // namespace macbeath::census
