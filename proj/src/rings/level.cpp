#include "qstrat/rings/level.hpp"

#include "qstrat/rings/arith.hpp"
#include "qstrat/rings/factor.hpp"

namespace qstrat {

ZPoly p_series_mult(unsigned p) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  PolyRing<IntegerRing> Z{IntegerRing{}};
  return Z.sub(Z.pow(Z.from_ints({1, 1}), p), Z.one());
}

CycPoly to_cyclotomic(const CyclotomicField& K, const ZPoly& f) {
  PolyRing<CyclotomicField> R(K);
  CycPoly out;
  for (const auto& c : f) out.push_back(K.from_rational(mpq_class(c)));
  return R.normalized(std::move(out));
}

LevelData level_polynomial_P(unsigned p, unsigned k) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  if (p > kMaxLevelPrime) throw BoundError("level polynomials are computed for p <= 13");
  CyclotomicField K(p);
  PolyRing<CyclotomicField> R(K);
  CycPoly P = R.x();
  if (k > 0) {
    P = R.one();
    for (unsigned j = 0; j < p; ++j) {
      auto root = K.sub(K.zeta(j), K.one());
      P = R.mul(P, CycPoly{K.neg(root), K.one()});
    }
  }
  return {p, k, K, std::move(P), p_series_mult(p)};
}

DrinfeldReport drinfeld_check(unsigned p) {
  LevelData L = level_polynomial_P(p, 1);
  PolyRing<CyclotomicField> R(L.field);
  CycPoly Q = to_cyclotomic(L.field, L.Q_poly);

  DrinfeldReport out;
  out.p = p;
  out.P = R.to_string(L.P);
  out.Q = R.to_string(Q);
  out.equal = L.P == Q;
  auto pq = divides(R, L.P, Q);
  auto qp = divides(R, Q, L.P);
  out.P_divides_Q = pq.divides;
  out.Q_divides_P = qp.divides;
  out.quotient = R.to_string(pq.quotient);
  out.separable_char0 = is_separable(R, L.P);

  GaloisField F(p);
  PolyRing<GaloisField> Fp(F);
  FqPoly reduced;
  for (const auto& c : L.P) reduced.push_back(F.from_int(L.field.reduce_at_p(c, p)));
  reduced = Fp.normalized(std::move(reduced));
  out.P_mod_p = Fp.to_string(reduced);
  out.separable_mod_p = is_separable(Fp, reduced);
  return out;
}

}  // namespace qstrat
