#pragma once

#include <string>

#include "qstrat/rings/fields.hpp"

namespace qstrat {

/// (1 + X)^p - 1, the p-series of the multiplicative formal group.
ZPoly p_series_mult(unsigned p);

/// Torsion and p-series polynomials of the multiplicative formal group for
/// A = C_{p^k}, over Q(zeta_p).
struct LevelData {
  unsigned p = 0;
  unsigned k = 0;
  CyclotomicField field;
  /// prod over the p-torsion points a of (X - alpha(a)), alpha(a) = zeta_p^j - 1.
  CycPoly P;
  ZPoly Q_poly;
};

inline constexpr unsigned kMaxLevelPrime = 13;

/// k = 0 is the trivial group, where P = X.
LevelData level_polynomial_P(unsigned p, unsigned k = 1);

template <class R>
struct DivisionCheck {
  bool divides = false;
  typename PolyRing<R>::Poly quotient;
  typename PolyRing<R>::Poly remainder;
};

/// Exact division of b by the monic polynomial a.
template <class R>
DivisionCheck<R> divides(const PolyRing<R>& ring, const typename PolyRing<R>::Poly& a,
                         const typename PolyRing<R>::Poly& b) {
  if (!ring.is_monic(a)) throw DomainError("divides: divisor must be monic");
  auto [q, r] = ring.divmod(b, a);
  return {r.empty(), std::move(q), std::move(r)};
}

/// gcd(f, f') == 1
template <class R>
bool is_separable(const PolyRing<R>& ring, const typename PolyRing<R>::Poly& f)
  requires R::is_field
{
  if (f.empty()) return false;
  auto g = ring.gcd(f, ring.derivative(f));
  return g.size() == 1;
}

CycPoly to_cyclotomic(const CyclotomicField& K, const ZPoly& f);

/// Summary of the P | Q checks at one prime.
struct DrinfeldReport {
  unsigned p = 0;
  std::string P, Q;
  bool equal = false;
  bool P_divides_Q = false;
  bool Q_divides_P = false;
  std::string quotient;
  bool separable_char0 = false;
  bool separable_mod_p = false;
  std::string P_mod_p;
};

DrinfeldReport drinfeld_check(unsigned p);

}  // namespace qstrat
