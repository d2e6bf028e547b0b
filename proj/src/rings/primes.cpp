#include "qstrat/rings/primes.hpp"

#include <algorithm>
#include <numeric>

#include "qstrat/rings/arith.hpp"
#include "qstrat/rings/factor.hpp"

namespace qstrat {

std::string to_string(PrimeDescriptor::Ring ring) {
  switch (ring) {
    case PrimeDescriptor::Ring::integers: return "Z";
    case PrimeDescriptor::Ring::p_adic_integers: return "Z_p";
    case PrimeDescriptor::Ring::cyclotomic: return "Z[zeta_d,1/d]";
    case PrimeDescriptor::Ring::cyclic_group_ring: return "Z[x]/(x^n-1)";
    case PrimeDescriptor::Ring::homogeneous_fq: return "F_q[x,y]-homogeneous";
    case PrimeDescriptor::Ring::homogeneous_fp_t: return "Z/p[t]-homogeneous";
    case PrimeDescriptor::Ring::residue_field: return "field";
  }
  return "?";
}

std::string to_string(PrimeDescriptor::Kind kind) {
  switch (kind) {
    case PrimeDescriptor::Kind::generic: return "generic";
    case PrimeDescriptor::Kind::closed: return "closed";
    case PrimeDescriptor::Kind::height_one: return "height-one";
  }
  return "?";
}

PrimeDescriptor integer_prime(std::uint32_t q) {
  PrimeDescriptor d;
  d.ring = PrimeDescriptor::Ring::integers;
  d.kind = q == 0 ? PrimeDescriptor::Kind::generic : PrimeDescriptor::Kind::closed;
  d.q = q;
  if (q) d.generator = {static_cast<std::int64_t>(q)};
  d.text = "(" + std::to_string(q) + ")";
  return d;
}

std::vector<std::int64_t> poly_codes(const FqPoly& f) { return {f.begin(), f.end()}; }

std::string residue_label(unsigned q, const FqPoly& g) {
  GaloisField F(q);
  PolyRing<GaloisField> R(F);
  const long f = PolyRing<GaloisField>::degree(g);
  std::string field = f == 1 ? "F_" + std::to_string(q)
                             : "F_{" + std::to_string(q) + "^" + std::to_string(f) + "}";
  return field + " via (" + std::to_string(q) + ", " + R.to_string(g, "x") + ")";
}

CyclicRingSpectrum cyclic_spectrum_ring(unsigned n, unsigned prime_bound) {
  if (n == 0) throw DomainError("group ring degree must be positive");
  if (n > kMaxGroupRingDegree) throw BoundError("group ring degree exceeds 64");
  if (prime_bound > kMaxPrimeBound) throw BoundError("prime bound exceeds 1000");

  CyclicRingSpectrum out;
  out.n = n;
  out.prime_bound = prime_bound;
  PolyRing<IntegerRing> Z{IntegerRing{}};

  std::vector<ZPoly> phis;
  for (auto d : divisors(n)) {
    ZPoly phi = cyclotomic_poly(static_cast<unsigned>(d));
    PrimeDescriptor desc;
    desc.ring = PrimeDescriptor::Ring::cyclic_group_ring;
    desc.kind = PrimeDescriptor::Kind::generic;
    desc.parameter = n;
    for (const auto& c : phi) desc.generator.push_back(c.get_si());
    desc.text = "(" + Z.to_string(phi, "x") + ")";
    out.minimal.push_back({static_cast<unsigned>(d), std::move(desc)});
    phis.push_back(std::move(phi));
  }

  for (unsigned q : primes_up_to(prime_bound)) {
    GaloisField F(q);
    PolyRing<GaloisField> R(F);
    std::vector<FqPoly> phi_mod;
    for (const auto& phi : phis) phi_mod.push_back(reduce_mod(F, phi));
    FqPoly xn = R.sub(R.monomial(1, n), R.one());
    for (const auto& fac : factor(F, xn)) {
      CyclicRingSpectrum::Maximal m;
      m.q = q;
      m.g = fac.poly;
      const std::size_t index = out.maximal.size();
      for (std::size_t i = 0; i < phis.size(); ++i) {
        if (!R.rem(phi_mod[i], m.g).empty()) continue;
        out.containments.emplace_back(i, index);
        if (std::gcd(out.minimal[i].d, q) == 1) m.root_order = out.minimal[i].d;
      }
      m.descriptor.ring = PrimeDescriptor::Ring::cyclic_group_ring;
      m.descriptor.kind = PrimeDescriptor::Kind::closed;
      m.descriptor.parameter = n;
      m.descriptor.q = q;
      m.descriptor.generator = poly_codes(m.g);
      m.descriptor.text = "(" + std::to_string(q) + ", " + R.to_string(m.g, "x") + ")";
      out.maximal.push_back(std::move(m));
    }
  }
  return out;
}

}  // namespace qstrat
