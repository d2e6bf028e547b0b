#include <gtest/gtest.h>

#include <map>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "qstrat/error.hpp"
#include "qstrat/rings/arith.hpp"
#include "qstrat/rings/factor.hpp"
#include "qstrat/rings/level.hpp"
#include "qstrat/rings/primes.hpp"

using namespace qstrat;

namespace {

std::vector<long> as_longs(const ZPoly& f) {
  std::vector<long> out;
  for (const auto& c : f) out.push_back(c.get_si());
  return out;
}

const PolyRing<IntegerRing> Z{IntegerRing{}};

}  // namespace

TEST(Cyclotomic, Examples) {
  EXPECT_EQ(as_longs(cyclotomic_poly(1)), (std::vector<long>{-1, 1}));
  EXPECT_EQ(as_longs(cyclotomic_poly(2)), (std::vector<long>{1, 1}));
  EXPECT_EQ(as_longs(cyclotomic_poly(4)), (std::vector<long>{1, 0, 1}));
  EXPECT_THROW(cyclotomic_poly(4097), BoundError);
  EXPECT_EQ(cyclotomic_poly(4096).size(), 2049u);
}

TEST(Cyclotomic, ProductOverDivisorsIsXdMinusOne) {
  for (unsigned d = 1; d <= 200; ++d) {
    ZPoly prod = Z.one();
    for (auto e : divisors(d)) prod = Z.mul(prod, cyclotomic_poly(static_cast<unsigned>(e)));
    EXPECT_EQ(prod, Z.sub(Z.monomial(1, d), Z.one())) << d;
    EXPECT_EQ(cyclotomic_poly(d).size(), euler_phi(d) + 1);
  }
}

TEST(Cyclotomic, MatchesDivisionOracle) {
  for (unsigned d = 1; d <= 120; ++d) {
    auto expected = oracle::cyclotomic(d);
    EXPECT_EQ(as_longs(cyclotomic_poly(d)), std::vector<long>(expected.begin(), expected.end())) << d;
  }
}

TEST(NumberTheory, Basics) {
  EXPECT_EQ(primes_up_to(20), (std::vector<unsigned>{2, 3, 5, 7, 11, 13, 17, 19}));
  EXPECT_EQ(euler_phi(12), 4u);
  EXPECT_EQ(mobius(30), -1);
  EXPECT_EQ(mobius(12), 0);
  EXPECT_EQ(multiplicative_order(7, 8), 2u);
  EXPECT_EQ(multiplicative_order(2, 5), 4u);
  EXPECT_THROW(multiplicative_order(2, 4), DomainError);
  EXPECT_EQ(prime_power(81), std::make_optional(std::make_pair(3u, 4u)));
  EXPECT_FALSE(prime_power(12));
}

TEST(PrimeSplitting, Examples) {
  EXPECT_EQ(prime_splitting(1, 3).count, 1u);
  auto s5 = prime_splitting(5, 2);
  EXPECT_EQ(s5.count, 1u);
  EXPECT_EQ(s5.residue_degrees, (std::vector<std::uint64_t>{4}));
  auto s8 = prime_splitting(8, 7);
  EXPECT_EQ(s8.count, 2u);
  EXPECT_EQ(s8.residue_degrees, (std::vector<std::uint64_t>{2, 2}));
  EXPECT_THROW(prime_splitting(6, 3), DomainError);
}

TEST(PrimeSplitting, AgreesWithBerlekampOracle) {
  for (unsigned d = 1; d <= 40; ++d) {
    auto phi = oracle::cyclotomic(d);
    for (unsigned q : primes_up_to(100)) {
      if (d % q == 0) continue;
      auto split = prime_splitting(d, q);
      EXPECT_EQ(split.count, oracle::berlekamp_factor_count(phi, q)) << d << " " << q;
      GaloisField F(q);
      auto factors = factor(F, reduce_mod(F, cyclotomic_poly(d)));
      ASSERT_EQ(factors.size(), split.count);
      for (const auto& f : factors) {
        EXPECT_EQ(f.multiplicity, 1u);
        EXPECT_EQ(static_cast<std::uint64_t>(f.poly.size() - 1), split.residue_degrees[0]);
      }
      EXPECT_TRUE(is_squarefree(F, reduce_mod(F, cyclotomic_poly(d))));
    }
  }
}

TEST(GaloisField, FourElements) {
  GaloisField F(4);
  EXPECT_EQ(F.characteristic(), 2u);
  EXPECT_EQ(F.modulus(), (std::vector<std::uint32_t>{1, 1, 1}));
  const auto a = F.generator();
  EXPECT_EQ(F.to_string(a), "a");
  EXPECT_EQ(F.mul(a, a), F.add(a, 1));
  EXPECT_EQ(F.to_string(F.mul(a, a)), "a^2");
  EXPECT_EQ(F.mul(a, F.mul(a, a)), 1u);
}

TEST(GaloisField, FieldAxioms) {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 8u, 9u, 16u, 25u, 27u}) {
    GaloisField F(q);
    for (std::uint32_t x = 0; x < q; ++x) {
      EXPECT_EQ(F.add(x, F.neg(x)), 0u);
      if (x) EXPECT_EQ(F.mul(x, F.inv(x)), 1u);
      EXPECT_EQ(F.pow(x, q), x);
      for (std::uint32_t y = 0; y < q; ++y) {
        EXPECT_EQ(F.mul(x, y), F.mul(y, x));
        for (std::uint32_t z = 0; z < q; z += 3) {
          EXPECT_EQ(F.mul(x, F.add(y, z)), F.add(F.mul(x, y), F.mul(x, z)));
          EXPECT_EQ(F.mul(F.mul(x, y), z), F.mul(x, F.mul(y, z)));
        }
      }
    }
    EXPECT_EQ(F.frobenius(F.add(3 % q, F.generator())), F.add(F.frobenius(3 % q), F.frobenius(F.generator())));
  }
  EXPECT_THROW(GaloisField(6), DomainError);
  EXPECT_THROW(GaloisField(1u << 17), BoundError);
}

TEST(Factor, ProductReconstructsInput) {
  std::mt19937_64 rng(7);
  for (std::uint32_t q : {2u, 3u, 4u, 7u, 9u}) {
    GaloisField F(q);
    PolyRing<GaloisField> R(F);
    for (int trial = 0; trial < 40; ++trial) {
      FqPoly f(1 + rng() % 12);
      for (auto& c : f) c = rng() % q;
      f.push_back(1);
      if (trial % 4 == 0) f = R.mul(f, R.mul(f, f));
      auto factors = factor(F, f);
      FqPoly prod = R.one();
      for (const auto& fac : factors) {
        EXPECT_TRUE(is_irreducible(F, fac.poly));
        EXPECT_TRUE(R.is_monic(fac.poly));
        prod = R.mul(prod, R.pow(fac.poly, fac.multiplicity));
      }
      EXPECT_EQ(prod, R.normalized(f));
    }
  }
}

TEST(Factor, IrreducibleCountsMatchNecklaceFormula) {
  for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
    GaloisField F(q);
    for (unsigned n = 1; n <= 5; ++n) {
      long long sum = 0;
      for (auto d : divisors(n)) {
        long long pw = 1;
        for (unsigned i = 0; i < n / d; ++i) pw *= q;
        sum += mobius(d) * pw;
      }
      EXPECT_EQ(static_cast<long long>(monic_irreducibles(F, n).size()), sum / n) << q << " " << n;
    }
  }
}

TEST(PSeries, Examples) {
  EXPECT_EQ(as_longs(p_series_mult(2)), (std::vector<long>{0, 2, 1}));
  EXPECT_EQ(as_longs(p_series_mult(3)), (std::vector<long>{0, 3, 3, 1}));
  EXPECT_EQ(as_longs(p_series_mult(5)), (std::vector<long>{0, 5, 10, 10, 5, 1}));
}

TEST(LevelPolynomial, Examples) {
  auto l2 = level_polynomial_P(2);
  PolyRing<CyclotomicField> R2(l2.field);
  EXPECT_EQ(l2.P, to_cyclotomic(l2.field, Z.from_ints({0, 2, 1})));
  EXPECT_EQ(R2.to_string(l2.P), "X^2 + 2*X");

  auto l3 = level_polynomial_P(3);
  EXPECT_EQ(l3.P, to_cyclotomic(l3.field, Z.from_ints({0, 3, 3, 1})));

  auto l0 = level_polynomial_P(3, 0);
  PolyRing<CyclotomicField> R3(l0.field);
  EXPECT_EQ(l0.P, R3.x());
  EXPECT_THROW(level_polynomial_P(17), BoundError);
  EXPECT_THROW(level_polynomial_P(4), DomainError);
}

TEST(Divides, Examples) {
  auto r = divides(Z, Z.x(), Z.sub(Z.pow(Z.from_ints({1, 1}), 2), Z.one()));
  EXPECT_TRUE(r.divides);
  EXPECT_EQ(as_longs(r.quotient), (std::vector<long>{2, 1}));

  auto l3 = level_polynomial_P(3);
  PolyRing<CyclotomicField> R(l3.field);
  auto d = divides(R, l3.P, to_cyclotomic(l3.field, l3.Q_poly));
  EXPECT_TRUE(d.divides);
  EXPECT_EQ(d.quotient, R.one());

  GaloisField F2(2);
  PolyRing<GaloisField> P2(F2);
  auto f = divides(P2, P2.from_ints({0, 0, 1}), P2.from_ints({0, 1, 0, 1}));
  EXPECT_FALSE(f.divides);
  EXPECT_EQ(f.remainder, P2.x());

  EXPECT_THROW(divides(Z, Z.from_ints({0, 2}), Z.x()), DomainError);
}

TEST(Separable, Examples) {
  PolyRing<RationalField> Q{RationalField{}};
  EXPECT_TRUE(is_separable(Q, Q.x()));
  for (unsigned p : {2u, 3u, 5u}) {
    GaloisField F(p);
    PolyRing<GaloisField> R(F);
    EXPECT_FALSE(is_separable(R, R.monomial(1, p)));
    QPoly series;
    for (const auto& c : p_series_mult(p)) series.push_back(mpq_class(c));
    EXPECT_TRUE(is_separable(Q, series));
  }
}

TEST(LevelPolynomial, MutualDivisibilityGivesEquality) {
  for (unsigned p : {2u, 3u, 5u, 7u}) {
    auto L = level_polynomial_P(p);
    PolyRing<CyclotomicField> R(L.field);
    auto Qc = to_cyclotomic(L.field, L.Q_poly);
    auto a = divides(R, L.P, Qc);
    auto b = divides(R, Qc, L.P);
    ASSERT_TRUE(a.divides && b.divides);
    EXPECT_EQ(a.quotient, R.one());
    EXPECT_EQ(L.P, Qc);
    EXPECT_EQ(PolyRing<CyclotomicField>::degree(L.P), static_cast<long>(p));
  }
}

TEST(Drinfeld, ReportAtThree) {
  auto r = drinfeld_check(3);
  EXPECT_TRUE(r.equal);
  EXPECT_TRUE(r.P_divides_Q);
  EXPECT_TRUE(r.Q_divides_P);
  EXPECT_EQ(r.quotient, "1");
  EXPECT_TRUE(r.separable_char0);
  EXPECT_FALSE(r.separable_mod_p);
  EXPECT_EQ(r.P_mod_p, "X^3");
}

TEST(CyclotomicField, ZetaAndInverses) {
  for (unsigned m : {1u, 2u, 3u, 4u, 5u, 8u, 12u}) {
    CyclotomicField K(m);
    PolyRing<CyclotomicField> R(K);
    EXPECT_EQ(K.mul(K.zeta(m - 1), K.zeta(1)), K.one());
    EXPECT_EQ(K.zeta(static_cast<long>(m)), K.one());
    EXPECT_TRUE(K.is_zero(R.eval(to_cyclotomic(K, cyclotomic_poly(m)), K.zeta())));
    auto x = K.add(K.zeta(), K.from_int(2));
    EXPECT_EQ(K.mul(x, K.inv(x)), K.one());
  }
  CyclotomicField K3(3);
  EXPECT_EQ(K3.to_string(K3.zeta(2)), "-z - 1");
}

TEST(CyclicSpectrumRing, TrivialGroupIsTruncatedSpecZ) {
  auto s = cyclic_spectrum_ring(1, 10);
  ASSERT_EQ(s.minimal.size(), 1u);
  ASSERT_EQ(s.maximal.size(), 4u);
  std::vector<unsigned> qs;
  for (const auto& m : s.maximal) qs.push_back(m.q);
  EXPECT_EQ(qs, (std::vector<unsigned>{2, 3, 5, 7}));
  EXPECT_EQ(s.containments.size(), 4u);
  EXPECT_TRUE(s.truncated);
}

TEST(CyclicSpectrumRing, OrderTwoGluedAtTwo) {
  auto s = cyclic_spectrum_ring(2, 7);
  ASSERT_EQ(s.minimal.size(), 2u);
  EXPECT_EQ(s.minimal[0].descriptor.text, "(x - 1)");
  EXPECT_EQ(s.minimal[1].descriptor.text, "(x + 1)");
  ASSERT_EQ(s.maximal.size(), 7u);
  EXPECT_EQ(s.maximal[0].descriptor.text, "(2, x + 1)");
  std::map<std::size_t, std::vector<std::size_t>> over;
  for (auto [i, j] : s.containments) over[j].push_back(i);
  EXPECT_EQ(over[0], (std::vector<std::size_t>{0, 1}));
  for (std::size_t j = 1; j < s.maximal.size(); ++j) EXPECT_EQ(over[j].size(), 1u);
}

TEST(CyclicSpectrumRing, OrderThreeAtThree) {
  auto s = cyclic_spectrum_ring(3, 7);
  ASSERT_EQ(s.minimal.size(), 2u);
  std::size_t at3 = 0;
  for (std::size_t j = 0; j < s.maximal.size(); ++j) {
    if (s.maximal[j].q != 3) continue;
    ++at3;
    EXPECT_EQ(s.maximal[j].descriptor.text, "(3, x + 2)");
    std::size_t contained = 0;
    for (auto [i, k] : s.containments) contained += k == j;
    EXPECT_EQ(contained, 2u);
  }
  EXPECT_EQ(at3, 1u);
}

TEST(CyclicSpectrumRing, Invariants) {
  for (unsigned n = 1; n <= 24; ++n) {
    auto s = cyclic_spectrum_ring(n, 50);
    for (std::size_t j = 0; j < s.maximal.size(); ++j) {
      bool any = false;
      for (auto [i, k] : s.containments) any |= k == j;
      EXPECT_TRUE(any);
    }
    for (std::size_t i = 0; i < s.minimal.size(); ++i) {
      const unsigned d = s.minimal[i].d;
      for (unsigned q : primes_up_to(50)) {
        if (n % q == 0) continue;
        std::size_t count = 0;
        for (auto [a, k] : s.containments) count += a == i && s.maximal[k].q == q;
        EXPECT_EQ(count, prime_splitting(d, q).count) << n << " " << d << " " << q;
      }
    }
  }
  EXPECT_THROW(cyclic_spectrum_ring(65, 10), BoundError);
  EXPECT_THROW(cyclic_spectrum_ring(4, 1001), BoundError);
}

TEST(ResidueLabel, Rendering) {
  GaloisField F(7);
  PolyRing<GaloisField> R(F);
  EXPECT_EQ(residue_label(7, R.from_ints({1, 1})), "F_7 via (7, x + 1)");
  EXPECT_EQ(residue_label(2, R.from_ints({1, 1, 1})), "F_{2^2} via (2, x^2 + x + 1)");
}
