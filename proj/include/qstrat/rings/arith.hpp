#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "qstrat/rings/fields.hpp"

namespace qstrat {

bool is_prime(std::uint64_t n);
std::vector<unsigned> primes_up_to(unsigned bound);
/// Prime factorization as (prime, exponent) pairs, ascending.
std::vector<std::pair<std::uint64_t, unsigned>> factor_integer(std::uint64_t n);
std::vector<std::uint64_t> divisors(std::uint64_t n);
std::uint64_t euler_phi(std::uint64_t n);
int mobius(std::uint64_t n);
/// Order of q in (Z/d)^*; 1 when d == 1. Requires gcd(q, d) == 1.
std::uint64_t multiplicative_order(std::uint64_t q, std::uint64_t d);
/// (p, f) with q = p^f and p prime, if q is a prime power.
std::optional<std::pair<std::uint32_t, unsigned>> prime_power(std::uint64_t q);

/// Largest conductor accepted by cyclotomic_poly.
inline constexpr unsigned kMaxCyclotomicIndex = 4096;

/// Phi_d over Z.
ZPoly cyclotomic_poly(unsigned d);
/// Reduction of an integer polynomial into F_q[X].
FqPoly reduce_mod(const GaloisField& F, const ZPoly& f);

struct SplittingType {
  std::uint64_t count = 0;
  std::vector<std::uint64_t> residue_degrees;
};

/// Splitting of a rational prime q not dividing d in Z[zeta_d].
SplittingType prime_splitting(unsigned d, unsigned q);

}  // namespace qstrat
