#include "qstrat/rings/arith.hpp"

#include <algorithm>
#include <numeric>

#include "qstrat/rings/factor.hpp"

namespace qstrat {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<unsigned> primes_up_to(unsigned bound) {
  std::vector<bool> composite(bound + 1, false);
  std::vector<unsigned> out;
  for (unsigned i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = static_cast<std::uint64_t>(i) * i; j <= bound; j += i) composite[j] = true;
  }
  return out;
}

std::vector<std::pair<std::uint64_t, unsigned>> factor_integer(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    unsigned e = 0;
    while (n % d == 0) n /= d, ++e;
    out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out{1};
  for (auto [p, e] : factor_integer(n)) {
    const std::size_t base = out.size();
    std::uint64_t pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t out = n;
  for (auto [p, e] : factor_integer(n)) out = out / p * (p - 1);
  return out;
}

int mobius(std::uint64_t n) {
  int out = 1;
  for (auto [p, e] : factor_integer(n)) {
    if (e > 1) return 0;
    out = -out;
  }
  return out;
}

std::uint64_t multiplicative_order(std::uint64_t q, std::uint64_t d) {
  if (std::gcd(q, d) != 1) throw DomainError("multiplicative order: arguments not coprime");
  if (d == 1) return 1;
  std::uint64_t x = q % d, k = 1;
  while (x != 1) x = x * q % d, ++k;
  return k;
}

std::optional<std::pair<std::uint32_t, unsigned>> prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  auto f = factor_integer(q);
  if (f.size() != 1) return std::nullopt;
  return std::make_pair(static_cast<std::uint32_t>(f[0].first), f[0].second);
}

ZPoly cyclotomic_poly(unsigned d) {
  if (d == 0) throw DomainError("cyclotomic index must be positive");
  if (d > kMaxCyclotomicIndex) throw BoundError("cyclotomic index exceeds " + std::to_string(kMaxCyclotomicIndex));
  // Phi_d = prod_{e | d} (X^e - 1)^mu(d/e): multiply by the numerators, then
  // divide exactly by the denominators, both sparse.
  ZPoly f{1};
  std::vector<std::uint64_t> denominators;
  for (auto e : divisors(d)) {
    int mu = mobius(d / e);
    if (mu == 1) {
      ZPoly g(f.size() + e, 0);
      for (std::size_t i = 0; i < f.size(); ++i) g[i + e] += f[i], g[i] -= f[i];
      f = std::move(g);
    } else if (mu == -1) {
      denominators.push_back(e);
    }
  }
  for (auto e : denominators) {
    // f = (X^e - 1) * h  =>  h_i = h_{i-e} - f_i, solved from the bottom.
    ZPoly h(f.size() - e, 0);
    for (std::size_t i = 0; i < h.size(); ++i) h[i] = (i >= e ? h[i - e] : mpz_class(0)) - f[i];
    f = std::move(h);
  }
  return f;
}

FqPoly reduce_mod(const GaloisField& F, const ZPoly& f) {
  PolyRing<GaloisField> R(F);
  FqPoly out;
  const mpz_class p = F.characteristic();
  for (const auto& c : f) {
    mpz_class r = c % p;
    if (r < 0) r += p;
    out.push_back(static_cast<GaloisField::Elem>(r.get_ui()));
  }
  return R.normalized(std::move(out));
}

SplittingType prime_splitting(unsigned d, unsigned q) {
  if (!is_prime(q)) throw DomainError(std::to_string(q) + " is not prime");
  if (std::gcd(d, q) != 1) throw DomainError("prime " + std::to_string(q) + " divides " + std::to_string(d));
  std::uint64_t f = multiplicative_order(q, d);
  SplittingType out;
  out.count = euler_phi(d) / f;
  out.residue_degrees.assign(out.count, f);
  return out;
}

}  // namespace qstrat
