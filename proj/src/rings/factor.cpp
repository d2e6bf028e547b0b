#include "qstrat/rings/factor.hpp"

#include <algorithm>
#include <random>

#include "qstrat/rings/arith.hpp"

namespace qstrat {

namespace {

using Ring = PolyRing<GaloisField>;

// Coefficientwise inverse Frobenius of a polynomial in X^p.
FqPoly pth_root(const GaloisField& F, const FqPoly& f) {
  const std::uint32_t p = F.characteristic();
  const std::uint64_t root = static_cast<std::uint64_t>(F.size()) / p;  // a -> a^(q/p)
  FqPoly out;
  for (std::size_t i = 0; i < f.size(); i += p) out.push_back(F.pow(f[i], root));
  return out;
}

void squarefree_parts(const Ring& R, const FqPoly& f, unsigned mult, std::vector<Factor>& out) {
  const auto& F = R.coefficients();
  if (Ring::degree(f) < 1) return;
  FqPoly d = R.derivative(f);
  if (d.empty()) {
    squarefree_parts(R, pth_root(F, f), mult * F.characteristic(), out);
    return;
  }
  FqPoly c = R.gcd(f, d);
  FqPoly w = R.quo(f, c);
  unsigned i = 1;
  while (Ring::degree(w) > 0) {
    FqPoly y = R.gcd(w, c);
    FqPoly part = R.quo(w, y);
    if (Ring::degree(part) > 0) out.push_back({part, i * mult});
    w = std::move(y);
    c = R.quo(c, w);
    ++i;
  }
  if (Ring::degree(c) > 0) squarefree_parts(R, pth_root(F, c), mult * F.characteristic(), out);
}

std::vector<std::pair<FqPoly, unsigned>> distinct_degree(const Ring& R, FqPoly f) {
  std::vector<std::pair<FqPoly, unsigned>> out;
  const mpz_class q = R.coefficients().size();
  FqPoly h = R.x();
  for (long i = 1; 2 * i <= Ring::degree(f); ++i) {
    h = R.powmod(h, q, f);
    FqPoly g = R.gcd(f, R.sub(h, R.x()));
    if (Ring::degree(g) > 0) {
      out.emplace_back(g, static_cast<unsigned>(i));
      f = R.quo(f, g);
      h = R.rem(h, f);
    }
  }
  if (Ring::degree(f) > 0) out.emplace_back(f, static_cast<unsigned>(Ring::degree(f)));
  return out;
}

void equal_degree(const Ring& R, const FqPoly& g, unsigned d, std::mt19937_64& rng,
                  std::vector<FqPoly>& out) {
  if (Ring::degree(g) == static_cast<long>(d)) {
    out.push_back(g);
    return;
  }
  const auto& F = R.coefficients();
  std::uniform_int_distribution<std::uint32_t> coeff(0, F.size() - 1);
  mpz_class qd;
  mpz_ui_pow_ui(qd.get_mpz_t(), F.size(), d);
  const unsigned trace_terms = F.degree() * d;
  for (;;) {
    FqPoly a(static_cast<std::size_t>(Ring::degree(g)));
    for (auto& c : a) c = coeff(rng);
    a = R.normalized(std::move(a));
    if (Ring::degree(a) < 1) continue;
    FqPoly b;
    if (F.characteristic() == 2) {
      FqPoly t = a;
      b = a;
      for (unsigned j = 1; j < trace_terms; ++j) {
        t = R.mulmod(t, t, g);
        b = R.add(b, t);
      }
    } else {
      b = R.sub(R.powmod(a, (qd - 1) / 2, g), R.one());
    }
    FqPoly u = R.gcd(g, b);
    if (Ring::degree(u) > 0 && Ring::degree(u) < Ring::degree(g)) {
      equal_degree(R, u, d, rng, out);
      equal_degree(R, R.quo(g, u), d, rng, out);
      return;
    }
  }
}

}  // namespace

bool canonical_poly_less(const FqPoly& a, const FqPoly& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

std::vector<Factor> factor(const GaloisField& F, const FqPoly& f_in) {
  Ring R(F);
  FqPoly f = R.normalized(f_in);
  if (f.empty()) throw DomainError("factorization of the zero polynomial");
  f = R.monic(f);
  std::vector<Factor> parts;
  squarefree_parts(R, f, 1, parts);
  std::vector<Factor> out;
  std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
  for (const auto& part : parts)
    for (const auto& [g, d] : distinct_degree(R, part.poly)) {
      std::vector<FqPoly> pieces;
      equal_degree(R, g, d, rng, pieces);
      for (auto& piece : pieces) out.push_back({std::move(piece), part.multiplicity});
    }
  std::sort(out.begin(), out.end(),
            [](const Factor& a, const Factor& b) { return canonical_poly_less(a.poly, b.poly); });
  return out;
}

bool is_irreducible(const GaloisField& F, const FqPoly& f_in) {
  Ring R(F);
  FqPoly f = R.normalized(f_in);
  const long n = Ring::degree(f);
  if (n < 1) return false;
  if (n == 1) return true;
  f = R.monic(f);
  const mpz_class q = F.size();
  // frob[i] = X^(q^i) mod f for i = 0..n
  std::vector<FqPoly> frob{R.x()};
  for (long i = 1; i <= n; ++i) frob.push_back(R.powmod(frob.back(), q, f));
  if (R.sub(frob[n], R.rem(R.x(), f)) != FqPoly{}) return false;
  for (auto [r, e] : factor_integer(static_cast<std::uint64_t>(n))) {
    FqPoly g = R.gcd(f, R.sub(frob[n / r], R.x()));
    if (Ring::degree(g) > 0) return false;
  }
  return true;
}

bool is_squarefree(const GaloisField& F, const FqPoly& f_in) {
  Ring R(F);
  FqPoly f = R.normalized(f_in);
  if (Ring::degree(f) < 1) return !f.empty();
  FqPoly d = R.derivative(f);
  if (d.empty()) return false;
  return Ring::degree(R.gcd(f, d)) == 0;
}

std::vector<FqPoly> monic_irreducibles(const GaloisField& F, unsigned degree) {
  if (degree == 0) return {};
  mpz_class count;
  mpz_ui_pow_ui(count.get_mpz_t(), F.size(), degree);
  if (count > (1u << 20)) throw BoundError("too many polynomials to enumerate at this degree");
  std::vector<FqPoly> out;
  FqPoly f(degree + 1, 0);
  f[degree] = 1;
  const std::uint64_t total = count.get_ui();
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    for (unsigned i = 0; i < degree; ++i) f[i] = static_cast<std::uint32_t>(c % F.size()), c /= F.size();
    if (is_irreducible(F, f)) out.push_back(f);
  }
  std::sort(out.begin(), out.end(), canonical_poly_less);
  return out;
}

}  // namespace qstrat
