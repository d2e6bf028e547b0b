#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "qstrat/error.hpp"

namespace qstrat {

/// Dense univariate polynomials over a coefficient context R.
///
/// R supplies `Elem`, `zero()`, `one()`, `from_int`, `add`, `sub`, `neg`,
/// `mul`, `is_zero`, `to_string`, and, when `R::is_field`, `inv`.
/// Polynomials are coefficient vectors in ascending degree with no trailing
/// zeros; the zero polynomial is the empty vector.
template <class R>
class PolyRing {
 public:
  using Elem = typename R::Elem;
  using Poly = std::vector<Elem>;

  struct DivResult {
    Poly quotient;
    Poly remainder;
  };

  explicit PolyRing(R ring) : r_(std::move(ring)) {}

  const R& coefficients() const { return r_; }

  Poly zero() const { return {}; }
  Poly one() const { return {r_.one()}; }
  Poly x() const { return {r_.zero(), r_.one()}; }
  Poly constant(Elem c) const { return normalized(Poly{std::move(c)}); }
  Poly monomial(Elem c, std::size_t k) const {
    Poly out(k + 1, r_.zero());
    out[k] = std::move(c);
    return normalized(std::move(out));
  }
  /// Integer coefficients in ascending degree, mapped into R.
  Poly from_ints(const std::vector<long>& coeffs) const {
    Poly out;
    for (long c : coeffs) out.push_back(r_.from_int(c));
    return normalized(std::move(out));
  }

  Poly normalized(Poly a) const {
    while (!a.empty() && r_.is_zero(a.back())) a.pop_back();
    return a;
  }
  static long degree(const Poly& a) { return static_cast<long>(a.size()) - 1; }
  static bool is_zero(const Poly& a) { return a.empty(); }
  const Elem& lead(const Poly& a) const { return a.back(); }
  bool is_monic(const Poly& a) const { return !a.empty() && a.back() == r_.one(); }

  Poly add(const Poly& a, const Poly& b) const {
    Poly out(std::max(a.size(), b.size()), r_.zero());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] = r_.add(out[i], b[i]);
    return normalized(std::move(out));
  }
  Poly neg(const Poly& a) const {
    Poly out;
    for (const auto& c : a) out.push_back(r_.neg(c));
    return out;
  }
  Poly sub(const Poly& a, const Poly& b) const { return add(a, neg(b)); }
  Poly scale(const Poly& a, const Elem& c) const {
    Poly out;
    for (const auto& v : a) out.push_back(r_.mul(v, c));
    return normalized(std::move(out));
  }
  Poly mul(const Poly& a, const Poly& b) const {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, r_.zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (r_.is_zero(a[i])) continue;
      for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = r_.add(out[i + j], r_.mul(a[i], b[j]));
    }
    return normalized(std::move(out));
  }
  Poly pow(Poly a, unsigned long e) const {
    Poly out = one();
    for (; e; e >>= 1) {
      if (e & 1) out = mul(out, a);
      if (e > 1) a = mul(a, a);
    }
    return out;
  }

  /// Division with remainder; the divisor's leading coefficient must be
  /// invertible (monic over rings, nonzero over fields).
  DivResult divmod(const Poly& a, const Poly& b) const {
    if (b.empty()) throw DomainError("polynomial division by zero");
    Elem lead_inv = r_.one();
    if (!(b.back() == r_.one())) {
      if constexpr (R::is_field) {
        lead_inv = r_.inv(b.back());
      } else {
        throw DomainError("division by a non-monic polynomial over a ring");
      }
    }
    Poly rem = a;
    if (rem.size() < b.size()) return {{}, normalized(std::move(rem))};
    Poly quo(rem.size() - b.size() + 1, r_.zero());
    for (std::size_t k = quo.size(); k-- > 0;) {
      Elem c = r_.mul(rem[k + b.size() - 1], lead_inv);
      quo[k] = c;
      if (r_.is_zero(c)) continue;
      for (std::size_t j = 0; j < b.size(); ++j) rem[k + j] = r_.sub(rem[k + j], r_.mul(c, b[j]));
    }
    rem.resize(b.size() - 1, r_.zero());
    return {normalized(std::move(quo)), normalized(std::move(rem))};
  }
  Poly rem(const Poly& a, const Poly& b) const { return divmod(a, b).remainder; }
  Poly quo(const Poly& a, const Poly& b) const { return divmod(a, b).quotient; }

  Poly derivative(const Poly& a) const {
    Poly out;
    for (std::size_t i = 1; i < a.size(); ++i)
      out.push_back(r_.mul(r_.from_int(static_cast<long>(i)), a[i]));
    return normalized(std::move(out));
  }

  Poly monic(const Poly& a) const {
    if (a.empty()) return a;
    if constexpr (R::is_field) {
      return scale(a, r_.inv(a.back()));
    } else {
      if (!(a.back() == r_.one())) throw DomainError("polynomial is not monic");
      return a;
    }
  }

  /// Monic greatest common divisor (fields only).
  Poly gcd(Poly a, Poly b) const
    requires R::is_field
  {
    while (!b.empty()) {
      Poly r = rem(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(a);
  }

  /// Returns (g, s, t) with s*a + t*b = g monic (fields only).
  struct Bezout {
    Poly g, s, t;
  };
  Bezout ext_gcd(const Poly& a, const Poly& b) const
    requires R::is_field
  {
    Poly r0 = a, r1 = b, s0 = one(), s1 = {}, t0 = {}, t1 = one();
    while (!r1.empty()) {
      auto [q, r] = divmod(r0, r1);
      r0 = std::move(r1);
      r1 = std::move(r);
      Poly s2 = sub(s0, mul(q, s1));
      Poly t2 = sub(t0, mul(q, t1));
      s0 = std::move(s1);
      s1 = std::move(s2);
      t0 = std::move(t1);
      t1 = std::move(t2);
    }
    if (r0.empty()) return {r0, s0, t0};
    Elem c = r_.inv(r0.back());
    return {scale(r0, c), scale(s0, c), scale(t0, c)};
  }

  Poly mulmod(const Poly& a, const Poly& b, const Poly& m) const { return rem(mul(a, b), m); }
  Poly powmod(Poly base, const mpz_class& e, const Poly& m) const {
    Poly out = rem(one(), m);
    base = rem(base, m);
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
      out = mulmod(out, out, m);
      if (mpz_tstbit(e.get_mpz_t(), i)) out = mulmod(out, base, m);
    }
    return out;
  }

  /// f(X^k)
  Poly substitute_power(const Poly& f, std::size_t k) const {
    if (f.empty()) return f;
    Poly out((f.size() - 1) * k + 1, r_.zero());
    for (std::size_t i = 0; i < f.size(); ++i) out[i * k] = f[i];
    return out;
  }
  /// f(g)
  Poly compose(const Poly& f, const Poly& g) const {
    Poly out;
    for (std::size_t i = f.size(); i-- > 0;) out = add(mul(out, g), constant(f[i]));
    return out;
  }

  Elem eval(const Poly& f, const Elem& x) const {
    Elem out = r_.zero();
    for (std::size_t i = f.size(); i-- > 0;) out = r_.add(r_.mul(out, x), f[i]);
    return out;
  }

  /// Highest degree first, e.g. "X^2 + 2*X + 1".
  std::string to_string(const Poly& f, const std::string& var = "X") const {
    if (f.empty()) return "0";
    std::string out;
    for (std::size_t i = f.size(); i-- > 0;) {
      if (r_.is_zero(f[i])) continue;
      std::string c = r_.to_string(f[i]);
      bool negative = !c.empty() && c[0] == '-' && c.find_first_of("+-", 1) == std::string::npos;
      if (negative) c = c.substr(1);
      bool compound = c.find_first_of("+-", 1) != std::string::npos;
      if (!out.empty()) out += negative ? " - " : " + ";
      else if (negative) out += "-";
      std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
      if (i == 0) out += compound ? "(" + c + ")" : c;
      else if (c == "1") out += mono;
      else out += (compound ? "(" + c + ")" : c) + "*" + mono;
    }
    return out;
  }

 private:
  R r_;
};

}  // namespace qstrat
