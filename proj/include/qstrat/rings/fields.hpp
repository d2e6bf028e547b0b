#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "qstrat/rings/poly.hpp"

namespace qstrat {

struct IntegerRing {
  using Elem = mpz_class;
  static constexpr bool is_field = false;

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(long v) const { return v; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  bool is_zero(const Elem& a) const { return a == 0; }
  std::string to_string(const Elem& a) const { return a.get_str(); }
};

struct RationalField {
  using Elem = mpq_class;
  static constexpr bool is_field = true;

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(long v) const { return v; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const;
  bool is_zero(const Elem& a) const { return a == 0; }
  std::string to_string(const Elem& a) const { return a.get_str(); }
};

/// The finite field F_q, q = p^f <= 2^16.
///
/// An element is the integer sum d_i p^i encoding the residue class of
/// sum d_i a^i, where a is a root of the defining polynomial: the smallest
/// monic primitive polynomial of degree f over F_p. Prime-field elements are
/// therefore encoded by 0..p-1, and a generates the multiplicative group.
class GaloisField {
 public:
  using Elem = std::uint32_t;
  static constexpr bool is_field = true;
  static constexpr std::uint32_t kMaxSize = 1u << 16;

  explicit GaloisField(std::uint32_t q);

  std::uint32_t size() const { return q_; }
  std::uint32_t characteristic() const { return p_; }
  unsigned degree() const { return f_; }
  /// Defining polynomial over F_p, ascending coefficients.
  const std::vector<std::uint32_t>& modulus() const { return data_->modulus; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  /// The primitive element a.
  Elem generator() const { return f_ == 1 ? data_->exp[1 % (q_ - 1)] : p_; }
  Elem from_int(long v) const;
  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem pow(Elem a, std::uint64_t e) const;
  bool is_zero(Elem a) const { return a == 0; }
  /// Discrete logarithm to base a (a nonzero).
  std::uint32_t log(Elem a) const;
  Elem exp(std::uint64_t k) const { return data_->exp[k % (q_ - 1)]; }
  /// x -> x^p
  Elem frobenius(Elem a) const { return pow(a, p_); }
  bool in_prime_field(Elem a) const { return a < p_; }

  /// Prime-field elements print as integers, the rest as powers of a.
  std::string to_string(Elem a) const;

  friend bool operator==(const GaloisField& x, const GaloisField& y) { return x.q_ == y.q_; }

 private:
  struct Tables {
    std::vector<std::uint32_t> modulus;
    std::vector<Elem> exp;
    std::vector<std::uint32_t> log;
  };
  std::uint32_t q_ = 0, p_ = 0;
  unsigned f_ = 0;
  std::shared_ptr<const Tables> data_;
};

/// Q(zeta_m) in the power basis 1, z, ..., z^(phi(m)-1) modulo Phi_m.
class CyclotomicField {
 public:
  using Elem = std::vector<mpq_class>;
  static constexpr bool is_field = true;

  explicit CyclotomicField(unsigned m);

  unsigned conductor() const { return m_; }
  std::size_t dimension() const { return phi_.size() - 1; }
  const std::vector<mpz_class>& modulus() const { return phi_; }

  Elem zero() const { return Elem(dimension(), 0); }
  Elem one() const { return from_int(1); }
  Elem from_int(long v) const;
  Elem from_rational(const mpq_class& v) const;
  /// zeta_m^k for any integer k.
  Elem zeta(long k = 1) const;
  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem inv(const Elem& a) const;
  bool is_zero(const Elem& a) const;
  bool is_rational(const Elem& a) const;
  /// True when every coordinate is an integer (an element of Z[zeta_m]).
  bool is_integral(const Elem& a) const;
  /// Image under the reduction Z[zeta_p] -> F_p at the prime above p,
  /// zeta -> 1. Requires m a power of p and a integral.
  long reduce_at_p(const Elem& a, unsigned p) const;

  /// Power-basis rendering in the variable z, e.g. "2*z + 1".
  std::string to_string(const Elem& a) const;

  friend bool operator==(const CyclotomicField& x, const CyclotomicField& y) { return x.m_ == y.m_; }

 private:
  Elem reduce(std::vector<mpq_class> v) const;
  unsigned m_;
  std::vector<mpz_class> phi_;
};

using ZPoly = PolyRing<IntegerRing>::Poly;
using QPoly = PolyRing<RationalField>::Poly;
using FqPoly = PolyRing<GaloisField>::Poly;
using CycPoly = PolyRing<CyclotomicField>::Poly;

}  // namespace qstrat
