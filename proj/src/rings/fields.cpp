#include "qstrat/rings/fields.hpp"

#include <algorithm>

#include "qstrat/rings/arith.hpp"

namespace qstrat {

RationalField::Elem RationalField::inv(const Elem& a) const {
  if (a == 0) throw DomainError("inverse of zero");
  return 1 / a;
}

namespace {

// Encodes polynomial digits (ascending) as an integer in base p.
std::uint32_t encode(const std::vector<std::uint32_t>& digits, std::uint32_t p) {
  std::uint32_t v = 0;
  for (std::size_t i = digits.size(); i-- > 0;) v = v * p + digits[i];
  return v;
}

}  // namespace

GaloisField::GaloisField(std::uint32_t q) : q_(q) {
  auto pp = prime_power(q);
  if (!pp) throw DomainError("field size " + std::to_string(q) + " is not a prime power");
  if (q > kMaxSize) throw BoundError("field size exceeds 2^16");
  p_ = pp->first;
  f_ = pp->second;

  auto tables = std::make_shared<Tables>();
  // Search monic degree-f polynomials in increasing encoding for one whose
  // root has multiplicative order q - 1.
  std::vector<std::uint32_t> digits(f_, 0);
  for (std::uint32_t code = 0; code < q_; ++code) {
    std::uint32_t c = code;
    for (unsigned i = 0; i < f_; ++i) digits[i] = c % p_, c /= p_;
    if (f_ > 1 && digits[0] == 0) continue;  // divisible by X
    // Powers of X modulo X^f + sum digits_i X^i, as digit vectors.
    std::vector<std::uint32_t> cur(f_, 0), next(f_);
    cur[0] = 1;
    std::vector<Elem> exp(q_ - 1);
    bool primitive = true;
    for (std::uint32_t k = 0; k < q_ - 1; ++k) {
      exp[k] = encode(cur, p_);
      if (k > 0 && exp[k] == 1) {
        primitive = false;
        break;
      }
      // multiply by X
      std::uint32_t top = cur[f_ - 1];
      for (unsigned i = f_; i-- > 1;) next[i] = cur[i - 1];
      next[0] = 0;
      for (unsigned i = 0; i < f_; ++i) next[i] = (next[i] + (p_ - digits[i]) * top) % p_;
      cur.swap(next);
    }
    if (!primitive || encode(cur, p_) != 1) continue;
    tables->modulus.assign(digits.begin(), digits.end());
    tables->modulus.push_back(1);
    tables->exp = std::move(exp);
    break;
  }
  if (tables->exp.empty()) {
    if (q_ == 2) tables->exp = {1}, tables->modulus = {1, 1};
    else throw DomainError("no primitive polynomial found");
  }
  tables->log.assign(q_, 0);
  for (std::uint32_t k = 0; k < q_ - 1; ++k) tables->log[tables->exp[k]] = k;
  data_ = std::move(tables);
}

GaloisField::Elem GaloisField::from_int(long v) const {
  long r = v % static_cast<long>(p_);
  return static_cast<Elem>(r < 0 ? r + p_ : r);
}

GaloisField::Elem GaloisField::add(Elem a, Elem b) const {
  if (f_ == 1) return (a + b) % p_;
  Elem out = 0, scale = 1;
  for (unsigned i = 0; i < f_; ++i) {
    out += ((a % p_ + b % p_) % p_) * scale;
    a /= p_, b /= p_, scale *= p_;
  }
  return out;
}

GaloisField::Elem GaloisField::neg(Elem a) const {
  if (f_ == 1) return a == 0 ? 0 : p_ - a;
  Elem out = 0, scale = 1;
  for (unsigned i = 0; i < f_; ++i) {
    out += ((p_ - a % p_) % p_) * scale;
    a /= p_, scale *= p_;
  }
  return out;
}

GaloisField::Elem GaloisField::mul(Elem a, Elem b) const {
  if (a == 0 || b == 0) return 0;
  if (f_ == 1) return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p_);
  return data_->exp[(data_->log[a] + data_->log[b]) % (q_ - 1)];
}

GaloisField::Elem GaloisField::inv(Elem a) const {
  if (a == 0) throw DomainError("inverse of zero in F_" + std::to_string(q_));
  return data_->exp[(q_ - 1 - data_->log[a]) % (q_ - 1)];
}

GaloisField::Elem GaloisField::pow(Elem a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  return data_->exp[(static_cast<std::uint64_t>(data_->log[a]) * (e % (q_ - 1))) % (q_ - 1)];
}

std::uint32_t GaloisField::log(Elem a) const {
  if (a == 0) throw DomainError("logarithm of zero");
  return data_->log[a];
}

std::string GaloisField::to_string(Elem a) const {
  if (in_prime_field(a)) return std::to_string(a);
  std::uint32_t k = data_->log[a];
  return k == 1 ? "a" : "a^" + std::to_string(k);
}

CyclotomicField::CyclotomicField(unsigned m) : m_(m) {
  if (m == 0) throw DomainError("cyclotomic conductor must be positive");
  phi_ = cyclotomic_poly(m);
}

CyclotomicField::Elem CyclotomicField::reduce(std::vector<mpq_class> v) const {
  const std::size_t n = dimension();
  for (std::size_t d = v.size(); d-- > n;) {
    mpq_class c = v[d];
    if (c == 0) continue;
    for (std::size_t i = 0; i <= n; ++i) v[d - n + i] -= c * phi_[i];
  }
  v.resize(n, 0);
  return v;
}

CyclotomicField::Elem CyclotomicField::from_int(long v) const { return from_rational(v); }

CyclotomicField::Elem CyclotomicField::from_rational(const mpq_class& v) const {
  Elem out = zero();
  if (!out.empty()) out[0] = v;
  return out;
}

CyclotomicField::Elem CyclotomicField::zeta(long k) const {
  long e = k % static_cast<long>(m_);
  if (e < 0) e += m_;
  std::vector<mpq_class> v(static_cast<std::size_t>(e) + 1, 0);
  v[e] = 1;
  return reduce(std::move(v));
}

CyclotomicField::Elem CyclotomicField::add(const Elem& a, const Elem& b) const {
  Elem out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

CyclotomicField::Elem CyclotomicField::sub(const Elem& a, const Elem& b) const {
  Elem out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
  return out;
}

CyclotomicField::Elem CyclotomicField::neg(const Elem& a) const {
  Elem out = a;
  for (auto& c : out) c = -c;
  return out;
}

CyclotomicField::Elem CyclotomicField::mul(const Elem& a, const Elem& b) const {
  if (a.empty()) return a;
  std::vector<mpq_class> v(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) v[i + j] += a[i] * b[j];
  }
  return reduce(std::move(v));
}

CyclotomicField::Elem CyclotomicField::inv(const Elem& a) const {
  if (is_zero(a)) throw DomainError("inverse of zero in Q(zeta_" + std::to_string(m_) + ")");
  PolyRing<RationalField> Q{RationalField{}};
  QPoly phi;
  for (const auto& c : phi_) phi.push_back(mpq_class(c));
  auto [g, s, t] = Q.ext_gcd(Q.normalized(a), phi);
  // Phi_m is irreducible, so g == 1 and s*a == 1 mod Phi_m.
  return reduce(std::vector<mpq_class>(s.begin(), s.end()));
}

bool CyclotomicField::is_zero(const Elem& a) const {
  return std::all_of(a.begin(), a.end(), [](const mpq_class& c) { return c == 0; });
}

bool CyclotomicField::is_rational(const Elem& a) const {
  return std::all_of(a.begin() + std::min<std::size_t>(1, a.size()), a.end(),
                     [](const mpq_class& c) { return c == 0; });
}

bool CyclotomicField::is_integral(const Elem& a) const {
  return std::all_of(a.begin(), a.end(), [](const mpq_class& c) { return c.get_den() == 1; });
}

long CyclotomicField::reduce_at_p(const Elem& a, unsigned p) const {
  auto pp = prime_power(m_);
  if (m_ != 1 && (!pp || pp->first != p)) throw DomainError("conductor is not a power of p");
  if (!is_integral(a)) throw DomainError("reduction of a non-integral element");
  mpz_class s = 0;
  for (const auto& c : a) s += c.get_num();
  mpz_class r = s % p;
  if (r < 0) r += p;
  return r.get_si();
}

std::string CyclotomicField::to_string(const Elem& a) const {
  std::string out;
  for (std::size_t i = a.size(); i-- > 0;) {
    const mpq_class& c = a[i];
    if (c == 0) continue;
    std::string mag = mpq_class(abs(c)).get_str();
    std::string mono = i == 0 ? "" : (i == 1 ? "z" : "z^" + std::to_string(i));
    std::string term = i == 0 ? mag : (mag == "1" ? mono : mag + "*" + mono);
    if (out.empty()) out = (c < 0 ? "-" : "") + term;
    else out += (c < 0 ? " - " : " + ") + term;
  }
  return out.empty() ? "0" : out;
}

}  // namespace qstrat
