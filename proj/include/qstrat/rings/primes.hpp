#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qstrat/rings/fields.hpp"

namespace qstrat {

/// A prime ideal in one of the explicit rings the engine works with.
///
/// `generator` holds the canonical generator's coefficients in ascending
/// degree: integers for Phi_d, F_q encodings (see GaloisField) for residue
/// polynomials and homogeneous forms. Together with `ring`, `parameter` and
/// `q` it determines the prime; `text` is its rendering.
struct PrimeDescriptor {
  enum class Ring {
    integers,           ///< Z
    p_adic_integers,    ///< Z_p, parameter p
    cyclotomic,         ///< Z[zeta_d, 1/d], parameter d
    cyclic_group_ring,  ///< Z[x]/(x^n - 1), parameter n
    homogeneous_fq,     ///< F_q[x, y] homogeneous primes, parameter q
    homogeneous_fp_t,   ///< Z/p[t] homogeneous primes, parameter p
    residue_field,      ///< a field; its only prime is (0)
  };
  enum class Kind { generic, closed, height_one };

  Ring ring = Ring::integers;
  Kind kind = Kind::generic;
  std::uint32_t parameter = 0;
  /// Residue characteristic of a nonzero prime; 0 for generic points.
  std::uint32_t q = 0;
  std::vector<std::int64_t> generator;
  std::string text;

  const std::string& to_string() const { return text; }

  friend auto operator<=>(const PrimeDescriptor&, const PrimeDescriptor&) = default;
  friend bool operator==(const PrimeDescriptor&, const PrimeDescriptor&) = default;
};

std::string to_string(PrimeDescriptor::Ring ring);
std::string to_string(PrimeDescriptor::Kind kind);

/// (0) or (q) in Z.
PrimeDescriptor integer_prime(std::uint32_t q);
/// Residue polynomial of F_q[X] as integer coefficient codes.
std::vector<std::int64_t> poly_codes(const FqPoly& f);

inline constexpr unsigned kMaxGroupRingDegree = 64;
inline constexpr unsigned kMaxPrimeBound = 1000;

/// Truncated Spec Z[x]/(x^n - 1).
struct CyclicRingSpectrum {
  struct Minimal {
    unsigned d = 0;  ///< the prime is (Phi_d(x))
    PrimeDescriptor descriptor;
  };
  struct Maximal {
    unsigned q = 0;
    FqPoly g;                 ///< monic irreducible factor of x^n - 1 mod q
    unsigned root_order = 0;  ///< order of the roots of g, prime to q
    PrimeDescriptor descriptor;
  };

  unsigned n = 0;
  unsigned prime_bound = 0;
  std::vector<Minimal> minimal;
  std::vector<Maximal> maximal;
  /// (minimal index, maximal index) with (Phi_d) contained in (q, g).
  std::vector<std::pair<std::size_t, std::size_t>> containments;
  bool truncated = true;
};

CyclicRingSpectrum cyclic_spectrum_ring(unsigned n, unsigned prime_bound);

/// Residue field label of the maximal ideal (q, g): "F_{q^f} via (q, g)",
/// written "F_q via (q, g)" when g is linear.
std::string residue_label(unsigned q, const FqPoly& g);

}  // namespace qstrat
