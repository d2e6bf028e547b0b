#pragma once

#include <utility>
#include <vector>

#include "qstrat/rings/fields.hpp"

namespace qstrat {

struct Factor {
  FqPoly poly;  ///< monic irreducible
  unsigned multiplicity = 1;
};

/// Canonical order on monic polynomials: by degree, then coefficients from the
/// constant term upward.
bool canonical_poly_less(const FqPoly& a, const FqPoly& b);

/// Complete factorization over F_q into monic irreducibles, canonically
/// ordered. Uses squarefree decomposition, distinct-degree factorization and a
/// fixed-seed Cantor-Zassenhaus split, so results are deterministic.
std::vector<Factor> factor(const GaloisField& F, const FqPoly& f);

bool is_irreducible(const GaloisField& F, const FqPoly& f);
bool is_squarefree(const GaloisField& F, const FqPoly& f);

/// All monic irreducible polynomials of the given degree, canonically ordered.
/// Bounded by q^degree <= 2^20.
std::vector<FqPoly> monic_irreducibles(const GaloisField& F, unsigned degree);

}  // namespace qstrat
