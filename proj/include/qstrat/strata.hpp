#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qstrat/groups.hpp"
#include "qstrat/rings/primes.hpp"

namespace qstrat {

/// A coefficient theory together with its truncation bounds.
struct TheorySpec {
  enum class Kind { height1, ku, hz, modp, kr };
  Kind kind = Kind::height1;
  unsigned p = 0;  ///< height1, hz; characteristic for modp
  unsigned q = 0;  ///< modp field size
  unsigned prime_bound = 19;
  unsigned degree_bound = 1;

  /// `height1:p=2`, `ku`, `hz:p=3`, `modp:q=4,deg=1`, `kr`; any theory also
  /// accepts `bound=<n>` and `deg=<n>`.
  static TheorySpec parse(std::string_view text);
  /// Canonical spelling without the bounds, e.g. "modp:q=4,deg=1".
  std::string to_string() const;

  /// The nilpotence family indexing the strata.
  FamilySpec family() const;
  /// All five theories admit global refinements.
  bool is_global() const { return true; }
  /// Theories with explicit transition maps support the colimit assembly.
  bool has_transition_maps() const { return kind != Kind::modp; }

  friend bool operator==(const TheorySpec&, const TheorySpec&) = default;
};

/// Throws UnsupportedError when the theory is not modeled over G.
void check_supported(const TheorySpec& theory, const PermGroup& G);

/// Global theories use W^gl, which is W^Q for abelian H; others use W.
WeylKind weyl_action_kind(bool global_theory, bool abelian_subgroup);
WeylKind weyl_action_kind(const TheorySpec& theory, bool abelian_subgroup);

struct LocalPoint {
  std::string label;
  PrimeDescriptor descriptor;
  bool closed = false;
};

struct LocalEdge {
  std::size_t from = 0;  ///< the generic end
  std::size_t to = 0;    ///< the special end
  bool external = false;
  std::string provenance;
};

/// The piece of the spectrum contributed by one subgroup class.
struct StratumModel {
  SubgroupClass subgroup;
  std::vector<LocalPoint> points;
  /// Specialization edges (generic, special) within the stratum.
  std::vector<std::pair<std::size_t, std::size_t>> internal_order;
  WeylGroup weyl;
  /// Permutation of `points` induced by each of weyl.normalizer_generators.
  std::vector<Permutation> weyl_action;
  bool empty = false;
  std::string empty_reason;
  bool truncated = false;
};

StratumModel stratum(const TheorySpec& theory, const PermGroup& G, const SubgroupClass& H);

/// True when the stored action is an action of the Weyl group: the pairs
/// (coset action, point action) of the normalizer generators generate a
/// group of order |W|.
bool is_weyl_action(const StratumModel& S);

/// Orbits of the Weyl action as sorted index lists, ordered by smallest member.
std::vector<std::vector<std::size_t>> weyl_orbits(const StratumModel& S);

/// The whole spectrum V(R, H) of an object H of the family, with every point's
/// support subgroup (an element subset of G contained in H).
struct FullSpectrum {
  std::vector<LocalPoint> points;
  std::vector<Subgroup> support;
  std::vector<LocalEdge> edges;
};

FullSpectrum full_spectrum(const TheorySpec& theory, const PermGroup& G, const SubgroupClass& H);

/// Map V(R, H) -> V(R, K) induced by the morphism H -> K with witness w.
std::vector<std::size_t> transition_map(const TheorySpec& theory, const PermGroup& G,
                                        const SubgroupClass& H, const FullSpectrum& VH,
                                        const SubgroupClass& K, const FullSpectrum& VK, ElemId w);

/// For KU over cyclic K: the prime of Z[x]/(x^|K| - 1) under a stratum point
/// of H, pushed along the morphism with witness w. Returned as an index into
/// full_spectrum(K).
std::size_t ku_push(const TheorySpec& theory, const PermGroup& G, const SubgroupClass& H,
                    const LocalPoint& point, const SubgroupClass& K, const FullSpectrum& VK, ElemId w);

}  // namespace qstrat
