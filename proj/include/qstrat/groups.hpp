#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qstrat {

/// Largest degree accepted by the group DSL.
inline constexpr std::size_t kMaxDegree = 64;
/// Largest group order the engine will enumerate.
inline constexpr std::size_t kMaxOrder = 10'000;

using Point = std::uint16_t;
/// Index of an element in its parent group's canonical element list.
using ElemId = std::uint32_t;

/// A bijection of {0, ..., degree-1}. Products compose right to left:
/// (a * b)(x) == a(b(x)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::size_t degree);
  explicit Permutation(std::vector<Point> images);

  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  std::span<const Point> images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  /// Same permutation on a larger point set, fixing the new points.
  Permutation extended(std::size_t degree) const;
  /// Disjoint cycle notation, "()" for the identity.
  std::string cycle_string() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

/// A finite permutation group with its full element list.
///
/// Elements are sorted lexicographically by their image arrays, so the
/// identity is always element 0 and element ids are reproducible across runs.
/// The object is a cheap handle onto immutable shared data.
class PermGroup {
 public:
  PermGroup(std::size_t degree, std::vector<Permutation> generators);

  std::size_t degree() const;
  std::size_t order() const;
  std::span<const Permutation> generators() const;
  std::span<const Permutation> elements() const;
  const Permutation& element(ElemId id) const;
  std::optional<ElemId> find(const Permutation& p) const;

  static constexpr ElemId identity() { return 0; }
  ElemId mul(ElemId a, ElemId b) const;
  ElemId inv(ElemId a) const;
  /// g h g^-1
  ElemId conj(ElemId g, ElemId h) const { return mul(mul(g, h), inv(g)); }
  ElemId pow(ElemId a, long long k) const;
  std::size_t element_order(ElemId a) const;

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

/// A subgroup stored as the sorted list of its element ids in the parent.
class Subgroup {
 public:
  Subgroup() = default;
  explicit Subgroup(std::vector<ElemId> elements);

  std::span<const ElemId> elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }
  bool contains(ElemId g) const;
  bool is_subset_of(const Subgroup& other) const;

  friend auto operator<=>(const Subgroup&, const Subgroup&) = default;
  friend bool operator==(const Subgroup&, const Subgroup&) = default;

 private:
  std::vector<ElemId> elements_;
};

/// Canonical ordering of subgroups: by order, then by element list.
bool canonical_less(const Subgroup& a, const Subgroup& b);

Subgroup whole_group(const PermGroup& G);
Subgroup trivial_subgroup(const PermGroup& G);
Subgroup closure(const PermGroup& G, std::span<const ElemId> generators);
/// Smallest subgroup containing `base` and `extra`.
Subgroup join(const PermGroup& G, const Subgroup& base, std::span<const ElemId> extra);
/// g H g^-1
Subgroup conjugate(const PermGroup& G, const Subgroup& H, ElemId g);
Subgroup intersection(const Subgroup& H, const Subgroup& K);
Subgroup normalizer(const PermGroup& G, const Subgroup& H);
Subgroup centralizer(const PermGroup& G, const Subgroup& H);
/// The minimal conjugate of H under canonical_less.
Subgroup canonical_conjugate(const PermGroup& G, const Subgroup& H);

bool is_abelian(const PermGroup& G, const Subgroup& H);
/// Minimal element id generating H, if H is cyclic.
std::optional<ElemId> cyclic_generator(const PermGroup& G, const Subgroup& H);
/// Greedy generating set: repeatedly adds the smallest element not yet generated.
std::vector<ElemId> generators_of(const PermGroup& G, const Subgroup& H);
/// Invariant factors n1 >= n2 >= ... with n_{i+1} | n_i, for abelian H.
std::vector<std::size_t> abelian_invariants(const PermGroup& G, const Subgroup& H);
/// The prime p if |H| is a positive power of p, 1 for the trivial group, 0 otherwise.
unsigned prime_of_p_group(std::size_t order);

/// One conjugacy class of subgroups, with its canonical representative.
struct SubgroupClass {
  std::size_t index = 0;  ///< position in the canonical class ordering
  std::string name;       ///< e, C4, C2xC2, or H<order> for non-abelian classes
  std::string key;        ///< name, disambiguated with .k when several classes share it
  Subgroup representative;
  Subgroup normalizer;
  Subgroup centralizer;
  std::size_t conjugates = 0;

  std::size_t order() const { return representative.order(); }
};

/// All conjugacy classes of subgroups, sorted by (order, canonical key).
std::vector<SubgroupClass> subgroups_up_to_conjugacy(const PermGroup& G);
/// Index of the class containing H.
std::size_t find_class(const PermGroup& G, std::span<const SubgroupClass> classes,
                       const Subgroup& H);

enum class WeylKind { ordinary, global, quillen };
std::string to_string(WeylKind kind);
WeylKind parse_weyl_kind(std::string_view text);

/// N_G(H) modulo H (ordinary), H.C_G(H) (global), or C_G(H) (quillen),
/// presented through the left multiplication action of N_G(H) on cosets of
/// the kernel. For the quillen flavour H need not be abelian; the quotient
/// N/C is then the group of automorphisms of H induced by conjugation.
struct WeylGroup {
  WeylKind kind = WeylKind::ordinary;
  std::size_t order = 1;
  Subgroup normalizer;
  Subgroup kernel;
  std::vector<ElemId> normalizer_generators;
  /// Action of each normalizer generator on the cosets of `kernel`.
  std::vector<Permutation> generators;
  /// Left cosets n.kernel, indexed as in `generators`.
  std::vector<std::vector<ElemId>> cosets;
  /// Coset index per parent element; npos outside the normalizer.
  std::vector<std::size_t> element_coset;

  std::size_t coset_of(ElemId n) const;
  /// Coset permutation of an arbitrary normalizer element.
  Permutation action_of(const PermGroup& G, ElemId n) const;
  PermGroup as_group() const;
};

WeylGroup weyl(const PermGroup& G, const SubgroupClass& H, WeylKind kind);

struct DoubleCoset {
  ElemId representative = 0;  ///< smallest element of H g K
  Subgroup intersection;      ///< g^-1 H g intersected with K
  std::size_t size = 0;       ///< |H g K|
};

struct DoubleCosetDecomposition {
  std::vector<DoubleCoset> pairs;
  std::size_t index_h = 0;
  std::size_t index_k = 0;

  /// Sum of [G : H^g n K] over the pairs.
  std::size_t orbit_sum(std::size_t group_order) const;
  bool mackey_holds(std::size_t group_order) const {
    return orbit_sum(group_order) == index_h * index_k;
  }
};

DoubleCosetDecomposition double_cosets(const PermGroup& G, const Subgroup& H,
                                       const Subgroup& K);

/// A family of subgroups, closed under conjugation and passage to subgroups.
struct FamilySpec {
  enum class Kind { all, cyclic, cyclic_p, elem_abelian_p, abelian_p_rank };
  Kind kind = Kind::all;
  unsigned p = 0;
  unsigned rank = 0;

  static FamilySpec all() { return {Kind::all, 0, 0}; }
  static FamilySpec cyclic() { return {Kind::cyclic, 0, 0}; }
  static FamilySpec cyclic_p(unsigned p) { return {Kind::cyclic_p, p, 0}; }
  static FamilySpec elem_abelian_p(unsigned p) { return {Kind::elem_abelian_p, p, 0}; }
  static FamilySpec abelian_p_rank(unsigned p, unsigned n) { return {Kind::abelian_p_rank, p, n}; }

  /// Parses `all`, `cyclic`, `cyclic-p(3)`, `elem-abelian-p(2)`, `abelian-p-rank(2,1)`.
  static FamilySpec parse(std::string_view text);
  std::string to_string() const;
  bool contains(const PermGroup& G, const Subgroup& H) const;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

std::vector<SubgroupClass> family_members(const PermGroup& G,
                                          std::span<const SubgroupClass> classes,
                                          const FamilySpec& family);
std::vector<SubgroupClass> family_members(const PermGroup& G, const FamilySpec& family);

/// Builds a group from the DSL:
///   cyclic:n  dihedral:n  sym:n  alt:n  elem-abelian:p^k  dicyclic:n  quaternion:n
///   semidirect:m,n,r  product:<spec>x<spec>  perm:<cycles>;<cycles>;...
PermGroup build_group(std::string_view spec);
/// A `perm:` DSL string regenerating G from its generators.
std::string to_dsl(const PermGroup& G);
/// Left regular representation of a group given by its multiplication on {0..n-1}.
PermGroup regular_group(std::size_t n, const std::vector<std::vector<std::uint32_t>>& table,
                        std::span<const std::uint32_t> generators);

}  // namespace qstrat
