#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "qstrat/groups.hpp"

namespace qstrat {

/// The orbit category O_F(G) or the Quillen orbit category O^Q_F(G) on the
/// class representatives of a family.
///
/// A morphism H -> K is witnessed by w in G with w H w^-1 inside K; it induces
/// c_w: H -> K, h -> w h w^-1. Witnesses are identified modulo K w (orbit)
/// or K w C_G(H) (Quillen orbit), and each morphism stores the smallest
/// element id of its class.
enum class OrbitKind { orbit, quillen_orbit };

struct Morphism {
  std::size_t source = 0;
  std::size_t target = 0;
  ElemId witness = 0;
  bool identity = false;
};

class OrbitCategory {
 public:
  OrbitCategory(PermGroup G, std::vector<SubgroupClass> objects, OrbitKind kind);

  OrbitKind kind() const { return kind_; }
  const PermGroup& group() const { return G_; }
  const std::vector<SubgroupClass>& objects() const { return objects_; }
  const std::vector<Morphism>& morphisms() const { return morphisms_; }

  /// Indices of the morphisms source -> target, by increasing witness.
  std::span<const std::size_t> hom(std::size_t source, std::size_t target) const;
  std::size_t identity(std::size_t object) const;
  /// The morphism represented by witness w, which must map source into target.
  std::size_t find(std::size_t source, std::size_t target, ElemId w) const;
  /// g after f, for f: a -> b and g: b -> c.
  std::size_t compose(std::size_t f, std::size_t g) const;
  /// Canonical witness of the class of w.
  ElemId canonical_witness(std::size_t source, std::size_t target, ElemId w) const;

 private:
  PermGroup G_;
  std::vector<SubgroupClass> objects_;
  OrbitKind kind_;
  std::vector<Morphism> morphisms_;
  std::vector<std::vector<std::size_t>> homs_;  // source * n + target
  std::map<std::tuple<std::size_t, std::size_t, ElemId>, std::size_t> index_;
};

OrbitCategory build_orbit_category(const PermGroup& G, const FamilySpec& F,
                                   OrbitKind kind = OrbitKind::quillen_orbit);

/// A functor from a small category into finite sets, given by its values on
/// generating data. Points carry string keys used only for reporting.
struct OrbitDiagram {
  struct Arrow {
    std::size_t source = 0;
    std::size_t target = 0;
    std::vector<std::size_t> map;
    bool identity = false;
  };
  /// result = second after first
  struct Composition {
    std::size_t first = 0;
    std::size_t second = 0;
    std::size_t result = 0;
  };

  std::vector<std::string> objects;
  std::vector<std::vector<std::string>> points;
  std::vector<Arrow> arrows;
  std::vector<Composition> compositions;
};

/// Turns a category and per-morphism transition maps into a diagram with all
/// composition data filled in.
template <class Transition>
OrbitDiagram make_diagram(const OrbitCategory& C, std::vector<std::vector<std::string>> points,
                          Transition&& transition) {
  OrbitDiagram D;
  for (const auto& o : C.objects()) D.objects.push_back(o.key);
  D.points = std::move(points);
  for (std::size_t i = 0; i < C.morphisms().size(); ++i) {
    const auto& m = C.morphisms()[i];
    D.arrows.push_back({m.source, m.target, transition(m), m.identity});
  }
  for (std::size_t f = 0; f < C.morphisms().size(); ++f)
    for (std::size_t g = 0; g < C.morphisms().size(); ++g)
      if (C.morphisms()[f].target == C.morphisms()[g].source)
        D.compositions.push_back({f, g, C.compose(f, g)});
  return D;
}

struct CoequalizerResult {
  /// Members of each class as (object, point), sorted; classes ordered by
  /// their smallest member.
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> classes;
  /// projection[object][point] = class id
  std::vector<std::vector<std::size_t>> projection;
};

/// Checks identities and all listed compositions, then returns the quotient of
/// the disjoint union of point sets by the relation x ~ arrow(x).
/// Throws FunctorialityError naming the first violation.
CoequalizerResult colimit(const OrbitDiagram& D);
void check_functoriality(const OrbitDiagram& D);

struct MackeyReport {
  struct Violation {
    std::string h, k;
    std::size_t orbit_sum = 0, expected = 0;
  };
  std::size_t pairs_checked = 0;
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

MackeyReport verify_mackey(const PermGroup& G);

}  // namespace qstrat
