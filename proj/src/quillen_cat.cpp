#include "qstrat/quillen_cat.hpp"

#include <algorithm>
#include <numeric>

#include "qstrat/error.hpp"

namespace qstrat {

namespace {

bool maps_into(const PermGroup& G, const Subgroup& H, const Subgroup& K, ElemId w) {
  for (ElemId h : H.elements())
    if (!K.contains(G.conj(w, h))) return false;
  return true;
}

}  // namespace

OrbitCategory::OrbitCategory(PermGroup G, std::vector<SubgroupClass> objects, OrbitKind kind)
    : G_(std::move(G)), objects_(std::move(objects)), kind_(kind) {
  const std::size_t n = objects_.size();
  homs_.assign(n * n, {});
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t) {
      if (objects_[t].order() % objects_[s].order() != 0) continue;
      std::vector<bool> seen(G_.order(), false);
      for (ElemId w = 0; w < G_.order(); ++w) {
        if (seen[w] || !maps_into(G_, objects_[s].representative, objects_[t].representative, w))
          continue;
        // w is the smallest member of its class since ids are visited in order
        for (ElemId k : objects_[t].representative.elements()) {
          ElemId kw = G_.mul(k, w);
          if (kind_ == OrbitKind::orbit) {
            seen[kw] = true;
          } else {
            for (ElemId c : objects_[s].centralizer.elements()) seen[G_.mul(kw, c)] = true;
          }
        }
        const std::size_t idx = morphisms_.size();
        morphisms_.push_back({s, t, w, s == t && w == PermGroup::identity()});
        homs_[s * n + t].push_back(idx);
        index_[{s, t, w}] = idx;
      }
    }
}

std::span<const std::size_t> OrbitCategory::hom(std::size_t source, std::size_t target) const {
  return homs_.at(source * objects_.size() + target);
}

std::size_t OrbitCategory::identity(std::size_t object) const {
  return index_.at({object, object, PermGroup::identity()});
}

ElemId OrbitCategory::canonical_witness(std::size_t source, std::size_t target, ElemId w) const {
  const auto& H = objects_[source];
  const auto& K = objects_[target].representative;
  if (!maps_into(G_, H.representative, K, w))
    throw DomainError("element does not conjugate " + H.key + " into " + objects_[target].key);
  ElemId best = w;
  for (ElemId k : K.elements()) {
    ElemId kw = G_.mul(k, w);
    if (kind_ == OrbitKind::orbit) {
      best = std::min(best, kw);
    } else {
      for (ElemId c : H.centralizer.elements()) best = std::min(best, G_.mul(kw, c));
    }
  }
  return best;
}

std::size_t OrbitCategory::find(std::size_t source, std::size_t target, ElemId w) const {
  return index_.at({source, target, canonical_witness(source, target, w)});
}

std::size_t OrbitCategory::compose(std::size_t f, std::size_t g) const {
  const auto& mf = morphisms_.at(f);
  const auto& mg = morphisms_.at(g);
  if (mf.target != mg.source) throw DomainError("morphisms are not composable");
  return find(mf.source, mg.target, G_.mul(mg.witness, mf.witness));
}

OrbitCategory build_orbit_category(const PermGroup& G, const FamilySpec& F, OrbitKind kind) {
  return OrbitCategory(G, family_members(G, F), kind);
}

void check_functoriality(const OrbitDiagram& D) {
  const std::size_t n = D.objects.size();
  if (D.points.size() != n) throw DomainError("diagram needs one point set per object");
  for (std::size_t i = 0; i < D.arrows.size(); ++i) {
    const auto& a = D.arrows[i];
    if (a.source >= n || a.target >= n) throw DomainError("arrow " + std::to_string(i) + " has an unknown endpoint");
    if (a.map.size() != D.points[a.source].size())
      throw DomainError("arrow " + std::to_string(i) + " map has the wrong length");
    for (std::size_t x = 0; x < a.map.size(); ++x) {
      if (a.map[x] >= D.points[a.target].size())
        throw DomainError("arrow " + std::to_string(i) + " maps outside its target");
      if (a.identity && (a.source != a.target || a.map[x] != x))
        throw FunctorialityError("arrow " + std::to_string(i) + " is marked identity but moves point " +
                                 D.points[a.source][x]);
    }
  }
  for (const auto& c : D.compositions) {
    if (c.first >= D.arrows.size() || c.second >= D.arrows.size() || c.result >= D.arrows.size())
      throw DomainError("composition refers to an unknown arrow");
    const auto& f = D.arrows[c.first];
    const auto& g = D.arrows[c.second];
    const auto& h = D.arrows[c.result];
    if (f.target != g.source || h.source != f.source || h.target != g.target)
      throw FunctorialityError("composition of arrows " + std::to_string(c.first) + " and " +
                               std::to_string(c.second) + " has mismatched endpoints");
    for (std::size_t x = 0; x < f.map.size(); ++x)
      if (g.map[f.map[x]] != h.map[x])
        throw FunctorialityError("arrow " + std::to_string(c.second) + " after arrow " +
                                 std::to_string(c.first) + " differs from arrow " + std::to_string(c.result) +
                                 " at point " + D.points[f.source][x] + " of " + D.objects[f.source]);
  }
}

CoequalizerResult colimit(const OrbitDiagram& D) {
  check_functoriality(D);
  std::vector<std::size_t> offset{0};
  for (const auto& pts : D.points) offset.push_back(offset.back() + pts.size());
  std::vector<std::size_t> parent(offset.back());
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& a : D.arrows)
    for (std::size_t x = 0; x < a.map.size(); ++x) {
      std::size_t u = root(offset[a.source] + x), v = root(offset[a.target] + a.map[x]);
      // keep the smaller key as root so class order follows the smallest member
      if (u != v) parent[std::max(u, v)] = std::min(u, v);
    }

  CoequalizerResult out;
  std::vector<std::size_t> class_of_root(parent.size(), SIZE_MAX);
  out.projection.resize(D.points.size());
  for (std::size_t o = 0; o < D.points.size(); ++o)
    for (std::size_t x = 0; x < D.points[o].size(); ++x) {
      std::size_t r = root(offset[o] + x);
      if (class_of_root[r] == SIZE_MAX) {
        class_of_root[r] = out.classes.size();
        out.classes.emplace_back();
      }
      out.classes[class_of_root[r]].emplace_back(o, x);
      out.projection[o].push_back(class_of_root[r]);
    }
  return out;
}

MackeyReport verify_mackey(const PermGroup& G) {
  MackeyReport out;
  auto classes = subgroups_up_to_conjugacy(G);
  for (const auto& H : classes)
    for (const auto& K : classes) {
      auto d = double_cosets(G, H.representative, K.representative);
      ++out.pairs_checked;
      if (!d.mackey_holds(G.order()))
        out.violations.push_back({H.key, K.key, d.orbit_sum(G.order()), d.index_h * d.index_k});
    }
  return out;
}

}  // namespace qstrat
