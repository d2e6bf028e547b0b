#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "qstrat/corpus.hpp"
#include "qstrat/error.hpp"
#include "qstrat/quillen_cat.hpp"

using namespace qstrat;

namespace {

std::size_t object_of_order(const OrbitCategory& C, std::size_t n) {
  for (std::size_t i = 0; i < C.objects().size(); ++i)
    if (C.objects()[i].order() == n) return i;
  throw std::runtime_error("no object of that order");
}

// Brute force: Aut_{O^Q}(H) = conjugations by N_G(H) modulo those agreeing up to H.
std::size_t oracle_quillen_aut(const PermGroup& G, const SubgroupClass& H) {
  std::set<std::vector<ElemId>> maps;
  for (ElemId n : H.normalizer.elements())
    for (ElemId h0 : H.representative.elements()) {
      std::vector<ElemId> images;
      for (ElemId h : H.representative.elements()) images.push_back(G.conj(h0, G.conj(n, h)));
      maps.insert(images);
    }
  // each class of maps has |H / Z(H)| members that differ by inner automorphisms
  std::set<std::vector<ElemId>> inner;
  for (ElemId h0 : H.representative.elements()) {
    std::vector<ElemId> images;
    for (ElemId h : H.representative.elements()) images.push_back(G.conj(h0, h));
    inner.insert(images);
  }
  return maps.size() / inner.size();
}

OrbitDiagram single_object(std::vector<std::string> points) {
  OrbitDiagram D;
  D.objects = {"A"};
  std::vector<std::size_t> id(points.size());
  for (std::size_t i = 0; i < id.size(); ++i) id[i] = i;
  D.points = {std::move(points)};
  D.arrows = {{0, 0, id, true}};
  D.compositions = {{0, 0, 0}};
  return D;
}

std::set<std::set<std::string>> named_partition(const OrbitDiagram& D, const CoequalizerResult& r) {
  std::set<std::set<std::string>> out;
  for (const auto& cls : r.classes) {
    std::set<std::string> names;
    for (auto [o, x] : cls) names.insert(D.objects[o] + ":" + D.points[o][x]);
    out.insert(names);
  }
  return out;
}

}  // namespace

TEST(OrbitCategory, HomFromTrivialIsSingleton) {
  for (const char* spec : {"sym:3", "dihedral:4", "alt:4", "quaternion:8"}) {
    auto G = build_group(spec);
    auto C = build_orbit_category(G, FamilySpec::all());
    auto O = build_orbit_category(G, FamilySpec::all(), OrbitKind::orbit);
    for (std::size_t t = 0; t < C.objects().size(); ++t) {
      EXPECT_EQ(C.hom(0, t).size(), 1u) << spec;
      // in the orbit category this is the whole of G/H
      EXPECT_EQ(O.hom(0, t).size(), G.order() / O.objects()[t].order()) << spec;
    }
  }
}

TEST(OrbitCategory, Examples) {
  auto s3 = build_group("sym:3");
  auto C = build_orbit_category(s3, FamilySpec::cyclic_p(3));
  ASSERT_EQ(C.objects().size(), 2u);
  std::size_t c3 = object_of_order(C, 3);
  EXPECT_EQ(C.hom(c3, c3).size(), 2u);
  EXPECT_EQ(C.hom(c3, c3).size(), weyl(s3, C.objects()[c3], WeylKind::quillen).order);

  auto c4 = build_group("cyclic:4");
  auto D = build_orbit_category(c4, FamilySpec::cyclic_p(2));
  EXPECT_EQ(D.hom(object_of_order(D, 2), object_of_order(D, 4)).size(), 1u);
  EXPECT_EQ(D.hom(object_of_order(D, 4), object_of_order(D, 2)).size(), 0u);
}

TEST(OrbitCategory, AutomorphismsAreGlobalWeylGroup) {
  for (const auto& entry : builtin_corpus()) {
    auto G = build_group(entry.dsl);
    auto C = build_orbit_category(G, FamilySpec::all());
    for (std::size_t i = 0; i < C.objects().size(); ++i) {
      const auto& H = C.objects()[i];
      EXPECT_EQ(C.hom(i, i).size(), weyl(G, H, WeylKind::global).order) << entry.name << " " << H.key;
      EXPECT_EQ(C.hom(i, i).size(), oracle_quillen_aut(G, H)) << entry.name << " " << H.key;
    }
  }
}

TEST(OrbitCategory, OrbitAutomorphismsAreOrdinaryWeylGroup) {
  for (const char* spec : {"sym:4", "dihedral:6", "alt:4"}) {
    auto G = build_group(spec);
    auto C = build_orbit_category(G, FamilySpec::all(), OrbitKind::orbit);
    for (std::size_t i = 0; i < C.objects().size(); ++i)
      EXPECT_EQ(C.hom(i, i).size(), weyl(G, C.objects()[i], WeylKind::ordinary).order) << spec;
  }
}

TEST(OrbitCategory, HomSetsMatchDoubleCosetCount) {
  // O_F(G)(H, K) is (G/K)^H, whose size is a fixed point count on cosets
  for (const char* spec : {"sym:4", "dihedral:4", "dicyclic:12"}) {
    auto G = build_group(spec);
    auto C = build_orbit_category(G, FamilySpec::all(), OrbitKind::orbit);
    for (std::size_t s = 0; s < C.objects().size(); ++s)
      for (std::size_t t = 0; t < C.objects().size(); ++t) {
        const auto& H = C.objects()[s].representative;
        const auto& K = C.objects()[t].representative;
        std::size_t fixed = 0;
        for (ElemId g = 0; g < G.order(); ++g) {
          bool ok = true;
          for (ElemId h : H.elements()) ok = ok && K.contains(G.conj(g, h));
          fixed += ok;
        }
        EXPECT_EQ(C.hom(s, t).size() * K.order(), fixed) << spec;
      }
  }
}

TEST(OrbitCategory, CompositionIsClosedAndAssociative) {
  for (const char* spec : {"sym:4", "dihedral:4", "quaternion:8"}) {
    auto G = build_group(spec);
    for (auto kind : {OrbitKind::orbit, OrbitKind::quillen_orbit}) {
      auto C = build_orbit_category(G, FamilySpec::all(), kind);
      const auto& M = C.morphisms();
      for (std::size_t o = 0; o < C.objects().size(); ++o) {
        EXPECT_TRUE(M[C.identity(o)].identity);
        for (std::size_t f : C.hom(o, o)) {
          EXPECT_EQ(C.compose(C.identity(o), f), f);
          EXPECT_EQ(C.compose(f, C.identity(o)), f);
        }
      }
      for (std::size_t f = 0; f < M.size(); ++f)
        for (std::size_t g = 0; g < M.size(); ++g) {
          if (M[f].target != M[g].source) continue;
          std::size_t fg = C.compose(f, g);
          EXPECT_EQ(M[fg].source, M[f].source);
          EXPECT_EQ(M[fg].target, M[g].target);
          for (std::size_t h = 0; h < M.size(); ++h)
            if (M[g].target == M[h].source) EXPECT_EQ(C.compose(fg, h), C.compose(f, C.compose(g, h)));
        }
    }
  }
}

TEST(OrbitCategory, CanonicalWitnessRejectsNonMorphism) {
  auto G = build_group("sym:3");
  auto C = build_orbit_category(G, FamilySpec::all());
  std::size_t c3 = object_of_order(C, 3), c2 = object_of_order(C, 2);
  EXPECT_THROW(C.canonical_witness(c3, c2, 0), DomainError);
}

TEST(Colimit, IdentityDiagram) {
  auto D = single_object({"a", "b", "c"});
  auto r = colimit(D);
  ASSERT_EQ(r.classes.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(r.projection[0][i], i);
}

TEST(Colimit, Fold) {
  OrbitDiagram D;
  D.objects = {"A", "B"};
  D.points = {{"x", "y"}, {"z"}};
  D.arrows = {{0, 0, {0, 1}, true}, {1, 1, {0}, true}, {0, 1, {0, 0}, false}, {0, 1, {0, 0}, false}};
  auto r = colimit(D);
  ASSERT_EQ(r.classes.size(), 1u);
  EXPECT_EQ(r.classes[0].size(), 3u);
}

TEST(Colimit, DetectsFunctorialityViolations) {
  OrbitDiagram D = single_object({"a", "b"});
  D.arrows.push_back({0, 0, {1, 0}, false});
  D.compositions.push_back({1, 1, 0});  // swap after swap is the identity
  EXPECT_NO_THROW(colimit(D));

  D.arrows[1].map = {0, 0};
  try {
    colimit(D);
    FAIL() << "expected a functoriality error";
  } catch (const FunctorialityError& e) {
    EXPECT_NE(std::string(e.what()).find("arrow 1 after arrow 1"), std::string::npos) << e.what();
  }

  OrbitDiagram bad_identity = single_object({"a", "b"});
  bad_identity.arrows[0].map = {1, 0};
  EXPECT_THROW(colimit(bad_identity), FunctorialityError);

  OrbitDiagram malformed = single_object({"a"});
  malformed.arrows[0].map = {3};
  EXPECT_THROW(colimit(malformed), DomainError);
}

TEST(Colimit, IdempotentOnQuotient) {
  OrbitDiagram D;
  D.objects = {"A", "B"};
  D.points = {{"p", "q", "r"}, {"s", "t"}};
  D.arrows = {{0, 0, {0, 1, 2}, true}, {1, 1, {0, 1}, true}, {0, 1, {0, 0, 1}, false}};
  auto r = colimit(D);
  ASSERT_EQ(r.classes.size(), 2u);

  std::vector<std::string> names;
  for (std::size_t i = 0; i < r.classes.size(); ++i) names.push_back("c" + std::to_string(i));
  auto again = colimit(single_object(names));
  EXPECT_EQ(again.classes.size(), r.classes.size());
}

TEST(Colimit, RelabelingInvariance) {
  OrbitDiagram D;
  D.objects = {"A", "B"};
  D.points = {{"p", "q", "r", "u"}, {"s", "t", "v"}};
  D.arrows = {{0, 0, {0, 1, 2, 3}, true}, {1, 1, {0, 1, 2}, true}, {0, 1, {1, 0, 1, 2}, false}};
  auto base = named_partition(D, colimit(D));

  // reverse the point order of B and rewrite the maps accordingly
  OrbitDiagram E = D;
  E.points[1] = {"v", "t", "s"};
  auto flip = [](std::size_t x) { return 2 - x; };
  for (auto& a : E.arrows) {
    if (a.target == 1)
      for (auto& x : a.map) x = flip(x);
  }
  E.arrows[1].map = {0, 1, 2};
  EXPECT_EQ(named_partition(E, colimit(E)), base);
}

TEST(Colimit, OrbitAndQuillenOrbitAgree) {
  // points of H: H-conjugacy classes of cyclic subgroups of H, moved by
  // conjugation; the quotient is the set of G-classes of cyclic subgroups
  for (const char* spec : {"sym:3", "dihedral:4", "alt:4", "sym:4"}) {
    auto G = build_group(spec);
    auto all = subgroups_up_to_conjugacy(G);
    // canonical member of the class of c under conjugation by K
    auto canonical_under = [&](const Subgroup& c, const Subgroup& K) {
      Subgroup best = c;
      for (ElemId k : K.elements()) best = std::min(best, conjugate(G, c, k));
      return best;
    };
    std::vector<std::vector<std::size_t>> results;
    for (auto kind : {OrbitKind::orbit, OrbitKind::quillen_orbit}) {
      auto C = build_orbit_category(G, FamilySpec::all(), kind);
      std::vector<std::vector<Subgroup>> cyclic;
      std::vector<std::vector<std::string>> labels;
      for (const auto& H : C.objects()) {
        std::set<Subgroup> found;
        for (ElemId h : H.representative.elements())
          found.insert(canonical_under(closure(G, std::vector<ElemId>{h}), H.representative));
        cyclic.emplace_back(found.begin(), found.end());
        labels.emplace_back();
        for (const auto& c : cyclic.back()) labels.back().push_back(std::to_string(c.elements().back()));
      }
      auto D = make_diagram(C, labels, [&](const Morphism& m) {
        std::vector<std::size_t> map;
        const auto& K = C.objects()[m.target].representative;
        for (const auto& c : cyclic[m.source]) {
          auto image = canonical_under(conjugate(G, c, m.witness), K);
          auto it = std::find(cyclic[m.target].begin(), cyclic[m.target].end(), image);
          map.push_back(static_cast<std::size_t>(it - cyclic[m.target].begin()));
        }
        return map;
      });
      auto r = colimit(D);
      std::vector<std::size_t> classes;
      for (const auto& cls : r.classes) {
        std::set<std::size_t> g_classes;
        for (auto [o, x] : cls) g_classes.insert(find_class(G, all, cyclic[o][x]));
        EXPECT_EQ(g_classes.size(), 1u) << spec;
        classes.push_back(*g_classes.begin());
      }
      std::sort(classes.begin(), classes.end());
      results.push_back(classes);
    }
    EXPECT_EQ(results[0], results[1]) << spec;
    std::size_t cyclic_classes = 0;
    for (const auto& H : all) cyclic_classes += cyclic_generator(G, H.representative).has_value();
    EXPECT_EQ(results[0].size(), cyclic_classes) << spec;
  }
}

TEST(Mackey, Examples) {
  auto trivial = verify_mackey(build_group("cyclic:1"));
  EXPECT_TRUE(trivial.ok());
  EXPECT_EQ(trivial.pairs_checked, 1u);

  auto d4 = verify_mackey(build_group("dihedral:4"));
  EXPECT_TRUE(d4.ok());
  EXPECT_EQ(d4.pairs_checked, 64u);

  auto s4 = verify_mackey(build_group("sym:4"));
  EXPECT_TRUE(s4.ok());
  EXPECT_EQ(s4.pairs_checked, 121u);
}
