#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "qstrat/corpus.hpp"
#include "qstrat/error.hpp"
#include "qstrat/quillen_cat.hpp"
#include "qstrat/rings/arith.hpp"
#include "qstrat/strata.hpp"

using namespace qstrat;

namespace {

const SubgroupClass& class_of_order(const std::vector<SubgroupClass>& classes, std::size_t n) {
  for (const auto& c : classes)
    if (c.order() == n) return c;
  throw std::runtime_error("no class of that order");
}

std::vector<std::string> labels(const StratumModel& S) {
  std::vector<std::string> out;
  for (const auto& p : S.points) out.push_back(p.label);
  return out;
}

bool supported(const TheorySpec& t, const PermGroup& G) {
  try {
    check_supported(t, G);
    return true;
  } catch (const UnsupportedError&) {
    return false;
  }
}

std::vector<TheorySpec> theories() {
  return {TheorySpec::parse("height1:p=2"), TheorySpec::parse("height1:p=3"), TheorySpec::parse("ku:bound=13"),
          TheorySpec::parse("hz:p=2"),      TheorySpec::parse("hz:p=3"),      TheorySpec::parse("kr"),
          TheorySpec::parse("modp:q=4"),    TheorySpec::parse("modp:q=9,deg=2")};
}

}  // namespace

TEST(TheorySpec, ParseAndPrint) {
  EXPECT_EQ(TheorySpec::parse("height1:p=2").to_string(), "height1:p=2");
  EXPECT_EQ(TheorySpec::parse("ku").to_string(), "ku");
  EXPECT_EQ(TheorySpec::parse("hz:p=3").to_string(), "hz:p=3");
  EXPECT_EQ(TheorySpec::parse("modp:q=4,deg=1").to_string(), "modp:q=4,deg=1");
  EXPECT_EQ(TheorySpec::parse("mod-p:q=4").to_string(), "modp:q=4,deg=1");
  EXPECT_EQ(TheorySpec::parse("kr").to_string(), "kr");

  auto t = TheorySpec::parse("modp:q=8,deg=2,bound=7");
  EXPECT_EQ(t.p, 2u);
  EXPECT_EQ(t.q, 8u);
  EXPECT_EQ(t.degree_bound, 2u);
  EXPECT_EQ(t.prime_bound, 7u);
  EXPECT_EQ(TheorySpec::parse("ku").prime_bound, 19u);
  EXPECT_EQ(TheorySpec::parse(t.to_string() + ",bound=7"), t);
}

TEST(TheorySpec, Errors) {
  for (const char* bad : {"", "height1", "height1:p=4", "hz:p=x", "modp:q=6", "modp", "ku:p", "ku:deg=0",
                          "elliptic", "kr:foo=1", "hz:p=2,p=3"})
    EXPECT_THROW(TheorySpec::parse(bad), ParseError) << bad;
  EXPECT_THROW(TheorySpec::parse("ku:bound=1001"), BoundError);
}

TEST(TheorySpec, Families) {
  EXPECT_EQ(TheorySpec::parse("height1:p=3").family(), FamilySpec::cyclic_p(3));
  EXPECT_EQ(TheorySpec::parse("ku").family(), FamilySpec::cyclic());
  EXPECT_EQ(TheorySpec::parse("modp:q=9").family(), FamilySpec::elem_abelian_p(3));
  EXPECT_FALSE(TheorySpec::parse("modp:q=4").has_transition_maps());
  EXPECT_TRUE(TheorySpec::parse("hz:p=2").has_transition_maps());
}

TEST(WeylActionKind, Examples) {
  EXPECT_EQ(weyl_action_kind(TheorySpec::parse("height1:p=2"), true), WeylKind::quillen);
  EXPECT_EQ(weyl_action_kind(TheorySpec::parse("modp:q=4"), true), WeylKind::quillen);
  EXPECT_EQ(weyl_action_kind(TheorySpec::parse("ku"), false), WeylKind::global);
  EXPECT_EQ(weyl_action_kind(false, true), WeylKind::ordinary);
}

TEST(Support, Rejections) {
  EXPECT_THROW(check_supported(TheorySpec::parse("hz:p=2"), build_group("sym:3")), UnsupportedError);
  EXPECT_THROW(check_supported(TheorySpec::parse("hz:p=2"), build_group("cyclic:9")), UnsupportedError);
  EXPECT_THROW(check_supported(TheorySpec::parse("hz:p=2"), build_group("elem-abelian:2^2")), UnsupportedError);
  EXPECT_NO_THROW(check_supported(TheorySpec::parse("hz:p=3"), build_group("cyclic:9")));
  EXPECT_THROW(check_supported(TheorySpec::parse("kr"), build_group("cyclic:4")), UnsupportedError);
  EXPECT_THROW(check_supported(TheorySpec::parse("modp:q=2"), build_group("elem-abelian:2^3")), UnsupportedError);
  EXPECT_NO_THROW(check_supported(TheorySpec::parse("modp:q=2"), build_group("dihedral:4")));

  auto G = build_group("elem-abelian:2^2");
  auto classes = subgroups_up_to_conjugacy(G);
  EXPECT_THROW(full_spectrum(TheorySpec::parse("modp:q=4"), G, classes[0]), UnsupportedError);
}

TEST(Stratum, HeightOneExamples) {
  auto G = build_group("cyclic:4");
  auto classes = subgroups_up_to_conjugacy(G);
  auto t = TheorySpec::parse("height1:p=2");

  auto top = stratum(t, G, class_of_order(classes, 4));
  EXPECT_EQ(labels(top), std::vector<std::string>{"Q_2(zeta_4)"});
  EXPECT_FALSE(top.points[0].closed);

  auto bottom = stratum(t, G, classes[0]);
  EXPECT_EQ(labels(bottom), (std::vector<std::string>{"Q_2", "F_2"}));
  EXPECT_TRUE(bottom.points[1].closed);
  EXPECT_EQ(bottom.internal_order, (std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}}));
}

TEST(Stratum, HeightOnePointCounts) {
  for (const auto& entry : builtin_corpus()) {
    auto G = build_group(entry.dsl);
    for (unsigned p : {2u, 3u}) {
      auto t = TheorySpec::parse("height1:p=" + std::to_string(p));
      for (const auto& H : family_members(G, t.family()))
        EXPECT_EQ(stratum(t, G, H).points.size(), H.order() == 1 ? 2u : 1u) << entry.name;
    }
  }
}

TEST(Stratum, SymmetricThreeActsTrivially) {
  auto G = build_group("sym:3");
  auto S = stratum(TheorySpec::parse("height1:p=3"), G, class_of_order(subgroups_up_to_conjugacy(G), 3));
  EXPECT_EQ(S.weyl.kind, WeylKind::quillen);
  EXPECT_EQ(S.weyl.order, 2u);
  for (const auto& g : S.weyl_action) EXPECT_TRUE(g.is_identity());
  EXPECT_TRUE(is_weyl_action(S));
}

TEST(Stratum, KUCyclicTwo) {
  auto G = build_group("cyclic:2");
  auto S = stratum(TheorySpec::parse("ku:bound=7"), G, class_of_order(subgroups_up_to_conjugacy(G), 2));
  EXPECT_EQ(labels(S), (std::vector<std::string>{"Q(zeta_2)", "F_3 via (3, x + 1)", "F_5 via (5, x + 1)",
                                                 "F_7 via (7, x + 1)"}));
  EXPECT_TRUE(S.truncated);
  for (const auto& p : S.points) EXPECT_NE(p.descriptor.q, 2u);
  EXPECT_EQ(S.internal_order.size(), 3u);
}

TEST(Stratum, KUSplittingCounts) {
  auto t = TheorySpec::parse("ku:bound=31");
  for (unsigned n : {5u, 7u, 8u, 12u, 15u}) {
    auto G = build_group("cyclic:" + std::to_string(n));
    for (const auto& H : subgroups_up_to_conjugacy(G)) {
      auto S = stratum(t, G, H);
      std::map<unsigned, std::size_t> above;
      for (const auto& p : S.points)
        if (p.closed) ++above[p.descriptor.q];
      const unsigned d = static_cast<unsigned>(H.order());
      for (unsigned q : primes_up_to(31))
        if (d % q != 0) EXPECT_EQ(above[q], prime_splitting(d, q).count) << n << " " << d << " " << q;
    }
  }
}

TEST(Stratum, KUGaloisAction) {
  // D5 acts on the C5 stratum through x -> x^-1
  auto G = build_group("dihedral:5");
  auto S = stratum(TheorySpec::parse("ku:bound=31"), G, class_of_order(subgroups_up_to_conjugacy(G), 5));
  EXPECT_EQ(S.weyl.order, 2u);
  ASSERT_TRUE(is_weyl_action(S));
  std::map<unsigned, std::size_t> orbits_above;
  for (const auto& orbit : weyl_orbits(S))
    if (S.points[orbit[0]].closed) ++orbits_above[S.points[orbit[0]].descriptor.q];
  // q = 1 mod 5: four linear factors, inversion pairs them; q = 4 mod 5: two
  // self-reciprocal quadratics; q = 2, 3 mod 5: Phi_5 stays irreducible
  EXPECT_EQ(orbits_above[11], 2u);
  EXPECT_EQ(orbits_above[31], 2u);
  EXPECT_EQ(orbits_above[19], 2u);
  EXPECT_EQ(orbits_above[29], 2u);
  EXPECT_EQ(orbits_above[2], 1u);
  EXPECT_EQ(orbits_above[3], 1u);
}

TEST(Stratum, ModPKleinFour) {
  auto G = build_group("dihedral:4");
  auto t = TheorySpec::parse("modp:q=4,deg=1");
  std::size_t seen = 0;
  for (const auto& E : subgroups_up_to_conjugacy(G)) {
    if (E.order() != 4 || cyclic_generator(G, E.representative)) continue;
    ++seen;
    auto S = stratum(t, G, E);
    EXPECT_EQ(labels(S), (std::vector<std::string>{"(0)", "(x + a*y)", "(x + a^2*y)"})) << E.key;
    EXPECT_EQ(S.weyl.kind, WeylKind::quillen);
    EXPECT_EQ(S.weyl.order, 2u);
    EXPECT_TRUE(is_weyl_action(S));
    EXPECT_EQ(weyl_orbits(S), (std::vector<std::vector<std::size_t>>{{0}, {1, 2}})) << E.key;
  }
  EXPECT_EQ(seen, 2u);
}

TEST(Stratum, ModPLinearPointCount) {
  for (auto [q, group] : std::vector<std::pair<unsigned, const char*>>{
           {2, "elem-abelian:2^2"}, {4, "elem-abelian:2^2"}, {8, "elem-abelian:2^2"}, {16, "elem-abelian:2^2"},
           {3, "elem-abelian:3^2"}, {9, "elem-abelian:3^2"}, {25, "elem-abelian:5^2"}}) {
    auto G = build_group(group);
    auto t = TheorySpec::parse("modp:q=" + std::to_string(q));
    auto S = stratum(t, G, subgroups_up_to_conjugacy(G).back());
    EXPECT_EQ(S.points.size() - 1, (q + 1) - (t.p + 1)) << q;
  }
}

TEST(Stratum, ModPHigherDegree) {
  // degree 2 irreducible forms over F_3: monic irreducible quadratics, 3 of them
  auto G = build_group("elem-abelian:3^2");
  auto S = stratum(TheorySpec::parse("modp:q=3,deg=2"), G, subgroups_up_to_conjugacy(G).back());
  EXPECT_EQ(S.points.size(), 1u + 3u);
  EXPECT_TRUE(is_weyl_action(S));
  auto A4 = build_group("alt:4");
  auto V = class_of_order(subgroups_up_to_conjugacy(A4), 4);
  auto T = stratum(TheorySpec::parse("modp:q=4,deg=2"), A4, V);
  EXPECT_EQ(T.weyl.order, 3u);
  EXPECT_TRUE(is_weyl_action(T));
}

TEST(Stratum, HZAndKR) {
  auto G = build_group("cyclic:4");
  auto classes = subgroups_up_to_conjugacy(G);
  auto hz = TheorySpec::parse("hz:p=2,bound=7");
  auto e = stratum(hz, G, classes[0]);
  EXPECT_EQ(labels(e), (std::vector<std::string>{"(0)", "(2)", "(3)", "(5)", "(7)"}));
  EXPECT_TRUE(e.truncated);
  for (const auto& H : {classes[1], classes[2]}) {
    auto S = stratum(hz, G, H);
    EXPECT_EQ(labels(S), (std::vector<std::string>{"(0)", "(t)"}));
    EXPECT_EQ(S.internal_order.size(), 1u);
  }

  auto C2 = build_group("cyclic:2");
  auto kr = TheorySpec::parse("kr:bound=5");
  auto kc = subgroups_up_to_conjugacy(C2);
  EXPECT_EQ(labels(stratum(kr, C2, kc[0])), (std::vector<std::string>{"(0)", "(2)", "(3)", "(5)"}));
  auto top = stratum(kr, C2, kc[1]);
  EXPECT_TRUE(top.empty);
  EXPECT_FALSE(top.empty_reason.empty());
  EXPECT_TRUE(top.points.empty());
}

TEST(Stratum, WeylActionsAndEmptinessLaw) {
  for (const auto& entry : builtin_corpus()) {
    auto G = build_group(entry.dsl);
    for (const auto& t : theories()) {
      if (!supported(t, G)) continue;
      for (const auto& H : subgroups_up_to_conjugacy(G)) {
        auto S = stratum(t, G, H);
        EXPECT_EQ(S.empty, !t.family().contains(G, H.representative)) << entry.name << " " << t.to_string();
        if (S.empty) continue;
        EXPECT_TRUE(is_weyl_action(S)) << entry.name << " " << t.to_string() << " " << H.key;
        std::size_t total = 0;
        for (const auto& orbit : weyl_orbits(S)) {
          total += orbit.size();
          for (std::size_t x : orbit) EXPECT_EQ(S.points[x].closed, S.points[orbit[0]].closed);
        }
        EXPECT_EQ(total, S.points.size());
        for (auto [a, b] : S.internal_order) EXPECT_TRUE(a < S.points.size() && b < S.points.size() && a != b);
      }
    }
  }
}

TEST(FullSpectrum, HeightOneFan) {
  auto G = build_group("cyclic:8");
  auto t = TheorySpec::parse("height1:p=2");
  auto V = full_spectrum(t, G, subgroups_up_to_conjugacy(G).back());
  ASSERT_EQ(V.points.size(), 5u);
  EXPECT_EQ(V.points[0].label, "F_2");
  EXPECT_EQ(V.edges.size(), 4u);
  for (const auto& e : V.edges) EXPECT_EQ(e.to, 0u);
  EXPECT_EQ(V.support.back().order(), 8u);
}

TEST(FullSpectrum, HZExternalEdges) {
  auto G = build_group("cyclic:9");
  auto V = full_spectrum(TheorySpec::parse("hz:p=3,bound=5"), G, subgroups_up_to_conjugacy(G).back());
  // (0),(2),(3),(5) plus two 2-point strata
  EXPECT_EQ(V.points.size(), 8u);
  std::size_t external = 0;
  for (const auto& e : V.edges)
    if (e.external) {
      ++external;
      EXPECT_EQ(e.provenance, "Balmer–Gallauer");
    }
  EXPECT_EQ(external, 2u);
}

TEST(TransitionMap, Examples) {
  auto t = TheorySpec::parse("height1:p=2");
  auto G = build_group("cyclic:4");
  auto C = build_orbit_category(G, t.family());
  auto c2 = C.objects()[1], c4 = C.objects()[2];
  auto V2 = full_spectrum(t, G, c2), V4 = full_spectrum(t, G, c4);
  auto inc = transition_map(t, G, c2, V2, c4, V4, C.morphisms()[C.hom(1, 2)[0]].witness);
  ASSERT_EQ(inc.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(V4.points[inc[i]].label, V2.points[i].label);
  auto id = transition_map(t, G, c4, V4, c4, V4, PermGroup::identity());
  for (std::size_t i = 0; i < id.size(); ++i) EXPECT_EQ(id[i], i);

  auto S3 = build_group("sym:3");
  auto t3 = TheorySpec::parse("height1:p=3");
  auto D = build_orbit_category(S3, t3.family());
  auto V3 = full_spectrum(t3, S3, D.objects()[1]);
  for (std::size_t f : D.hom(1, 1)) {
    auto m = transition_map(t3, S3, D.objects()[1], V3, D.objects()[1], V3, D.morphisms()[f].witness);
    for (std::size_t i = 0; i < m.size(); ++i) EXPECT_EQ(m[i], i);
  }
}

TEST(TransitionMap, KUInclusionsAndFunctoriality) {
  auto t = TheorySpec::parse("ku:bound=13");
  for (const char* spec : {"cyclic:6", "cyclic:12", "dihedral:5", "dihedral:6", "sym:4", "quaternion:8"}) {
    auto G = build_group(spec);
    auto C = build_orbit_category(G, t.family());
    std::vector<FullSpectrum> V;
    std::vector<std::vector<std::string>> pts;
    for (const auto& H : C.objects()) {
      V.push_back(full_spectrum(t, G, H));
      pts.emplace_back();
      for (const auto& p : V.back().points) pts.back().push_back(p.label);
    }
    auto D = make_diagram(C, pts, [&](const Morphism& m) {
      return transition_map(t, G, C.objects()[m.source], V[m.source], C.objects()[m.target], V[m.target],
                            m.witness);
    });
    EXPECT_NO_THROW(check_functoriality(D)) << spec;
    // maps preserve closedness
    for (const auto& a : D.arrows)
      for (std::size_t x = 0; x < a.map.size(); ++x)
        EXPECT_EQ(V[a.source].points[x].closed, V[a.target].points[a.map[x]].closed) << spec;
  }
}

TEST(TransitionMap, KUInclusionOfMinimalPrimes) {
  auto t = TheorySpec::parse("ku:bound=7");
  auto G = build_group("cyclic:6");
  auto C = build_orbit_category(G, t.family());
  auto c3 = C.objects()[2], c6 = C.objects()[3];
  ASSERT_EQ(c3.order(), 3u);
  auto V3 = full_spectrum(t, G, c3), V6 = full_spectrum(t, G, c6);
  auto m = transition_map(t, G, c3, V3, c6, V6, C.morphisms()[C.hom(2, 3)[0]].witness);
  for (std::size_t i = 0; i < V3.points.size(); ++i)
    if (!V3.points[i].closed) EXPECT_EQ(V6.points[m[i]].label, V3.points[i].label);
}

TEST(TransitionMap, HeightOneFunctorialOverCorpus) {
  for (const auto& entry : builtin_corpus()) {
    auto G = build_group(entry.dsl);
    for (unsigned p : {2u, 3u}) {
      auto t = TheorySpec::parse("height1:p=" + std::to_string(p));
      auto C = build_orbit_category(G, t.family());
      std::vector<FullSpectrum> V;
      std::vector<std::vector<std::string>> pts;
      for (const auto& H : C.objects()) {
        V.push_back(full_spectrum(t, G, H));
        pts.emplace_back();
        for (const auto& q : V.back().points) pts.back().push_back(q.label);
      }
      auto D = make_diagram(C, pts, [&](const Morphism& m) {
        return transition_map(t, G, C.objects()[m.source], V[m.source], C.objects()[m.target], V[m.target],
                              m.witness);
      });
      EXPECT_NO_THROW(check_functoriality(D)) << entry.name;
    }
  }
}
