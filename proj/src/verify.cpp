#include "qstrat/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <map>
#include <set>
#include <thread>

#include "qstrat/corpus.hpp"
#include "qstrat/error.hpp"
#include "qstrat/quillen_cat.hpp"
#include "qstrat/rings/arith.hpp"
#include "qstrat/rings/factor.hpp"
#include "qstrat/rings/level.hpp"
#include "qstrat/spectrum.hpp"

namespace qstrat {

namespace {

using Task = std::function<CheckOutcome()>;

struct Suite {
  std::string module;
  std::string name;
  std::function<std::vector<Task>()> tasks;
};

struct Entry {
  std::string name;
  std::string dsl;
  PermGroup G;
};

const std::vector<Entry>& corpus() {
  static const std::vector<Entry> groups = [] {
    std::vector<Entry> out;
    for (const auto& c : builtin_corpus()) out.push_back({c.name, c.dsl, build_group(c.dsl)});
    return out;
  }();
  return groups;
}

/// One task per corpus group.
std::vector<Task> per_group(std::function<void(const Entry&, CheckOutcome&)> body) {
  std::vector<Task> out;
  for (const auto& e : corpus())
    out.push_back([&e, body] {
      CheckOutcome r;
      body(e, r);
      return r;
    });
  return out;
}

Task single(std::function<void(CheckOutcome&)> body) {
  return [body] {
    CheckOutcome r;
    body(r);
    return r;
  };
}

bool supported(const TheorySpec& t, const PermGroup& G) {
  try {
    check_supported(t, G);
    return true;
  } catch (const UnsupportedError&) {
    return false;
  }
}

/// Every subgroup, found by adjoining one element at a time from the trivial group.
std::set<Subgroup> all_subgroups(const PermGroup& G) {
  std::set<Subgroup> seen{trivial_subgroup(G)};
  std::vector<Subgroup> todo(seen.begin(), seen.end());
  while (!todo.empty()) {
    Subgroup S = std::move(todo.back());
    todo.pop_back();
    for (ElemId g = 0; g < G.order(); ++g) {
      if (S.contains(g)) continue;
      ElemId gs[] = {g};
      Subgroup T = join(G, S, gs);
      if (seen.insert(T).second) todo.push_back(T);
    }
  }
  return seen;
}

std::string where(const Entry& e, const std::string& what) { return e.name + ": " + what; }

std::vector<FamilySpec> sample_families() {
  return {FamilySpec::all(),           FamilySpec::cyclic(),        FamilySpec::cyclic_p(2),
          FamilySpec::cyclic_p(3),     FamilySpec::elem_abelian_p(2), FamilySpec::abelian_p_rank(2, 1),
          FamilySpec::abelian_p_rank(2, 2)};
}

/// Height-one diagram over either orbit category; returns the labels of the
/// colimit classes' own-stratum points, sorted.
std::vector<std::string> height_one_colimit(const TheorySpec& t, const PermGroup& G, OrbitKind kind) {
  OrbitCategory C(G, family_members(G, t.family()), kind);
  std::vector<FullSpectrum> V;
  std::vector<std::vector<std::string>> labels;
  for (const auto& H : C.objects()) {
    V.push_back(full_spectrum(t, G, H));
    labels.emplace_back();
    for (const auto& p : V.back().points) labels.back().push_back(p.label);
  }
  auto D = make_diagram(C, labels, [&](const Morphism& m) {
    return transition_map(t, G, C.objects()[m.source], V[m.source], C.objects()[m.target], V[m.target], m.witness);
  });
  auto r = colimit(D);
  std::vector<std::string> out;
  for (const auto& cls : r.classes) {
    std::set<std::string> names;
    for (auto [o, x] : cls) names.insert(C.objects()[o].key + ":" + labels[o][x]);
    out.push_back(*names.begin() + "+" + std::to_string(cls.size()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

void check_space(const Entry& e, const StratifiedSpace& s, CheckOutcome& r) {
  r.expect(validate(s).empty(), where(e, s.meta.theory + " space invalid: " + validate(s)));
  r.expect(from_json(to_json(s)) == s, where(e, s.meta.theory + " JSON round trip"));
}

std::vector<Suite> suites() {
  std::vector<Suite> out;

  // groups
  out.push_back({"groups", "mackey", [] {
                   return per_group([](const Entry& e, CheckOutcome& r) {
                     auto classes = subgroups_up_to_conjugacy(e.G);
                     for (const auto& H : classes)
                       for (const auto& K : classes)
                         r.expect(double_cosets(e.G, H.representative, K.representative).mackey_holds(e.G.order()),
                                  where(e, "Mackey fails for " + H.key + ", " + K.key));
                   });
                 }});
  out.push_back({"groups", "weyl-orders", [] {
                   return per_group([](const Entry& e, CheckOutcome& r) {
                     for (const auto& H : subgroups_up_to_conjugacy(e.G)) {
                       auto w = weyl(e.G, H, WeylKind::ordinary).order;
                       auto gl = weyl(e.G, H, WeylKind::global).order;
                       auto q = weyl(e.G, H, WeylKind::quillen).order;
                       const std::size_t n = H.normalizer.order();
                       r.expect(w == n / H.order(), where(e, "ordinary Weyl order of " + H.key));
                       r.expect(q == n / H.centralizer.order(), where(e, "Quillen-Weyl order of " + H.key));
                       r.expect(w % gl == 0 && q % gl == 0, where(e, "global Weyl order divisibility at " + H.key));
                       r.expect(H.conjugates * n == e.G.order(), where(e, "conjugate count of " + H.key));
                     }
                   });
                 }});
  out.push_back({"groups", "subgroup-count", [] {
                   return per_group([](const Entry& e, CheckOutcome& r) {
                     std::size_t total = 0;
                     for (const auto& H : subgroups_up_to_conjugacy(e.G)) total += H.conjugates;
                     r.expect(total == all_subgroups(e.G).size(), where(e, "subgroup count"));
                   });
                 }});
  out.push_back({"groups", "family-closure", [] {
                   return per_group([](const Entry& e, CheckOutcome& r) {
                     auto subgroups = all_subgroups(e.G);
                     auto classes = subgroups_up_to_conjugacy(e.G);
                     for (const auto& F : sample_families()) {
                       auto members = family_members(e.G, F);
                       std::size_t expected = 0;
                       for (const auto& H : classes) expected += F.contains(e.G, H.representative);
                       r.expect(members.size() == expected, where(e, F.to_string() + " member count"));
                       r.expect(!members.empty() && members[0].order() == 1,
                                where(e, F.to_string() + " lacks the trivial class"));
                       for (const auto& H : members)
                         for (const auto& S : subgroups)
                           if (S.is_subset_of(H.representative))
                             r.expect(F.contains(e.G, S), where(e, F.to_string() + " not closed below " + H.key));
                       for (const auto& S : subgroups) {
                         bool in = F.contains(e.G, S);
                         for (ElemId g : generators_of(e.G, whole_group(e.G)))
                           r.expect(F.contains(e.G, conjugate(e.G, S, g)) == in,
                                    where(e, F.to_string() + " not conjugation invariant"));
                       }
                     }
                   });
                 }});

  // quillen-cat
  out.push_back({"quillen-cat", "automorphisms", [] {
                   return per_group([](const Entry& e, CheckOutcome& r) {
                     auto C = build_orbit_category(e.G, FamilySpec::all());
                     for (std::size_t i = 0; i < C.objects().size(); ++i) {
                       const auto& H = C.objects()[i];
                       r.expect(C.hom(i, i).size() == weyl(e.G, H, WeylKind::global).order,
                                where(e, "|Aut(" + H.key + ")| differs from the global Weyl order"));
                       r.expect(C.hom(0, i).size() == 1, where(e, "hom(e, " + H.key + ") is not a singleton"));
                     }
                   });
                 }});
  out.push_back({"quillen-cat", "composition", [] {
                   return per_group([](const Entry& e, CheckOutcome& r) {
                     if (e.G.order() > 24) return;
                     for (auto kind : {OrbitKind::orbit, OrbitKind::quillen_orbit}) {
                       auto C = build_orbit_category(e.G, FamilySpec::all(), kind);
                       const auto& M = C.morphisms();
                       for (std::size_t f = 0; f < M.size(); ++f)
                         for (std::size_t g : C.hom(M[f].target, M[f].target)) {
                           std::size_t fg = C.compose(f, g);
                           r.expect(M[fg].source == M[f].source && M[fg].target == M[g].target,
                                    where(e, "composite has wrong endpoints"));
                         }
                       for (std::size_t o = 0; o < C.objects().size(); ++o)
                         for (std::size_t f : C.hom(o, o))
                           r.expect(C.compose(C.identity(o), f) == f && C.compose(f, C.identity(o)) == f,
                                    where(e, "identity law fails"));
                     }
                   });
                 }});
  out.push_back({"quillen-cat", "orbit-vs-quillen-colimit", [] {
                   return per_group([](const Entry& e, CheckOutcome& r) {
                     for (unsigned p : {2u, 3u}) {
                       auto t = TheorySpec::parse("height1:p=" + std::to_string(p));
                       r.expect(height_one_colimit(t, e.G, OrbitKind::orbit) ==
                                    height_one_colimit(t, e.G, OrbitKind::quillen_orbit),
                                where(e, "colimits over O and O^Q differ at p=" + std::to_string(p)));
                     }
                   });
                 }});

  // rings
  out.push_back({"rings", "cyclotomic-product", [] {
                   std::vector<Task> tasks;
                   for (unsigned lo = 1; lo <= 200; lo += 50)
                     tasks.push_back(single([lo](CheckOutcome& r) {
                       PolyRing<IntegerRing> R{IntegerRing{}};
                       for (unsigned d = lo; d < lo + 50; ++d) {
                         auto prod = R.one();
                         for (auto e : divisors(d)) prod = R.mul(prod, cyclotomic_poly(static_cast<unsigned>(e)));
                         r.expect(prod == R.sub(R.monomial(mpz_class(1), d), R.one()),
                                  "product of Phi_e over e | " + std::to_string(d));
                       }
                     }));
                   return tasks;
                 }});
  out.push_back({"rings", "splitting", [] {
                   std::vector<Task> tasks;
                   for (unsigned q : primes_up_to(100))
                     tasks.push_back(single([q](CheckOutcome& r) {
                       GaloisField F(q);
                       for (unsigned d = 1; d <= 40; ++d) {
                         if (d % q == 0) continue;
                         auto f = reduce_mod(F, cyclotomic_poly(d));
                         auto factors = factor(F, f);
                         auto s = prime_splitting(d, q);
                         const std::string at = "d=" + std::to_string(d) + " q=" + std::to_string(q);
                         r.expect(factors.size() == s.count, "splitting count " + at);
                         r.expect(is_squarefree(F, f), "ramified at " + at);
                         for (const auto& g : factors)
                           r.expect(g.multiplicity == 1 && PolyRing<GaloisField>::degree(g.poly) ==
                                                               static_cast<long>(multiplicative_order(q, d)),
                                    "residue degree " + at);
                       }
                     }));
                   return tasks;
                 }});
  out.push_back({"rings", "drinfeld", [] {
                   std::vector<Task> tasks;
                   for (unsigned p : {2u, 3u, 5u, 7u, 11u, 13u})
                     tasks.push_back(single([p](CheckOutcome& r) {
                       auto d = drinfeld_check(p);
                       const std::string at = " at p=" + std::to_string(p);
                       r.expect(d.P_divides_Q && d.Q_divides_P, "mutual divisibility" + at);
                       r.expect(d.equal && d.quotient == "1", "P = Q" + at);
                       r.expect(d.separable_char0 && !d.separable_mod_p, "separability" + at);
                     }));
                   return tasks;
                 }});
  out.push_back({"rings", "cyclic-spectrum", [] {
                   std::vector<Task> tasks;
                   for (unsigned n = 1; n <= 24; ++n)
                     tasks.push_back(single([n](CheckOutcome& r) {
                       auto R = cyclic_spectrum_ring(n, 50);
                       std::vector<std::size_t> below(R.maximal.size(), 0);
                       std::map<std::pair<std::size_t, unsigned>, std::size_t> over;
                       for (auto [i, j] : R.containments) {
                         ++below[j];
                         ++over[{i, R.maximal[j].q}];
                       }
                       for (std::size_t j = 0; j < below.size(); ++j)
                         r.expect(below[j] > 0, "maximal prime over no minimal prime, n=" + std::to_string(n));
                       for (std::size_t i = 0; i < R.minimal.size(); ++i)
                         for (unsigned q : primes_up_to(50))
                           if (n % q != 0)
                             r.expect(over[{i, q}] == prime_splitting(R.minimal[i].d, q).count,
                                      "primes over Phi_" + std::to_string(R.minimal[i].d) + " at " + std::to_string(q));
                     }));
                   return tasks;
                 }});

  // strata
  out.push_back({"strata", "weyl-actions", [] {
                   return per_group([](const Entry& e, CheckOutcome& r) {
                     for (const char* name : {"height1:p=2", "height1:p=3", "ku:bound=13", "hz:p=2", "hz:p=3", "kr",
                                              "modp:q=4", "modp:q=9,deg=2", "modp:q=2,deg=3"}) {
                       auto t = TheorySpec::parse(name);
                       if (!supported(t, e.G)) continue;
                       for (const auto& H : subgroups_up_to_conjugacy(e.G)) {
                         auto S = stratum(t, e.G, H);
                         r.expect(S.empty == !t.family().contains(e.G, H.representative),
                                  where(e, std::string(name) + " emptiness law at " + H.key));
                         if (S.empty) continue;
                         r.expect(is_weyl_action(S), where(e, std::string(name) + " Weyl action at " + H.key));
                         std::size_t total = 0;
                         for (const auto& o : weyl_orbits(S)) total += o.size();
                         r.expect(total == S.points.size(), where(e, "orbits do not partition " + H.key));
                       }
                     }
                   });
                 }});
  out.push_back({"strata", "height1-counts", [] {
                   return per_group([](const Entry& e, CheckOutcome& r) {
                     for (unsigned p : {2u, 3u, 5u}) {
                       auto t = TheorySpec::parse("height1:p=" + std::to_string(p));
                       for (const auto& H : family_members(e.G, t.family()))
                         r.expect(stratum(t, e.G, H).points.size() == (H.order() == 1 ? 2u : 1u),
                                  where(e, "height-one stratum size at " + H.key));
                     }
                   });
                 }});
  out.push_back({"strata", "ku-splitting", [] {
                   return per_group([](const Entry& e, CheckOutcome& r) {
                     auto t = TheorySpec::parse("ku:bound=31");
                     for (const auto& H : family_members(e.G, t.family())) {
                       std::map<unsigned, std::size_t> above;
                       for (const auto& p : stratum(t, e.G, H).points)
                         if (p.closed) ++above[p.descriptor.q];
                       const unsigned d = static_cast<unsigned>(H.order());
                       for (unsigned q : primes_up_to(31))
                         if (d % q != 0)
                           r.expect(above[q] == prime_splitting(d, q).count,
                                    where(e, "KU primes above " + std::to_string(q) + " at " + H.key));
                     }
                   });
                 }});
  out.push_back({"strata", "modp-linear-count", [] {
                   std::vector<Task> tasks;
                   for (auto [q, group] : std::vector<std::pair<unsigned, std::string>>{
                            {2, "elem-abelian:2^2"}, {4, "elem-abelian:2^2"}, {8, "elem-abelian:2^2"},
                            {16, "elem-abelian:2^2"}, {3, "elem-abelian:3^2"}, {9, "elem-abelian:3^2"},
                            {27, "elem-abelian:3^2"}, {5, "elem-abelian:5^2"}, {25, "elem-abelian:5^2"}})
                     tasks.push_back(single([q, group](CheckOutcome& r) {
                       auto G = build_group(group);
                       auto t = TheorySpec::parse("modp:q=" + std::to_string(q));
                       auto S = stratum(t, G, subgroups_up_to_conjugacy(G).back());
                       r.expect(S.points.size() - 1 == (q + 1) - (t.p + 1),
                                "linear point count over F_" + std::to_string(q));
                     }));
                   return tasks;
                 }});

  // spectrum
  out.push_back({"spectrum", "agreement-height1", [] {
                   return per_group([](const Entry& e, CheckOutcome& r) {
                     for (unsigned p : {2u, 3u}) {
                       auto t = TheorySpec::parse("height1:p=" + std::to_string(p));
                       auto s = assemble_strong(t, e.G, e.dsl);
                       auto w = assemble_weak(t, e.G, e.dsl);
                       auto rep = check_agreement(s, w);
                       r.expect(rep.isomorphic, where(e, t.to_string() + ": " + rep.obstruction));
                       check_space(e, s, r);
                       check_space(e, w, r);
                       // fan: one closed point, everything else has a single edge into it
                       std::size_t closed = 0;
                       std::vector<std::size_t> outdeg(s.points.size(), 0);
                       for (const auto& p : s.points) closed += p.closed;
                       for (const auto& edge : s.edges) {
                         ++outdeg[edge.from];
                         r.expect(s.points[edge.to].closed, where(e, "height-one edge not into the closed point"));
                       }
                       r.expect(closed == 1, where(e, "height-one closed point count"));
                       for (const auto& p : s.points)
                         r.expect(p.closed || outdeg[p.id] == 1, where(e, "height-one fan shape at " + p.label));
                     }
                   });
                 }});
  out.push_back({"spectrum", "agreement-ku", [] {
                   auto tasks = per_group([](const Entry& e, CheckOutcome& r) {
                     auto t = TheorySpec::parse("ku");
                     auto rep = check_agreement(t, e.G, e.dsl);
                     r.expect(rep.isomorphic, where(e, "ku: " + rep.obstruction));
                   });
                   for (unsigned n = 1; n <= 12; ++n)
                     tasks.push_back(single([n](CheckOutcome& r) {
                       const std::string g = "cyclic:" + std::to_string(n);
                       auto rep = check_agreement(TheorySpec::parse("ku"), build_group(g), g);
                       r.expect(rep.isomorphic, g + " ku: " + rep.obstruction);
                     }));
                   return tasks;
                 }});
  out.push_back({"spectrum", "agreement-hz-kr", [] {
                   return per_group([](const Entry& e, CheckOutcome& r) {
                     for (const char* name : {"hz:p=2", "hz:p=3", "kr"}) {
                       auto t = TheorySpec::parse(name);
                       if (!supported(t, e.G)) continue;
                       auto s = assemble_strong(t, e.G, e.dsl);
                       auto rep = check_agreement(s, assemble_weak(t, e.G, e.dsl));
                       r.expect(rep.isomorphic, where(e, std::string(name) + ": " + rep.obstruction));
                       check_space(e, s, r);
                     }
                   });
                 }});
  out.push_back({"spectrum", "quotient-sizes", [] {
                   return per_group([](const Entry& e, CheckOutcome& r) {
                     for (const char* name : {"ku:bound=11", "modp:q=4", "modp:q=3,deg=2", "height1:p=2"}) {
                       auto t = TheorySpec::parse(name);
                       if (!supported(t, e.G)) continue;
                       auto s = assemble_strong(t, e.G, e.dsl);
                       check_space(e, s, r);
                       std::size_t orbits = 0;
                       std::map<std::string, std::size_t> per_stratum;
                       for (const auto& H : subgroups_up_to_conjugacy(e.G)) {
                         auto S = stratum(t, e.G, H);
                         if (S.empty) continue;
                         auto o = weyl_orbits(S);
                         orbits += o.size();
                         per_stratum[H.key] = o.size();
                       }
                       r.expect(s.points.size() == orbits, where(e, std::string(name) + " orbit count"));
                       std::map<std::string, std::size_t> seen;
                       for (const auto& p : s.points) ++seen[p.stratum];
                       r.expect(seen == per_stratum, where(e, std::string(name) + " stratum partition"));
                     }
                   });
                 }});
  out.push_back({"spectrum", "determinism", [] {
                   return per_group([](const Entry& e, CheckOutcome& r) {
                     auto t = TheorySpec::parse("height1:p=2");
                     r.expect(to_json(assemble_strong(t, e.G, e.dsl)) == to_json(assemble_strong(t, e.G, e.dsl)),
                              where(e, "repeated assembly differs"));
                     r.expect(to_dot(assemble_weak(t, e.G, e.dsl)) == to_dot(assemble_weak(t, e.G, e.dsl)),
                              where(e, "repeated DOT output differs"));
                   });
                 }});
  return out;
}

}  // namespace

unsigned default_thread_count() {
  if (const char* env = std::getenv("QUILLEN_STRATA_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(std::min(v, 256L));
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<CheckOutcome> run_parallel(const std::vector<Task>& tasks, unsigned threads) {
  std::vector<CheckOutcome> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        results[i] = tasks[i]();
      } catch (const std::exception& ex) {
        results[i].checks += 1;
        results[i].failures.push_back(std::string("exception: ") + ex.what());
      }
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(tasks.size())));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < n; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return results;
}

std::vector<std::string> verification_suites() {
  std::vector<std::string> out;
  for (const auto& s : suites()) out.push_back(s.module + "/" + s.name);
  return out;
}

std::vector<SuiteResult> run_verification(const std::vector<std::string>& names, unsigned threads) {
  auto all = suites();
  std::vector<const Suite*> chosen;
  for (const auto& name : names) {
    bool found = false;
    for (const auto& s : all)
      if (name == s.module || name == s.module + "/" + s.name) {
        chosen.push_back(&s);
        found = true;
      }
    if (!found) throw ParseError("unknown verification suite '" + name + "'");
  }
  if (names.empty())
    for (const auto& s : all) chosen.push_back(&s);

  corpus();  // build once before workers share it
  std::vector<SuiteResult> out;
  for (const Suite* s : chosen) {
    if (std::any_of(out.begin(), out.end(), [&](auto& r) { return r.module == s->module && r.name == s->name; }))
      continue;
    auto start = std::chrono::steady_clock::now();
    SuiteResult res{s->module, s->name, 0, {}, 0};
    for (auto& o : run_parallel(s->tasks(), threads)) {
      res.checks += o.checks;
      res.failures.insert(res.failures.end(), o.failures.begin(), o.failures.end());
    }
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.push_back(std::move(res));
  }
  return out;
}

}  // namespace qstrat
