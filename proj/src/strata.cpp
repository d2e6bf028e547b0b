#include "qstrat/strata.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "qstrat/error.hpp"
#include "qstrat/rings/arith.hpp"
#include "qstrat/rings/factor.hpp"

namespace qstrat {

namespace {

using Kind = TheorySpec::Kind;
using Ring = PrimeDescriptor::Ring;
using DKind = PrimeDescriptor::Kind;

unsigned parse_uint(std::string_view key, std::string_view v) {
  if (v.empty() || v.size() > 9 || !std::all_of(v.begin(), v.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw ParseError("theory parameter " + std::string(key) + " needs a number, got '" + std::string(v) + "'");
  return static_cast<unsigned>(std::stoul(std::string(v)));
}

PrimeDescriptor descriptor(Ring ring, DKind kind, std::uint32_t parameter, std::uint32_t q,
                           std::vector<std::int64_t> generator, std::string text) {
  PrimeDescriptor d;
  d.ring = ring;
  d.kind = kind;
  d.parameter = parameter;
  d.q = q;
  d.generator = std::move(generator);
  d.text = std::move(text);
  return d;
}

PrimeDescriptor zero_ideal(Ring ring, std::uint32_t parameter) {
  return descriptor(ring, DKind::generic, parameter, 0, {}, "(0)");
}

std::string with_zeta(const std::string& field, std::uint64_t n) {
  return n == 1 ? field : field + "(zeta_" + std::to_string(n) + ")";
}

Subgroup subgroup_of_order(const PermGroup& G, const Subgroup& H, std::size_t d) {
  std::vector<ElemId> out;
  for (ElemId h : H.elements())
    if (G.pow(h, static_cast<long long>(d)) == PermGroup::identity()) out.push_back(h);
  return Subgroup(std::move(out));
}

ElemId generator_of_cyclic(const PermGroup& G, const SubgroupClass& H) {
  auto g = cyclic_generator(G, H.representative);
  if (!g) throw DomainError("subgroup " + H.key + " is not cyclic");
  return *g;
}

/// k with w h0 w^-1 = k0^k, where h0, k0 generate H and K.
std::size_t exponent_of_image(const PermGroup& G, const SubgroupClass& H, const SubgroupClass& K, ElemId w) {
  ElemId t = G.conj(w, generator_of_cyclic(G, H));
  ElemId k0 = generator_of_cyclic(G, K), x = PermGroup::identity();
  for (std::size_t u = 0; u < K.order(); ++u, x = G.mul(x, k0))
    if (x == t) return u;
  throw DomainError("witness does not map " + H.key + " into " + K.key);
}

std::vector<LocalPoint> spec_z(unsigned bound) {
  std::vector<LocalPoint> out{{"(0)", integer_prime(0), false}};
  for (unsigned q : primes_up_to(bound)) out.push_back({"(" + std::to_string(q) + ")", integer_prime(q), true});
  return out;
}

// Height one.

LocalPoint h1_generic_trivial(unsigned p) {
  return {"Q_" + std::to_string(p), zero_ideal(Ring::p_adic_integers, p), false};
}
LocalPoint h1_closed(unsigned p) {
  return {"F_" + std::to_string(p),
          descriptor(Ring::p_adic_integers, DKind::closed, p, p, {p}, "(" + std::to_string(p) + ")"), true};
}
LocalPoint h1_cyclotomic(unsigned p, std::size_t order) {
  return {with_zeta("Q_" + std::to_string(p), order),
          zero_ideal(Ring::residue_field, static_cast<std::uint32_t>(order)), false};
}

// KU.

PrimeDescriptor ku_closed_descriptor(unsigned d, unsigned q, const FqPoly& g) {
  GaloisField F(q);
  PolyRing<GaloisField> R(F);
  return descriptor(Ring::cyclotomic, DKind::closed, d, q, poly_codes(g),
                    "(" + std::to_string(q) + ", " + R.to_string(g, "x") + ")");
}

LocalPoint ku_generic(unsigned d) { return {with_zeta("Q", d), zero_ideal(Ring::cyclotomic, d), false}; }

FqPoly codes_to_poly(const std::vector<std::int64_t>& codes) { return {codes.begin(), codes.end()}; }

/// Whether the roots of g raised to the power e are roots of h.
bool power_maps_root(const GaloisField& F, const FqPoly& g, const FqPoly& h, std::size_t e) {
  PolyRing<GaloisField> R(F);
  FqPoly r = R.powmod(R.x(), mpz_class(static_cast<unsigned long>(e)), g);
  return R.rem(R.compose(h, r), g).empty();
}

// Mod p.

struct EBasis {
  std::vector<ElemId> basis;
  std::map<ElemId, std::vector<unsigned>> coords;
};

EBasis elementary_basis(const PermGroup& G, const Subgroup& E, unsigned p) {
  EBasis b;
  b.basis = generators_of(G, E);
  const std::size_t r = b.basis.size();
  std::vector<unsigned> a(r, 0);
  for (;;) {
    ElemId x = PermGroup::identity();
    for (std::size_t i = 0; i < r; ++i) x = G.mul(x, G.pow(b.basis[i], a[i]));
    b.coords[x] = a;
    std::size_t i = 0;
    while (i < r && ++a[i] == p) a[i++] = 0;
    if (i == r) break;
  }
  if (b.coords.size() != E.order()) throw DomainError("subgroup is not elementary abelian");
  return b;
}

/// Homogeneous form in x, y: c[k] is the coefficient of x^(d-k) y^k.
using Form = std::vector<GaloisField::Elem>;

Form normalize_form(const GaloisField& F, Form f) {
  auto lead = std::find_if(f.begin(), f.end(), [](auto c) { return c != 0; });
  if (lead == f.end()) return f;
  auto inv = F.inv(*lead);
  for (auto& c : f) c = F.mul(c, inv);
  return f;
}

std::string form_string(const GaloisField& F, const Form& f) {
  const std::size_t d = f.size() - 1;
  auto power = [](const char* v, std::size_t e) {
    return e == 0 ? std::string() : (e == 1 ? std::string(v) : std::string(v) + "^" + std::to_string(e));
  };
  std::string out;
  for (std::size_t k = 0; k <= d; ++k) {
    if (f[k] == 0) continue;
    std::string mono = power("x", d - k);
    std::string y = power("y", k);
    mono = mono.empty() ? y : (y.empty() ? mono : mono + "*" + y);
    std::string c = F.to_string(f[k]);
    std::string term = mono.empty() ? c : (c == "1" ? mono : c + "*" + mono);
    out += (out.empty() ? "" : " + ") + term;
  }
  return "(" + out + ")";
}

LocalPoint form_point(const GaloisField& F, const Form& f) {
  return {form_string(F, f),
          descriptor(Ring::homogeneous_fq, DKind::height_one, F.size(), F.characteristic(),
                     {f.begin(), f.end()}, form_string(F, f)),
          false};
}

/// f(ax + by, cx + dy) for the substitution rows {a, b}, {c, d}.
Form substitute(const GaloisField& F, const Form& f, const Form& sx, const Form& sy) {
  const std::size_t d = f.size() - 1;
  Form out(d + 1, 0);
  for (std::size_t k = 0; k <= d; ++k) {
    if (f[k] == 0) continue;
    Form term{f[k]};
    auto times = [&](const Form& lin) {
      Form next(term.size() + 1, 0);
      for (std::size_t i = 0; i < term.size(); ++i) {
        next[i] = F.add(next[i], F.mul(term[i], lin[0]));
        next[i + 1] = F.add(next[i + 1], F.mul(term[i], lin[1]));
      }
      term = std::move(next);
    };
    for (std::size_t i = 0; i < d - k; ++i) times(sx);
    for (std::size_t i = 0; i < k; ++i) times(sy);
    for (std::size_t i = 0; i <= d; ++i) out[i] = F.add(out[i], term[i]);
  }
  return out;
}

std::size_t elementary_rank(const PermGroup& G, const Subgroup& E) {
  if (E.order() == 1) return 0;
  return abelian_invariants(G, E).size();
}

void require_family(const TheorySpec& theory, const PermGroup& G, const SubgroupClass& H) {
  if (!theory.family().contains(G, H.representative))
    throw DomainError("subgroup " + H.key + " is not in family " + theory.family().to_string());
}

}  // namespace

TheorySpec TheorySpec::parse(std::string_view text) {
  TheorySpec t;
  auto colon = text.find(':');
  std::string_view name = text.substr(0, colon);
  std::map<std::string, unsigned, std::less<>> args;
  if (colon != std::string_view::npos) {
    std::string_view rest = text.substr(colon + 1);
    while (!rest.empty()) {
      auto comma = rest.find(',');
      std::string_view item = rest.substr(0, comma);
      auto eq = item.find('=');
      if (eq == std::string_view::npos) throw ParseError("theory parameter '" + std::string(item) + "' needs key=value");
      std::string key(item.substr(0, eq));
      if (args.count(key)) throw ParseError("theory parameter " + key + " given twice");
      args[key] = parse_uint(key, item.substr(eq + 1));
      rest = comma == std::string_view::npos ? std::string_view() : rest.substr(comma + 1);
    }
  }
  if (name == "height1") t.kind = Kind::height1;
  else if (name == "ku") t.kind = Kind::ku;
  else if (name == "hz") t.kind = Kind::hz;
  else if (name == "modp" || name == "mod-p") t.kind = Kind::modp;
  else if (name == "kr") t.kind = Kind::kr;
  else throw ParseError("unknown theory '" + std::string(name) + "'");

  auto take = [&](const char* key) -> std::optional<unsigned> {
    auto it = args.find(key);
    if (it == args.end()) return std::nullopt;
    unsigned v = it->second;
    args.erase(it);
    return v;
  };
  if (auto b = take("bound")) t.prime_bound = *b;
  if (auto d = take("deg")) t.degree_bound = *d;
  if (t.kind == Kind::height1 || t.kind == Kind::hz) {
    auto p = take("p");
    if (!p) throw ParseError("theory " + std::string(name) + " needs p=<prime>");
    if (!is_prime(*p)) throw ParseError("p=" + std::to_string(*p) + " is not prime");
    t.p = *p;
  } else if (t.kind == Kind::modp) {
    auto q = take("q");
    if (!q) throw ParseError("theory modp needs q=<prime power>");
    auto pp = prime_power(*q);
    if (!pp) throw ParseError("q=" + std::to_string(*q) + " is not a prime power");
    if (*q > GaloisField::kMaxSize) throw BoundError("field size exceeds 2^16");
    t.q = *q;
    t.p = pp->first;
  }
  if (!args.empty()) throw ParseError("unexpected theory parameter " + args.begin()->first);
  if (t.prime_bound > kMaxPrimeBound) throw BoundError("prime bound exceeds 1000");
  if (t.degree_bound == 0) throw ParseError("degree bound must be positive");
  return t;
}

std::string TheorySpec::to_string() const {
  switch (kind) {
    case Kind::height1: return "height1:p=" + std::to_string(p);
    case Kind::ku: return "ku";
    case Kind::hz: return "hz:p=" + std::to_string(p);
    case Kind::modp: return "modp:q=" + std::to_string(q) + ",deg=" + std::to_string(degree_bound);
    case Kind::kr: return "kr";
  }
  return "?";
}

FamilySpec TheorySpec::family() const {
  switch (kind) {
    case Kind::height1: return FamilySpec::cyclic_p(p);
    case Kind::ku: return FamilySpec::cyclic();
    case Kind::hz: return FamilySpec::cyclic_p(p);
    case Kind::modp: return FamilySpec::elem_abelian_p(p);
    case Kind::kr: return FamilySpec::abelian_p_rank(2, 0);
  }
  return FamilySpec::all();
}

void check_supported(const TheorySpec& theory, const PermGroup& G) {
  switch (theory.kind) {
    case Kind::height1:
    case Kind::ku: return;
    case Kind::hz: {
      auto whole = whole_group(G);
      if (G.order() == 1 || prime_of_p_group(G.order()) != theory.p || !cyclic_generator(G, whole))
        throw UnsupportedError("hz:p=" + std::to_string(theory.p) + " is modeled only over nontrivial cyclic " +
                               std::to_string(theory.p) + "-groups");
      return;
    }
    case Kind::kr:
      if (G.order() != 2) throw UnsupportedError("kr is modeled only over the group of order 2");
      return;
    case Kind::modp:
      for (const auto& E : family_members(G, theory.family()))
        if (elementary_rank(G, E.representative) > 2)
          throw UnsupportedError("modp strata are modeled for elementary abelian rank <= 2; " + E.key +
                                 " has rank " + std::to_string(elementary_rank(G, E.representative)));
      return;
  }
}

WeylKind weyl_action_kind(bool global_theory, bool abelian_subgroup) {
  if (!global_theory) return WeylKind::ordinary;
  return abelian_subgroup ? WeylKind::quillen : WeylKind::global;
}

WeylKind weyl_action_kind(const TheorySpec& theory, bool abelian_subgroup) {
  return weyl_action_kind(theory.is_global(), abelian_subgroup);
}

StratumModel stratum(const TheorySpec& theory, const PermGroup& G, const SubgroupClass& H) {
  check_supported(theory, G);
  StratumModel S;
  S.subgroup = H;
  S.weyl = weyl(G, H, weyl_action_kind(theory, is_abelian(G, H.representative)));
  const FamilySpec family = theory.family();
  if (!family.contains(G, H.representative)) {
    S.empty = true;
    S.empty_reason = "geometric fixed points vanish: " + H.key + " is outside family " + family.to_string();
    S.weyl_action.assign(S.weyl.normalizer_generators.size(), Permutation(0));
    return S;
  }

  auto trivial_action = [&] {
    S.weyl_action.assign(S.weyl.normalizer_generators.size(), Permutation(S.points.size()));
  };
  auto fan = [&] {
    for (std::size_t i = 1; i < S.points.size(); ++i) S.internal_order.emplace_back(0, i);
  };

  switch (theory.kind) {
    case Kind::height1:
      if (H.order() == 1) {
        S.points = {h1_generic_trivial(theory.p), h1_closed(theory.p)};
        S.internal_order = {{0, 1}};
      } else {
        S.points = {h1_cyclotomic(theory.p, H.order())};
      }
      trivial_action();
      break;

    case Kind::kr:
    case Kind::hz:
      if (H.order() == 1) {
        S.points = spec_z(theory.prime_bound);
        S.truncated = true;
      } else {
        S.points = {{"(0)", zero_ideal(Ring::homogeneous_fp_t, theory.p), false},
                    {"(t)", descriptor(Ring::homogeneous_fp_t, DKind::closed, theory.p, theory.p, {0, 1}, "(t)"),
                     true}};
      }
      fan();
      trivial_action();
      break;

    case Kind::ku: {
      const unsigned d = static_cast<unsigned>(H.order());
      S.points = {ku_generic(d)};
      std::vector<std::pair<unsigned, FqPoly>> closed;
      for (unsigned q : primes_up_to(theory.prime_bound)) {
        if (d % q == 0) continue;
        GaloisField F(q);
        auto factors = factor(F, reduce_mod(F, cyclotomic_poly(d)));
        if (factors.size() != prime_splitting(d, q).count)
          throw DomainError("factorization disagrees with the splitting law");
        for (const auto& f : factors) {
          S.points.push_back({residue_label(q, f.poly), ku_closed_descriptor(d, q, f.poly), true});
          closed.emplace_back(q, f.poly);
        }
      }
      S.truncated = true;
      fan();
      const ElemId h0 = generator_of_cyclic(G, H);
      for (ElemId n : S.weyl.normalizer_generators) {
        ElemId t = G.conj(n, h0);
        std::size_t k = 0;
        for (ElemId x = PermGroup::identity(); x != t; x = G.mul(x, h0)) ++k;
        std::vector<Point> images(S.points.size());
        images[0] = 0;
        for (std::size_t i = 0; i < closed.size(); ++i) {
          const auto& [q, g] = closed[i];
          GaloisField F(q);
          std::size_t target = SIZE_MAX;
          for (std::size_t j = 0; j < closed.size(); ++j)
            if (closed[j].first == q && power_maps_root(F, g, closed[j].second, k)) target = j;
          if (target == SIZE_MAX) throw DomainError("Galois image of a prime not found");
          images[i + 1] = static_cast<Point>(target + 1);
        }
        S.weyl_action.push_back(Permutation(std::move(images)));
      }
      break;
    }

    case Kind::modp: {
      GaloisField F(theory.q);
      const std::size_t rank = elementary_rank(G, H.representative);
      if (rank == 0) {
        S.points = {{"(0)", descriptor(Ring::residue_field, DKind::closed, theory.q, 0, {}, "(0)"), true}};
        trivial_action();
        break;
      }
      S.points = {{"(0)", zero_ideal(Ring::homogeneous_fq, theory.q), false}};
      if (rank == 1) {
        trivial_action();
        break;
      }
      S.truncated = true;
      std::vector<Form> forms;
      for (unsigned d = 1; d <= theory.degree_bound; ++d) {
        if (d == 1) {
          forms.push_back({0, 1});  // y
          for (std::uint32_t a = 0; a < F.size(); ++a) forms.push_back({1, a});
        } else {
          for (const auto& g : monic_irreducibles(F, d)) forms.push_back(Form(g.rbegin(), g.rend()));
        }
      }
      // drop the lines cut out by the rank one subgroups: forms defined over F_p
      std::erase_if(forms, [&](const Form& f) {
        return f.size() == 2 && std::all_of(f.begin(), f.end(), [&](auto c) { return F.in_prime_field(c); });
      });
      for (const auto& f : forms) S.points.push_back(form_point(F, f));
      fan();

      const EBasis B = elementary_basis(G, H.representative, theory.p);
      for (ElemId n : S.weyl.normalizer_generators) {
        // sigma_n(x_i) = x_i o c_{n^-1}
        ElemId ninv = G.inv(n);
        auto row = [&](std::size_t i) {
          Form lin(2, 0);
          for (std::size_t j = 0; j < 2; ++j)
            lin[j] = F.from_int(B.coords.at(G.conj(ninv, B.basis[j]))[i]);
          return lin;
        };
        const Form sx = row(0), sy = row(1);
        std::vector<Point> images(S.points.size());
        images[0] = 0;
        for (std::size_t i = 0; i < forms.size(); ++i) {
          Form image = normalize_form(F, substitute(F, forms[i], sx, sy));
          auto it = std::find(forms.begin(), forms.end(), image);
          if (it == forms.end()) throw DomainError("Weyl image of a form is not a stratum point");
          images[i + 1] = static_cast<Point>(it - forms.begin() + 1);
        }
        S.weyl_action.push_back(Permutation(std::move(images)));
      }
      break;
    }
  }
  return S;
}

bool is_weyl_action(const StratumModel& S) {
  const std::size_t c = S.weyl.cosets.size(), n = S.points.size();
  if (S.weyl_action.size() != S.weyl.generators.size()) return false;
  std::vector<Permutation> gens;
  for (std::size_t i = 0; i < S.weyl_action.size(); ++i) {
    if (S.weyl_action[i].degree() != n) return false;
    std::vector<Point> images(c + n);
    for (std::size_t x = 0; x < c; ++x) images[x] = S.weyl.generators[i](static_cast<Point>(x));
    for (std::size_t x = 0; x < n; ++x) images[c + x] = static_cast<Point>(c + S.weyl_action[i](static_cast<Point>(x)));
    gens.emplace_back(std::move(images));
  }
  return PermGroup(c + n, gens).order() == S.weyl.order;
}

std::vector<std::vector<std::size_t>> weyl_orbits(const StratumModel& S) {
  const std::size_t n = S.points.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& g : S.weyl_action)
    for (std::size_t x = 0; x < n; ++x) {
      std::size_t a = root(x), b = root(g(static_cast<Point>(x)));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> slot(n, SIZE_MAX);
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t r = root(x);
    if (slot[r] == SIZE_MAX) slot[r] = out.size(), out.emplace_back();
    out[slot[r]].push_back(x);
  }
  return out;
}

FullSpectrum full_spectrum(const TheorySpec& theory, const PermGroup& G, const SubgroupClass& H) {
  check_supported(theory, G);
  if (!theory.has_transition_maps())
    throw UnsupportedError("theory " + theory.to_string() + " has no transition maps");
  require_family(theory, G, H);
  FullSpectrum V;
  auto add = [&](LocalPoint p, Subgroup support) {
    V.points.push_back(std::move(p));
    V.support.push_back(std::move(support));
    return V.points.size() - 1;
  };
  const Subgroup trivial = trivial_subgroup(G);

  switch (theory.kind) {
    case Kind::height1: {
      const std::size_t closed = add(h1_closed(theory.p), trivial);
      add(h1_generic_trivial(theory.p), trivial);
      for (std::size_t order = theory.p; order <= H.order(); order *= theory.p)
        add(h1_cyclotomic(theory.p, order), subgroup_of_order(G, H.representative, order));
      for (std::size_t i = 0; i < V.points.size(); ++i)
        if (i != closed) V.edges.push_back({i, closed, false, ""});
      break;
    }

    case Kind::kr:
    case Kind::hz: {
      const auto z = spec_z(theory.prime_bound);
      std::optional<std::size_t> at_p;
      for (std::size_t i = 0; i < z.size(); ++i) {
        add(z[i], trivial);
        if (i > 0) V.edges.push_back({0, i, false, ""});
        if (z[i].descriptor.q == theory.p) at_p = i;
      }
      std::size_t prev_closed = 0;
      for (std::size_t order = theory.p; theory.kind == Kind::hz && order <= H.order(); order *= theory.p) {
        auto support = subgroup_of_order(G, H.representative, order);
        std::size_t gen = add({"(0)", zero_ideal(Ring::homogeneous_fp_t, theory.p), false}, support);
        std::size_t cl = add({"(t)", descriptor(Ring::homogeneous_fp_t, DKind::closed, theory.p, theory.p, {0, 1}, "(t)"),
                              true},
                             support);
        V.edges.push_back({gen, cl, false, ""});
        if (order == theory.p) {
          if (at_p) V.edges.push_back({gen, *at_p, true, "Balmer–Gallauer"});
        } else {
          V.edges.push_back({gen, prev_closed, true, "Balmer–Gallauer"});
        }
        prev_closed = cl;
      }
      break;
    }

    case Kind::ku: {
      const auto R = cyclic_spectrum_ring(static_cast<unsigned>(H.order()), theory.prime_bound);
      for (const auto& m : R.minimal) add(ku_generic(m.d), subgroup_of_order(G, H.representative, m.d));
      for (const auto& m : R.maximal)
        add({residue_label(m.q, m.g), ku_closed_descriptor(m.root_order, m.q, m.g), true},
            subgroup_of_order(G, H.representative, m.root_order));
      for (auto [i, j] : R.containments) V.edges.push_back({i, R.minimal.size() + j, false, ""});
      break;
    }

    case Kind::modp: break;
  }
  return V;
}

std::size_t ku_push(const TheorySpec& theory, const PermGroup& G, const SubgroupClass& H,
                    const LocalPoint& point, const SubgroupClass& K, const FullSpectrum& VK, ElemId w) {
  (void)theory;
  const std::size_t u = exponent_of_image(G, H, K, w);
  const std::size_t e = u * H.order() / K.order();
  const auto& d = point.descriptor;
  if (d.kind == DKind::generic) {
    const std::size_t order = d.parameter / std::gcd<std::size_t>(d.parameter, e);
    for (std::size_t j = 0; j < VK.points.size(); ++j) {
      const auto& t = VK.points[j].descriptor;
      if (t.kind == DKind::generic && t.parameter == order) return j;
    }
  } else {
    GaloisField F(d.q);
    const FqPoly g = codes_to_poly(d.generator);
    for (std::size_t j = 0; j < VK.points.size(); ++j) {
      const auto& t = VK.points[j].descriptor;
      if (t.kind == DKind::closed && t.q == d.q && power_maps_root(F, g, codes_to_poly(t.generator), e)) return j;
    }
  }
  throw DomainError("image of " + point.label + " not found in the spectrum of " + K.key);
}

std::vector<std::size_t> transition_map(const TheorySpec& theory, const PermGroup& G,
                                        const SubgroupClass& H, const FullSpectrum& VH,
                                        const SubgroupClass& K, const FullSpectrum& VK, ElemId w) {
  std::vector<std::size_t> out;
  if (theory.kind == Kind::ku) {
    for (const auto& p : VH.points) out.push_back(ku_push(theory, G, H, p, K, VK, w));
    return out;
  }
  if (!theory.has_transition_maps()) throw UnsupportedError("theory " + theory.to_string() + " has no transition maps");
  // label- and support-preserving: supports are characteristic subgroups of cyclic groups
  for (std::size_t i = 0; i < VH.points.size(); ++i) {
    std::size_t found = SIZE_MAX;
    for (std::size_t j = 0; j < VK.points.size() && found == SIZE_MAX; ++j)
      if (VK.points[j].label == VH.points[i].label && VK.support[j].order() == VH.support[i].order()) found = j;
    if (found == SIZE_MAX) throw DomainError("point " + VH.points[i].label + " has no image in " + K.key);
    out.push_back(found);
  }
  (void)H;
  (void)w;
  return out;
}

}  // namespace qstrat
