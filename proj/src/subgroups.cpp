#include <algorithm>
#include <limits>
#include <map>
#include <set>

#include "qstrat/error.hpp"
#include "qstrat/groups.hpp"

namespace qstrat {

Subgroup::Subgroup(std::vector<ElemId> elements) : elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

bool Subgroup::contains(ElemId g) const {
  return std::binary_search(elements_.begin(), elements_.end(), g);
}

bool Subgroup::is_subset_of(const Subgroup& other) const {
  return std::includes(other.elements_.begin(), other.elements_.end(), elements_.begin(),
                       elements_.end());
}

bool canonical_less(const Subgroup& a, const Subgroup& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  return std::lexicographical_compare(a.elements().begin(), a.elements().end(),
                                      b.elements().begin(), b.elements().end());
}

Subgroup whole_group(const PermGroup& G) {
  std::vector<ElemId> all(G.order());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<ElemId>(i);
  return Subgroup(std::move(all));
}

Subgroup trivial_subgroup(const PermGroup&) { return Subgroup({PermGroup::identity()}); }

namespace {

Subgroup close_from(const PermGroup& G, std::vector<ElemId> seed,
                    std::span<const ElemId> generators) {
  std::vector<char> member(G.order(), 0);
  std::vector<ElemId> found;
  auto push = [&](ElemId x) {
    if (!member[x]) {
      member[x] = 1;
      found.push_back(x);
    }
  };
  push(PermGroup::identity());
  for (ElemId x : seed) push(x);
  for (std::size_t i = 0; i < found.size(); ++i)
    for (ElemId g : generators) push(G.mul(found[i], g));
  return Subgroup(std::move(found));
}

}  // namespace

Subgroup closure(const PermGroup& G, std::span<const ElemId> generators) {
  return close_from(G, {}, generators);
}

Subgroup join(const PermGroup& G, const Subgroup& base, std::span<const ElemId> extra) {
  std::vector<ElemId> gens = generators_of(G, base);
  gens.insert(gens.end(), extra.begin(), extra.end());
  return close_from(G, {base.elements().begin(), base.elements().end()}, gens);
}

Subgroup conjugate(const PermGroup& G, const Subgroup& H, ElemId g) {
  std::vector<ElemId> out;
  out.reserve(H.order());
  const ElemId gi = G.inv(g);
  for (ElemId h : H.elements()) out.push_back(G.mul(G.mul(g, h), gi));
  return Subgroup(std::move(out));
}

Subgroup intersection(const Subgroup& H, const Subgroup& K) {
  std::vector<ElemId> out;
  std::set_intersection(H.elements().begin(), H.elements().end(), K.elements().begin(),
                        K.elements().end(), std::back_inserter(out));
  return Subgroup(std::move(out));
}

Subgroup normalizer(const PermGroup& G, const Subgroup& H) {
  const auto gens = generators_of(G, H);
  std::vector<ElemId> out;
  for (ElemId g = 0; g < G.order(); ++g) {
    bool ok = true;
    for (ElemId h : gens) {
      if (!H.contains(G.conj(g, h))) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(g);
  }
  return Subgroup(std::move(out));
}

Subgroup centralizer(const PermGroup& G, const Subgroup& H) {
  const auto gens = generators_of(G, H);
  std::vector<ElemId> out;
  for (ElemId g = 0; g < G.order(); ++g) {
    bool ok = true;
    for (ElemId h : gens) {
      if (G.mul(g, h) != G.mul(h, g)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(g);
  }
  return Subgroup(std::move(out));
}

Subgroup canonical_conjugate(const PermGroup& G, const Subgroup& H) {
  Subgroup best = H;
  for (ElemId g = 1; g < G.order(); ++g) {
    Subgroup c = conjugate(G, H, g);
    if (canonical_less(c, best)) best = std::move(c);
  }
  return best;
}

bool is_abelian(const PermGroup& G, const Subgroup& H) {
  const auto gens = generators_of(G, H);
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (G.mul(gens[i], gens[j]) != G.mul(gens[j], gens[i])) return false;
  return true;
}

std::optional<ElemId> cyclic_generator(const PermGroup& G, const Subgroup& H) {
  for (ElemId h : H.elements())
    if (G.element_order(h) == H.order()) return h;
  return std::nullopt;
}

std::vector<ElemId> generators_of(const PermGroup& G, const Subgroup& H) {
  std::vector<ElemId> gens;
  Subgroup current = trivial_subgroup(G);
  for (ElemId h : H.elements()) {
    if (current.order() == H.order()) break;
    if (current.contains(h)) continue;
    gens.push_back(h);
    current = closure(G, gens);
  }
  return gens;
}

unsigned prime_of_p_group(std::size_t order) {
  if (order == 1) return 1;
  std::size_t p = 2;
  while (order % p != 0) ++p;
  while (order % p == 0) order /= p;
  return order == 1 ? static_cast<unsigned>(p) : 0;
}

std::vector<std::size_t> abelian_invariants(const PermGroup& G, const Subgroup& H) {
  if (!is_abelian(G, H)) throw DomainError("abelian_invariants needs an abelian subgroup");
  std::size_t n = H.order();
  std::vector<std::vector<std::size_t>> parts;  // descending p-power factors per prime
  for (std::size_t p = 2; n > 1; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    // Sylow p-part and the sizes of its successive p-th power images.
    std::vector<ElemId> sylow;
    for (ElemId h : H.elements()) {
      std::size_t o = G.element_order(h);
      while (o % p == 0) o /= p;
      if (o == 1) sylow.push_back(h);
    }
    std::vector<std::size_t> sizes{sylow.size()};
    std::vector<ElemId> layer = sylow;
    while (layer.size() > 1) {
      std::set<ElemId> next;
      for (ElemId x : layer) next.insert(G.pow(x, static_cast<long long>(p)));
      layer.assign(next.begin(), next.end());
      sizes.push_back(layer.size());
    }
    // at_least[k] = number of cyclic factors of order >= p^(k+1)
    std::vector<std::size_t> at_least;
    for (std::size_t i = 0; i + 1 < sizes.size(); ++i) {
      std::size_t ratio = sizes[i] / sizes[i + 1];
      std::size_t count = 0;
      while (ratio > 1) {
        ratio /= p;
        ++count;
      }
      at_least.push_back(count);
    }
    std::vector<std::size_t> factors;
    for (std::size_t k = 0; k < at_least.size(); ++k) {
      std::size_t exact = at_least[k] - (k + 1 < at_least.size() ? at_least[k + 1] : 0);
      std::size_t power = 1;
      for (std::size_t j = 0; j <= k; ++j) power *= p;
      factors.insert(factors.end(), exact, power);
    }
    std::sort(factors.rbegin(), factors.rend());
    parts.push_back(std::move(factors));
  }
  std::vector<std::size_t> invariants;
  for (std::size_t i = 0;; ++i) {
    std::size_t f = 1;
    bool any = false;
    for (const auto& part : parts) {
      if (i < part.size()) {
        f *= part[i];
        any = true;
      }
    }
    if (!any) break;
    invariants.push_back(f);
  }
  return invariants;
}

namespace {

std::string class_name(const PermGroup& G, const Subgroup& H) {
  if (H.order() == 1) return "e";
  if (!is_abelian(G, H)) return "H" + std::to_string(H.order());
  auto inv = abelian_invariants(G, H);
  std::string name;
  for (std::size_t f : inv) name += (name.empty() ? "C" : "xC") + std::to_string(f);
  return name;
}

}  // namespace

std::vector<SubgroupClass> subgroups_up_to_conjugacy(const PermGroup& G) {
  std::set<std::vector<ElemId>> cyclic_sets;
  std::vector<ElemId> cyclic_gens;
  for (ElemId g = 0; g < G.order(); ++g) {
    const ElemId gen[] = {g};
    Subgroup c = closure(G, gen);
    if (cyclic_sets.insert({c.elements().begin(), c.elements().end()}).second)
      cyclic_gens.push_back(g);
  }

  std::vector<Subgroup> reps{trivial_subgroup(G)};
  std::set<std::vector<ElemId>> known{{PermGroup::identity()}};
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (ElemId g : cyclic_gens) {
      if (reps[i].contains(g)) continue;
      const ElemId extra[] = {g};
      Subgroup joined = canonical_conjugate(G, join(G, reps[i], extra));
      if (known.insert({joined.elements().begin(), joined.elements().end()}).second)
        reps.push_back(std::move(joined));
    }
  }
  std::sort(reps.begin(), reps.end(), canonical_less);

  std::vector<SubgroupClass> classes;
  classes.reserve(reps.size());
  std::map<std::string, std::size_t> name_count;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    SubgroupClass c;
    c.index = i;
    c.representative = reps[i];
    c.normalizer = normalizer(G, reps[i]);
    c.centralizer = centralizer(G, reps[i]);
    c.conjugates = G.order() / c.normalizer.order();
    c.name = class_name(G, reps[i]);
    ++name_count[c.name];
    classes.push_back(std::move(c));
  }
  std::map<std::string, std::size_t> seen;
  for (auto& c : classes) {
    c.key = c.name;
    if (name_count[c.name] > 1) c.key += "." + std::to_string(++seen[c.name]);
  }
  return classes;
}

std::size_t find_class(const PermGroup& G, std::span<const SubgroupClass> classes,
                       const Subgroup& H) {
  Subgroup canon = canonical_conjugate(G, H);
  for (const auto& c : classes)
    if (c.representative == canon) return c.index;
  throw DomainError("subgroup not found among the conjugacy classes");
}

std::string to_string(WeylKind kind) {
  switch (kind) {
    case WeylKind::ordinary: return "ordinary";
    case WeylKind::global: return "global";
    case WeylKind::quillen: return "quillen";
  }
  return "?";
}

WeylKind parse_weyl_kind(std::string_view text) {
  if (text == "ordinary") return WeylKind::ordinary;
  if (text == "global") return WeylKind::global;
  if (text == "quillen") return WeylKind::quillen;
  throw ParseError("unknown Weyl group kind: " + std::string(text));
}

std::size_t WeylGroup::coset_of(ElemId n) const {
  std::size_t c = n < element_coset.size() ? element_coset[n] : std::string::npos;
  if (c == std::string::npos) throw DomainError("element is not in the normalizer");
  return c;
}

Permutation WeylGroup::action_of(const PermGroup& G, ElemId n) const {
  std::vector<Point> images(cosets.size());
  for (std::size_t c = 0; c < cosets.size(); ++c)
    images[c] = static_cast<Point>(coset_of(G.mul(n, cosets[c].front())));
  return Permutation(std::move(images));
}

PermGroup WeylGroup::as_group() const { return PermGroup(cosets.size(), generators); }

WeylGroup weyl(const PermGroup& G, const SubgroupClass& H, WeylKind kind) {
  WeylGroup w;
  w.kind = kind;
  w.normalizer = H.normalizer;
  switch (kind) {
    case WeylKind::ordinary: w.kernel = H.representative; break;
    case WeylKind::quillen: w.kernel = H.centralizer; break;
    case WeylKind::global: {
      auto gens = generators_of(G, H.centralizer);
      w.kernel = join(G, H.representative, gens);
      break;
    }
  }
  if (w.kernel.order() > kMaxOrder || w.normalizer.order() / w.kernel.order() > 65535)
    throw BoundError("Weyl quotient too large");
  w.order = w.normalizer.order() / w.kernel.order();
  w.element_coset.assign(G.order(), std::string::npos);
  for (ElemId n : w.normalizer.elements()) {
    if (w.element_coset[n] != std::string::npos) continue;
    std::vector<ElemId> coset;
    for (ElemId m : w.kernel.elements()) coset.push_back(G.mul(n, m));
    std::sort(coset.begin(), coset.end());
    for (ElemId x : coset) w.element_coset[x] = w.cosets.size();
    w.cosets.push_back(std::move(coset));
  }
  w.normalizer_generators = generators_of(G, w.normalizer);
  for (ElemId n : w.normalizer_generators) w.generators.push_back(w.action_of(G, n));
  return w;
}

std::size_t DoubleCosetDecomposition::orbit_sum(std::size_t group_order) const {
  std::size_t sum = 0;
  for (const auto& d : pairs) sum += group_order / d.intersection.order();
  return sum;
}

DoubleCosetDecomposition double_cosets(const PermGroup& G, const Subgroup& H,
                                       const Subgroup& K) {
  DoubleCosetDecomposition out;
  out.index_h = G.order() / H.order();
  out.index_k = G.order() / K.order();
  std::vector<char> covered(G.order(), 0);
  for (ElemId g = 0; g < G.order(); ++g) {
    if (covered[g]) continue;
    DoubleCoset d;
    d.representative = g;
    for (ElemId h : H.elements()) {
      ElemId hg = G.mul(h, g);
      for (ElemId k : K.elements()) {
        ElemId x = G.mul(hg, k);
        if (!covered[x]) {
          covered[x] = 1;
          ++d.size;
        }
      }
    }
    d.intersection = intersection(conjugate(G, H, G.inv(g)), K);
    out.pairs.push_back(std::move(d));
  }
  return out;
}

namespace {

bool is_p_subgroup(const Subgroup& H, unsigned p) {
  unsigned q = prime_of_p_group(H.order());
  return q == 1 || q == p;
}

unsigned parse_unsigned(std::string_view text) {
  if (text.empty()) throw ParseError("expected a number");
  unsigned v = 0;
  for (char c : text) {
    if (c < '0' || c > '9') throw ParseError("expected a number, got '" + std::string(text) + "'");
    v = v * 10 + static_cast<unsigned>(c - '0');
    if (v > 1'000'000) throw ParseError("number too large");
  }
  return v;
}

}  // namespace

FamilySpec FamilySpec::parse(std::string_view text) {
  std::string_view name = text;
  std::string_view args;
  if (auto open = text.find('('); open != std::string_view::npos) {
    if (text.back() != ')') throw ParseError("unbalanced family arguments");
    name = text.substr(0, open);
    args = text.substr(open + 1, text.size() - open - 2);
  } else if (auto colon = text.find(':'); colon != std::string_view::npos) {
    name = text.substr(0, colon);
    args = text.substr(colon + 1);
  }
  std::vector<unsigned> nums;
  while (!args.empty()) {
    auto comma = args.find(',');
    nums.push_back(parse_unsigned(args.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    args.remove_prefix(comma + 1);
  }
  auto need = [&](std::size_t n) {
    if (nums.size() != n) throw ParseError("family '" + std::string(name) + "' expects " +
                                           std::to_string(n) + " argument(s)");
    if (n >= 1 && prime_of_p_group(nums[0]) != nums[0])
      throw ParseError("family prime must be prime");
  };
  if (name == "all") {
    need(0);
    return all();
  }
  if (name == "cyclic") {
    need(0);
    return cyclic();
  }
  if (name == "cyclic-p") {
    need(1);
    return cyclic_p(nums[0]);
  }
  if (name == "elem-abelian-p") {
    need(1);
    return elem_abelian_p(nums[0]);
  }
  if (name == "abelian-p-rank") {
    need(2);
    return abelian_p_rank(nums[0], nums[1]);
  }
  throw ParseError("unknown family: " + std::string(text));
}

std::string FamilySpec::to_string() const {
  switch (kind) {
    case Kind::all: return "all";
    case Kind::cyclic: return "cyclic";
    case Kind::cyclic_p: return "cyclic-p(" + std::to_string(p) + ")";
    case Kind::elem_abelian_p: return "elem-abelian-p(" + std::to_string(p) + ")";
    case Kind::abelian_p_rank:
      return "abelian-p-rank(" + std::to_string(p) + "," + std::to_string(rank) + ")";
  }
  return "?";
}

bool FamilySpec::contains(const PermGroup& G, const Subgroup& H) const {
  switch (kind) {
    case Kind::all: return true;
    case Kind::cyclic: return cyclic_generator(G, H).has_value();
    case Kind::cyclic_p: return is_p_subgroup(H, p) && cyclic_generator(G, H).has_value();
    case Kind::elem_abelian_p: {
      if (!is_p_subgroup(H, p) || !is_abelian(G, H)) return false;
      for (ElemId h : H.elements())
        if (G.pow(h, p) != PermGroup::identity()) return false;
      return true;
    }
    case Kind::abelian_p_rank:
      return is_p_subgroup(H, p) && is_abelian(G, H) && abelian_invariants(G, H).size() <= rank;
  }
  return false;
}

std::vector<SubgroupClass> family_members(const PermGroup& G,
                                          std::span<const SubgroupClass> classes,
                                          const FamilySpec& family) {
  std::vector<SubgroupClass> out;
  for (const auto& c : classes)
    if (family.contains(G, c.representative)) out.push_back(c);
  return out;
}

std::vector<SubgroupClass> family_members(const PermGroup& G, const FamilySpec& family) {
  auto classes = subgroups_up_to_conjugacy(G);
  return family_members(G, classes, family);
}

}  // namespace qstrat
