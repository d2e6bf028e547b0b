#include "qstrat/spectrum.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <tuple>

#include "json.hpp"

#include "qstrat/error.hpp"
#include "qstrat/quillen_cat.hpp"

namespace qstrat {

namespace {

using json = nlohmann::json;
using TKind = TheorySpec::Kind;

/// Points accumulate with their class and descriptor; ids are assigned once all
/// are known so the output order is (class index, descriptor).
class Builder {
 public:
  std::size_t add(std::size_t cls, const std::string& key, const LocalPoint& p) {
    raw_.push_back({cls, key, p});
    return raw_.size() - 1;
  }
  void edge(std::size_t from, std::size_t to, EdgeKind kind, std::string provenance = "") {
    if (from != to) edges_.insert({from, to, kind, std::move(provenance)});
  }
  std::size_t class_of(std::size_t raw) const { return raw_[raw].cls; }

  StratifiedSpace finish(SpaceMeta meta) const {
    std::vector<std::size_t> order(raw_.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return std::tie(raw_[a].cls, raw_[a].point.descriptor) < std::tie(raw_[b].cls, raw_[b].point.descriptor);
    });
    std::vector<std::size_t> id(raw_.size());
    StratifiedSpace s;
    s.meta = std::move(meta);
    for (std::size_t i = 0; i < order.size(); ++i) {
      const auto& r = raw_[order[i]];
      id[order[i]] = i;
      s.points.push_back({i, r.key, r.point.label, r.point.closed});
    }
    for (const auto& e : edges_) s.edges.push_back({id[e.from], id[e.to], e.kind, e.provenance});
    std::sort(s.edges.begin(), s.edges.end());
    return s;
  }

 private:
  struct Raw {
    std::size_t cls;
    std::string key;
    LocalPoint point;
  };
  std::vector<Raw> raw_;
  std::set<SpaceEdge> edges_;
};

SpaceMeta base_meta(const TheorySpec& theory, const std::string& group_label, const char* mode) {
  SpaceMeta m;
  m.group = group_label;
  m.theory = theory.to_string();
  m.family = theory.family().to_string();
  m.mode = mode;
  m.prime_bound = theory.prime_bound;
  m.degree_bound = theory.degree_bound;
  return m;
}

std::size_t rank_of(const PermGroup& G, const Subgroup& E) {
  return E.order() == 1 ? 0 : abelian_invariants(G, E).size();
}

/// Whether some conjugate of A lies in B.
bool subconjugate(const PermGroup& G, const Subgroup& A, const Subgroup& B) {
  if (B.order() % A.order() != 0) return false;
  for (ElemId g = 0; g < G.order(); ++g) {
    bool inside = true;
    for (ElemId a : A.elements())
      if (!B.contains(G.conj(g, a))) {
        inside = false;
        break;
      }
    if (inside) return true;
  }
  return false;
}

bool is_cyclic_group(const PermGroup& G) { return cyclic_generator(G, whole_group(G)).has_value(); }

}  // namespace

std::string to_string(EdgeKind kind) {
  switch (kind) {
    case EdgeKind::internal: return "internal";
    case EdgeKind::cross_stratum: return "cross-stratum";
    case EdgeKind::external: return "external";
  }
  return "?";
}

EdgeKind parse_edge_kind(std::string_view text) {
  if (text == "internal") return EdgeKind::internal;
  if (text == "cross-stratum") return EdgeKind::cross_stratum;
  if (text == "external") return EdgeKind::external;
  throw ParseError("unknown edge kind '" + std::string(text) + "'");
}

StratifiedSpace assemble_strong(const TheorySpec& theory, const PermGroup& G, const std::string& group_label) {
  check_supported(theory, G);
  const auto classes = subgroups_up_to_conjugacy(G);
  SpaceMeta meta = base_meta(theory, group_label, "strong");
  Builder b;
  std::vector<StratumModel> strata;
  std::vector<std::vector<std::size_t>> raw_of(classes.size());  // stratum point -> raw point
  for (std::size_t i = 0; i < classes.size(); ++i) {
    strata.push_back(stratum(theory, G, classes[i]));
    const auto& S = strata.back();
    if (S.empty) continue;
    meta.truncated = meta.truncated || S.truncated;
    raw_of[i].resize(S.points.size());
    for (const auto& orbit : weyl_orbits(S)) {
      std::size_t rep = *std::min_element(orbit.begin(), orbit.end(), [&](std::size_t x, std::size_t y) {
        return S.points[x].descriptor < S.points[y].descriptor;
      });
      std::size_t raw = b.add(i, classes[i].key, S.points[rep]);
      for (std::size_t x : orbit) raw_of[i][x] = raw;
    }
    for (auto [u, v] : S.internal_order) b.edge(raw_of[i][u], raw_of[i][v], EdgeKind::internal);
  }

  switch (theory.kind) {
    case TKind::height1: {
      // E^0(BG) is local of dimension one: everything specializes to F_p
      const std::size_t closed = raw_of[0][1];
      for (std::size_t i = 1; i < classes.size(); ++i)
        for (std::size_t raw : raw_of[i]) b.edge(raw, closed, EdgeKind::cross_stratum);
      break;
    }
    case TKind::ku: {
      if (!is_cyclic_group(G)) {
        meta.cross_edges = false;
        break;
      }
      const auto& whole = classes.back();
      const auto VG = full_spectrum(theory, G, whole);
      std::vector<std::optional<std::size_t>> raw_of_vg(VG.points.size());
      for (std::size_t i = 0; i < classes.size(); ++i)
        for (std::size_t x = 0; x < strata[i].points.size(); ++x)
          raw_of_vg[ku_push(theory, G, classes[i], strata[i].points[x], whole, VG, PermGroup::identity())] =
              raw_of[i][x];
      for (const auto& e : VG.edges) {
        if (!raw_of_vg[e.from] || !raw_of_vg[e.to]) throw DomainError("ring spectrum point outside every stratum");
        std::size_t u = *raw_of_vg[e.from], v = *raw_of_vg[e.to];
        if (b.class_of(u) != b.class_of(v)) b.edge(u, v, EdgeKind::cross_stratum);
      }
      break;
    }
    case TKind::hz: {
      const auto VG = full_spectrum(theory, G, classes.back());
      auto locate = [&](std::size_t j) {
        std::size_t i = find_class(G, classes, VG.support[j]);
        for (std::size_t x = 0; x < strata[i].points.size(); ++x)
          if (strata[i].points[x].descriptor == VG.points[j].descriptor) return raw_of[i][x];
        throw DomainError("point " + VG.points[j].label + " is not in its stratum");
      };
      for (const auto& e : VG.edges) {
        std::size_t u = locate(e.from), v = locate(e.to);
        if (e.external) b.edge(u, v, EdgeKind::external, e.provenance);
        else if (b.class_of(u) != b.class_of(v)) b.edge(u, v, EdgeKind::cross_stratum);
      }
      break;
    }
    case TKind::kr: break;
    case TKind::modp: {
      // Hasse diagram of the support variety: V_E contains V_E' for E' <= E,
      // and every stratum specializes to the irrelevant ideal
      const std::size_t bottom = raw_of[0][0];
      for (std::size_t i = 1; i < classes.size(); ++i) {
        if (strata[i].empty) continue;
        const std::size_t r = rank_of(G, classes[i].representative);
        if (r == 1) {
          b.edge(raw_of[i][0], bottom, EdgeKind::cross_stratum);
          continue;
        }
        for (std::size_t x = 1; x < raw_of[i].size(); ++x) b.edge(raw_of[i][x], bottom, EdgeKind::cross_stratum);
        for (std::size_t j = 1; j < classes.size(); ++j)
          if (!strata[j].empty && rank_of(G, classes[j].representative) == 1 &&
              subconjugate(G, classes[j].representative, classes[i].representative))
            b.edge(raw_of[i][0], raw_of[j][0], EdgeKind::cross_stratum);
      }
      break;
    }
  }
  return b.finish(std::move(meta));
}

StratifiedSpace assemble_weak(const TheorySpec& theory, const PermGroup& G, const std::string& group_label) {
  check_supported(theory, G);
  if (!theory.has_transition_maps())
    throw UnsupportedError("theory " + theory.to_string() + " has no transition maps; use the strong assembly");
  const auto classes = subgroups_up_to_conjugacy(G);
  SpaceMeta meta = base_meta(theory, group_label, "weak");
  const auto C = build_orbit_category(G, theory.family());
  std::vector<FullSpectrum> V;
  std::vector<std::vector<std::string>> labels;
  for (const auto& H : C.objects()) {
    meta.truncated = meta.truncated || stratum(theory, G, H).truncated;
    V.push_back(full_spectrum(theory, G, H));
    labels.emplace_back();
    for (const auto& p : V.back().points) labels.back().push_back(p.label);
  }
  const auto D = make_diagram(C, labels, [&](const Morphism& m) {
    return transition_map(theory, G, C.objects()[m.source], V[m.source], C.objects()[m.target], V[m.target],
                          m.witness);
  });
  const auto quotient = colimit(D);

  Builder b;
  std::vector<std::size_t> raw_of_class;
  for (const auto& members : quotient.classes) {
    std::optional<std::size_t> cls;
    const LocalPoint* best = nullptr;
    for (auto [o, x] : members) {
      std::size_t s = find_class(G, classes, V[o].support[x]);
      if (cls && *cls != s) throw DomainError("colimit class meets two strata");
      cls = s;
      // the stratum's own copy: a point of V(H) supported on H itself
      if (C.objects()[o].index == s && V[o].support[x].order() == classes[s].order() &&
          (!best || V[o].points[x].descriptor < best->descriptor))
        best = &V[o].points[x];
    }
    if (!best) throw DomainError("colimit class has no point in its own stratum");
    raw_of_class.push_back(b.add(*cls, classes[*cls].key, *best));
  }
  for (std::size_t o = 0; o < V.size(); ++o)
    for (const auto& e : V[o].edges) {
      std::size_t u = raw_of_class[quotient.projection[o][e.from]];
      std::size_t v = raw_of_class[quotient.projection[o][e.to]];
      if (e.external) b.edge(u, v, EdgeKind::external, e.provenance);
      else b.edge(u, v, b.class_of(u) == b.class_of(v) ? EdgeKind::internal : EdgeKind::cross_stratum);
    }
  return b.finish(std::move(meta));
}

SpaceIsoReport check_agreement(const StratifiedSpace& a, const StratifiedSpace& b) {
  SpaceIsoReport out;
  const bool cross = a.meta.cross_edges && b.meta.cross_edges;
  auto kept = [&](const StratifiedSpace& s) {
    std::vector<SpaceEdge> edges;
    for (const auto& e : s.edges)
      if (cross || e.kind != EdgeKind::cross_stratum) edges.push_back(e);
    return edges;
  };
  const auto ea = kept(a), eb = kept(b);
  const std::size_t n = a.points.size();
  if (n != b.points.size()) {
    out.obstruction = "point count mismatch: " + std::to_string(n) + " vs " + std::to_string(b.points.size());
    return out;
  }

  using Sig = std::tuple<std::string, std::string, bool>;
  auto sig = [](const SpacePoint& p) { return Sig{p.stratum, p.label, p.closed}; };
  std::multiset<Sig> la, lb;
  for (const auto& p : a.points) la.insert(sig(p));
  for (const auto& p : b.points) lb.insert(sig(p));
  if (la != lb) {
    out.obstruction = "label multiset mismatch";
    return out;
  }
  if (ea.size() != eb.size()) {
    out.obstruction = "edge count mismatch: " + std::to_string(ea.size()) + " vs " + std::to_string(eb.size());
    return out;
  }

  // degree signature per point: sorted (direction, kind, provenance) list
  using Deg = std::vector<std::tuple<int, EdgeKind, std::string>>;
  auto degrees = [](std::size_t count, const std::vector<SpaceEdge>& edges) {
    std::vector<Deg> d(count);
    for (const auto& e : edges) {
      d[e.from].emplace_back(0, e.kind, e.provenance);
      d[e.to].emplace_back(1, e.kind, e.provenance);
    }
    for (auto& x : d) std::sort(x.begin(), x.end());
    return d;
  };
  const auto da = degrees(n, ea), db = degrees(n, eb);
  std::vector<std::vector<std::size_t>> candidates(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      if (sig(a.points[i]) == sig(b.points[j]) && da[i] == db[j]) candidates[i].push_back(j);
    if (candidates[i].empty()) {
      out.obstruction = "degree sequence mismatch at " + a.points[i].label + " [" + a.points[i].stratum + "]";
      return out;
    }
  }

  std::set<std::tuple<std::size_t, std::size_t, EdgeKind, std::string>> target;
  for (const auto& e : eb) target.insert({e.from, e.to, e.kind, e.provenance});
  std::vector<std::vector<const SpaceEdge*>> incident(n);
  for (const auto& e : ea) {
    incident[e.from].push_back(&e);
    incident[e.to].push_back(&e);
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return candidates[x].size() < candidates[y].size(); });

  constexpr std::size_t kUnset = SIZE_MAX;
  std::vector<std::size_t> map(n, kUnset);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> extend = [&](std::size_t k) {
    if (k == n) return true;
    const std::size_t i = order[k];
    for (std::size_t j : candidates[i]) {
      if (used[j]) continue;
      map[i] = j;
      bool ok = true;
      for (const SpaceEdge* e : incident[i]) {
        if (map[e->from] == kUnset || map[e->to] == kUnset) continue;
        if (!target.count({map[e->from], map[e->to], e->kind, e->provenance})) {
          ok = false;
          break;
        }
      }
      if (ok) {
        used[j] = true;
        if (extend(k + 1)) return true;
        used[j] = false;
      }
    }
    map[i] = kUnset;
    return false;
  };
  if (!extend(0)) {
    out.obstruction = "exhausted search";
    return out;
  }
  out.isomorphic = true;
  out.mapping = std::move(map);
  return out;
}

SpaceIsoReport check_agreement(const TheorySpec& theory, const PermGroup& G, const std::string& group_label) {
  return check_agreement(assemble_strong(theory, G, group_label), assemble_weak(theory, G, group_label));
}

std::string validate(const StratifiedSpace& s) {
  const std::size_t n = s.points.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (s.points[i].id != i) return "point ids are not 0..n-1 in order";
    if (s.points[i].stratum.empty()) return "point " + std::to_string(i) + " has no stratum";
  }
  std::vector<std::vector<std::size_t>> out(n);
  std::vector<std::size_t> indegree(n, 0);
  for (const auto& e : s.edges) {
    if (e.from >= n || e.to >= n) return "edge endpoint out of range";
    if (e.from == e.to) return "self-loop at point " + std::to_string(e.from);
    out[e.from].push_back(e.to);
    ++indegree[e.to];
  }
  std::vector<std::size_t> ready;
  for (std::size_t i = 0; i < n; ++i)
    if (indegree[i] == 0) ready.push_back(i);
  std::size_t seen = 0;
  while (!ready.empty()) {
    std::size_t x = ready.back();
    ready.pop_back();
    ++seen;
    for (std::size_t y : out[x])
      if (--indegree[y] == 0) ready.push_back(y);
  }
  if (seen != n) return "edges contain a cycle";
  return "";
}

std::string to_json(const StratifiedSpace& s) {
  json doc;
  doc["schema"] = "quillen-strata/1";
  doc["meta"] = {{"group", s.meta.group},
                 {"theory", s.meta.theory},
                 {"family", s.meta.family},
                 {"mode", s.meta.mode},
                 {"bounds", {{"prime", s.meta.prime_bound}, {"degree", s.meta.degree_bound}}},
                 {"truncated", s.meta.truncated},
                 {"cross_edges", s.meta.cross_edges}};
  doc["points"] = json::array();
  for (const auto& p : s.points)
    doc["points"].push_back({{"id", p.id}, {"stratum", p.stratum}, {"label", p.label}, {"closed", p.closed}});
  doc["edges"] = json::array();
  for (const auto& e : s.edges)
    doc["edges"].push_back(
        {{"from", e.from}, {"to", e.to}, {"kind", to_string(e.kind)}, {"provenance", e.provenance}});
  return doc.dump(2) + "\n";
}

StratifiedSpace from_json(std::string_view text) {
  StratifiedSpace s;
  try {
    const json doc = json::parse(text);
    if (doc.at("schema").get<std::string>() != "quillen-strata/1") throw ParseError("unknown schema");
    const auto& m = doc.at("meta");
    s.meta.group = m.at("group").get<std::string>();
    s.meta.theory = m.at("theory").get<std::string>();
    s.meta.family = m.at("family").get<std::string>();
    s.meta.mode = m.at("mode").get<std::string>();
    s.meta.prime_bound = m.at("bounds").at("prime").get<unsigned>();
    s.meta.degree_bound = m.at("bounds").at("degree").get<unsigned>();
    s.meta.truncated = m.at("truncated").get<bool>();
    s.meta.cross_edges = m.at("cross_edges").get<bool>();
    for (const auto& p : doc.at("points"))
      s.points.push_back({p.at("id").get<std::size_t>(), p.at("stratum").get<std::string>(),
                          p.at("label").get<std::string>(), p.at("closed").get<bool>()});
    for (const auto& e : doc.at("edges"))
      s.edges.push_back({e.at("from").get<std::size_t>(), e.at("to").get<std::size_t>(),
                         parse_edge_kind(e.at("kind").get<std::string>()), e.at("provenance").get<std::string>()});
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed spectrum document: ") + e.what());
  }
  if (auto problem = validate(s); !problem.empty()) throw ParseError("invalid spectrum document: " + problem);
  std::sort(s.edges.begin(), s.edges.end());
  return s;
}

std::string to_dot(const StratifiedSpace& s) {
  auto quote = [](const std::string& text) {
    std::string out = "\"";
    for (char c : text) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    return out + "\"";
  };
  // closure goes upwards: generic points at the bottom
  std::string out = "digraph spectrum {\n  rankdir=BT;\n";
  for (const auto& p : s.points) {
    out += "  n" + std::to_string(p.id) + " [label=" + quote(p.label + " [" + p.stratum + "]");
    if (p.closed) out += ", shape=box";
    out += "];\n";
  }
  for (const auto& e : s.edges) {
    out += "  n" + std::to_string(e.from) + " -> n" + std::to_string(e.to);
    if (e.kind == EdgeKind::external) out += " [style=dashed, label=" + quote(e.provenance) + "]";
    out += ";\n";
  }
  return out + "}\n";
}

}  // namespace qstrat
