#include "qstrat/cli.hpp"

#include <charconv>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qstrat/error.hpp"
#include "qstrat/quillen_cat.hpp"
#include "qstrat/rings/level.hpp"
#include "qstrat/spectrum.hpp"
#include "qstrat/strata.hpp"
#include "qstrat/verify.hpp"

namespace qstrat {
namespace {

using nlohmann::json;

std::optional<std::size_t> parse_size(std::string_view s) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

Subgroup subgroup_from_perms(const PermGroup& G, const std::vector<Permutation>& gens, std::string_view selector) {
  std::vector<ElemId> ids;
  for (const auto& g : gens) {
    if (g.degree() > G.degree())
      throw DomainError("selector " + std::string(selector) + " moves points outside the group's degree");
    auto id = G.find(g.extended(G.degree()));
    if (!id) throw DomainError("selector " + std::string(selector) + ": " + g.cycle_string() + " is not in the group");
    ids.push_back(*id);
  }
  return closure(G, ids);
}

// A<n> and S<n> on the points 0..n-1.
std::optional<std::vector<Permutation>> named_generators(const PermGroup& G, std::string_view s) {
  if (s.size() < 2 || (s[0] != 'A' && s[0] != 'S')) return std::nullopt;
  auto n = parse_size(s.substr(1));
  if (!n) return std::nullopt;
  if (*n > G.degree()) throw DomainError(std::string(s) + " needs " + std::to_string(*n) + " points");
  std::size_t d = G.degree();
  std::vector<Permutation> gens;
  if (s[0] == 'A') {
    for (std::size_t i = 2; i < *n; ++i)
      gens.push_back(Permutation::from_cycles(d, {{0, 1, static_cast<Point>(i)}}));
  } else if (*n >= 2) {
    gens.push_back(Permutation::from_cycles(d, {{0, 1}}));
    std::vector<Point> cycle;
    for (std::size_t i = 0; i < *n; ++i) cycle.push_back(static_cast<Point>(i));
    gens.push_back(Permutation::from_cycles(d, {cycle}));
  }
  return gens;
}

void write_document(const CliConfig& c, std::ostream& out, const std::string& doc) {
  if (c.output.empty() || c.output == "-") {
    out << doc;
    return;
  }
  std::ofstream f(c.output, std::ios::binary);
  if (!f) throw DomainError("cannot open output file " + c.output);
  f << doc;
  if (!f) throw DomainError("failed writing " + c.output);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

TheorySpec theory_of(const CliConfig& c) {
  if (c.theory.empty()) throw ParseError("--theory is required");
  TheorySpec t = TheorySpec::parse(c.theory);
  if (c.prime_bound) t.prime_bound = *c.prime_bound;
  if (c.degree_bound) t.degree_bound = *c.degree_bound;
  if (t.prime_bound > kMaxPrimeBound) throw BoundError("prime bound exceeds 1000");
  if (t.degree_bound == 0) throw ParseError("degree bound must be positive");
  return t;
}

std::string format_or(const CliConfig& c, const char* fallback, std::initializer_list<const char*> allowed) {
  std::string f = c.format.empty() ? fallback : c.format;
  for (const char* a : allowed)
    if (f == a) return f;
  throw ParseError("format '" + f + "' is not available for " + c.command);
}

std::vector<std::string> generator_strings(const PermGroup& G, const Subgroup& H) {
  std::vector<std::string> out;
  for (ElemId g : generators_of(G, H)) out.push_back(G.element(g).cycle_string());
  return out;
}

// Commands.

std::string cmd_spectrum(const CliConfig& c) {
  TheorySpec t = theory_of(c);
  PermGroup G = build_group(c.group);
  StratifiedSpace s;
  if (c.mode == "strong") s = assemble_strong(t, G, c.group);
  else if (c.mode == "weak") s = assemble_weak(t, G, c.group);
  else throw ParseError("mode must be strong or weak");
  std::string f = format_or(c, "json", {"json", "dot", "table"});
  if (f == "json") return to_json(s);
  if (f == "dot") return to_dot(s);
  std::ostringstream os;
  os << "group " << s.meta.group << "  theory " << s.meta.theory << "  mode " << s.meta.mode << "\n";
  os << "points " << s.points.size() << "  edges " << s.edges.size() << (s.meta.truncated ? "  (truncated)" : "") << "\n";
  for (const auto& p : s.points)
    os << std::setw(4) << p.id << "  " << std::left << std::setw(8) << p.stratum << std::right << "  "
       << (p.closed ? "closed  " : "        ") << p.label << "\n";
  for (const auto& e : s.edges) {
    os << "  " << e.from << " -> " << e.to << "  " << to_string(e.kind);
    if (!e.provenance.empty()) os << "  [" << e.provenance << "]";
    os << "\n";
  }
  return os.str();
}

std::string cmd_strata(const CliConfig& c) {
  TheorySpec t = theory_of(c);
  PermGroup G = build_group(c.group);
  check_supported(t, G);
  std::string f = format_or(c, "json", {"json", "table"});
  json doc;
  doc["group"] = c.group;
  doc["theory"] = t.to_string();
  doc["family"] = t.family().to_string();
  doc["bounds"] = {{"prime", t.prime_bound}, {"degree", t.degree_bound}};
  doc["strata"] = json::array();
  std::ostringstream os;
  for (const auto& H : family_members(G, t.family())) {
    StratumModel S = stratum(t, G, H);
    json js;
    js["subgroup"] = H.key;
    js["order"] = H.order();
    js["weyl"] = {{"kind", to_string(S.weyl.kind)}, {"order", S.weyl.order}};
    js["points"] = json::array();
    for (const auto& p : S.points) js["points"].push_back({{"label", p.label}, {"closed", p.closed}});
    js["internal_edges"] = json::array();
    for (auto [a, b] : S.internal_order) js["internal_edges"].push_back({a, b});
    auto orbits = weyl_orbits(S);
    js["orbits"] = orbits;
    js["action_trivial"] = orbits.size() == S.points.size();
    js["empty"] = S.empty;
    if (S.empty) js["empty_reason"] = S.empty_reason;
    js["truncated"] = S.truncated;
    doc["strata"].push_back(js);

    os << H.key << "  |W" << (S.weyl.kind == WeylKind::ordinary ? "" : "^" + to_string(S.weyl.kind)) << "| = " << S.weyl.order
       << "  points " << S.points.size() << "  orbits " << orbits.size() << (S.empty ? "  empty: " + S.empty_reason : "")
       << "\n";
    for (const auto& p : S.points) os << "    " << (p.closed ? "* " : "  ") << p.label << "\n";
  }
  return f == "json" ? dump(doc) : os.str();
}

std::string cmd_subgroups(const CliConfig& c) {
  PermGroup G = build_group(c.group);
  auto classes = subgroups_up_to_conjugacy(G);
  std::string f = format_or(c, "json", {"json", "table"});
  std::vector<SubgroupClass> shown = classes;
  if (!c.family.empty()) shown = family_members(G, classes, FamilySpec::parse(c.family));
  json doc;
  doc["group"] = c.group;
  doc["order"] = G.order();
  if (!c.family.empty()) doc["family"] = FamilySpec::parse(c.family).to_string();
  doc["classes"] = json::array();
  std::ostringstream os;
  os << "group " << c.group << "  order " << G.order() << "  classes " << shown.size() << "\n";
  for (const auto& H : shown) {
    json j;
    j["index"] = H.index;
    j["key"] = H.key;
    j["name"] = H.name;
    j["order"] = H.order();
    j["conjugates"] = H.conjugates;
    j["normalizer_order"] = H.normalizer.order();
    j["centralizer_order"] = H.centralizer.order();
    j["generators"] = generator_strings(G, H.representative);
    bool ab = is_abelian(G, H.representative);
    j["abelian"] = ab;
    j["cyclic"] = cyclic_generator(G, H.representative).has_value();
    if (ab) j["invariants"] = abelian_invariants(G, H.representative);
    doc["classes"].push_back(j);
    os << std::setw(4) << H.index << "  " << std::left << std::setw(10) << H.key << std::right << std::setw(6) << H.order()
       << "  conj " << std::setw(3) << H.conjugates << "  |N| " << std::setw(5) << H.normalizer.order() << "  |C| "
       << std::setw(5) << H.centralizer.order() << "\n";
  }
  return f == "json" ? dump(doc) : os.str();
}

std::string cmd_weyl(const CliConfig& c) {
  if (c.h.empty()) throw ParseError("--h is required");
  PermGroup G = build_group(c.group);
  auto classes = subgroups_up_to_conjugacy(G);
  const SubgroupClass& H = select_subgroup(G, classes, c.h);
  std::vector<WeylKind> kinds;
  if (c.weyl_kind == "all") kinds = {WeylKind::ordinary, WeylKind::global, WeylKind::quillen};
  else kinds = {parse_weyl_kind(c.weyl_kind)};
  std::string f = format_or(c, "json", {"json", "table"});
  json doc;
  doc["group"] = c.group;
  doc["subgroup"] = {{"key", H.key}, {"order", H.order()}, {"generators", generator_strings(G, H.representative)}};
  doc["weyl"] = json::array();
  std::ostringstream os;
  os << "subgroup " << H.key << " of order " << H.order() << " in " << c.group << "\n";
  for (WeylKind k : kinds) {
    WeylGroup W = weyl(G, H, k);
    json j;
    j["kind"] = to_string(k);
    j["order"] = W.order;
    j["normalizer_order"] = W.normalizer.order();
    j["kernel_order"] = W.kernel.order();
    std::vector<std::string> gens;
    for (const auto& g : W.generators) gens.push_back(g.cycle_string());
    j["coset_generators"] = gens;
    doc["weyl"].push_back(j);
    os << "  " << std::left << std::setw(9) << to_string(k) << std::right << " order " << W.order << "  (|N| "
       << W.normalizer.order() << ", kernel " << W.kernel.order() << ")\n";
  }
  return f == "json" ? dump(doc) : os.str();
}

std::string cmd_double_cosets(const CliConfig& c) {
  if (c.h.empty() || c.k.empty()) throw ParseError("--h and --k are required");
  PermGroup G = build_group(c.group);
  auto classes = subgroups_up_to_conjugacy(G);
  const SubgroupClass& H = select_subgroup(G, classes, c.h);
  const SubgroupClass& K = select_subgroup(G, classes, c.k);
  auto D = double_cosets(G, H.representative, K.representative);
  std::string f = format_or(c, "json", {"json", "table"});
  json doc;
  doc["group"] = c.group;
  doc["h"] = H.key;
  doc["k"] = K.key;
  doc["count"] = D.pairs.size();
  doc["double_cosets"] = json::array();
  for (const auto& p : D.pairs)
    doc["double_cosets"].push_back({{"representative", G.element(p.representative).cycle_string()},
                                    {"size", p.size},
                                    {"intersection_order", p.intersection.order()}});
  std::size_t sum = D.orbit_sum(G.order());
  bool ok = D.mackey_holds(G.order());
  doc["mackey"] = {{"orbit_sum", sum}, {"expected", D.index_h * D.index_k}, {"holds", ok}};
  if (f == "json") return dump(doc);
  std::ostringstream os;
  os << H.key << " \\ " << c.group << " / " << K.key << ": " << D.pairs.size() << " double cosets\n";
  for (const auto& p : D.pairs)
    os << "  " << G.element(p.representative).cycle_string() << "  size " << p.size << "  |H^g n K| "
       << p.intersection.order() << "\n";
  os << "Mackey: " << sum << " = " << D.index_h << " x " << D.index_k << (ok ? "  pass" : "  FAIL") << "\n";
  return os.str();
}

OrbitDiagram parse_diagram(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("diagram is not valid JSON: ") + e.what());
  }
  OrbitDiagram D;
  try {
    for (const auto& o : j.at("objects")) D.objects.push_back(o.get<std::string>());
    for (const auto& ps : j.at("points")) {
      std::vector<std::string> names;
      for (const auto& p : ps) names.push_back(p.is_string() ? p.get<std::string>() : p.dump());
      D.points.push_back(std::move(names));
    }
    for (const auto& a : j.value("arrows", json::array())) {
      OrbitDiagram::Arrow arrow;
      arrow.source = a.at("source").get<std::size_t>();
      arrow.target = a.at("target").get<std::size_t>();
      arrow.map = a.at("map").get<std::vector<std::size_t>>();
      arrow.identity = a.value("identity", false);
      D.arrows.push_back(std::move(arrow));
    }
    for (const auto& c : j.value("compositions", json::array()))
      D.compositions.push_back(
          {c.at("first").get<std::size_t>(), c.at("second").get<std::size_t>(), c.at("result").get<std::size_t>()});
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed diagram: ") + e.what());
  }
  return D;
}

std::string cmd_coequalize(const CliConfig& c, std::istream& in) {
  std::string text;
  if (c.diagram.empty() || c.diagram == "-") {
    text.assign(std::istreambuf_iterator<char>(in), {});
  } else {
    std::ifstream f(c.diagram, std::ios::binary);
    if (!f) throw ParseError("cannot read diagram " + c.diagram);
    text.assign(std::istreambuf_iterator<char>(f), {});
  }
  format_or(c, "json", {"json"});
  OrbitDiagram D = parse_diagram(text);
  auto R = colimit(D);
  json doc;
  doc["class_count"] = R.classes.size();
  doc["classes"] = json::array();
  for (const auto& cls : R.classes) {
    json members = json::array();
    for (auto [o, p] : cls) members.push_back({{"object", D.objects[o]}, {"point", D.points[o][p]}});
    doc["classes"].push_back(members);
  }
  doc["projection"] = R.projection;
  return dump(doc);
}

std::string cmd_drinfeld(const CliConfig& c) {
  if (c.p == 0) throw ParseError("--p is required");
  DrinfeldReport r = drinfeld_check(c.p);
  std::string f = format_or(c, "json", {"json", "table"});
  json doc = {{"p", r.p},
              {"P", r.P},
              {"Q", r.Q},
              {"equal", r.equal},
              {"P_divides_Q", r.P_divides_Q},
              {"Q_divides_P", r.Q_divides_P},
              {"quotient", r.quotient},
              {"separable_char0", r.separable_char0},
              {"separable_mod_p", r.separable_mod_p},
              {"P_mod_p", r.P_mod_p}};
  if (f == "json") return dump(doc);
  std::ostringstream os;
  os << "p = " << r.p << "\n"
     << "P = " << r.P << "\n"
     << "Q = " << r.Q << "\n"
     << "P = Q over Q(zeta_" << r.p << "): " << (r.equal ? "yes" : "no") << "\n"
     << "P | Q: " << (r.P_divides_Q ? "yes" : "no") << ", quotient " << r.quotient << "\n"
     << "Q | P: " << (r.Q_divides_P ? "yes" : "no") << "\n"
     << "separable in characteristic 0: " << (r.separable_char0 ? "yes" : "no") << "\n"
     << "P mod " << r.p << " = " << r.P_mod_p << ", separable: " << (r.separable_mod_p ? "yes" : "no") << "\n";
  return os.str();
}

int cmd_verify(const CliConfig& c, std::ostream& out) {
  std::string f = format_or(c, "table", {"json", "table"});
  if (c.list) {
    std::string doc;
    if (f == "json") doc = dump(json(verification_suites()));
    else
      for (const auto& s : verification_suites()) doc += s + "\n";
    write_document(c, out, doc);
    return kExitOk;
  }
  std::vector<std::string> names = c.all ? std::vector<std::string>{} : c.suites;
  auto results = run_verification(names, default_thread_count());
  bool ok = true;
  json doc = json::array();
  std::ostringstream os;
  std::size_t checks = 0, failures = 0;
  double seconds = 0;
  for (const auto& r : results) {
    ok = ok && r.ok();
    checks += r.checks;
    failures += r.failures.size();
    seconds += r.seconds;
    doc.push_back({{"suite", r.module + "/" + r.name}, {"checks", r.checks}, {"failures", r.failures}, {"ok", r.ok()}});
    os << (r.ok() ? "PASS  " : "FAIL  ") << std::left << std::setw(34) << (r.module + "/" + r.name) << std::right
       << std::setw(8) << r.checks << " checks  " << std::fixed << std::setprecision(2) << r.seconds << "s\n";
    for (std::size_t i = 0; i < r.failures.size() && i < 10; ++i) os << "      " << r.failures[i] << "\n";
    if (r.failures.size() > 10) os << "      ... " << r.failures.size() - 10 << " more\n";
  }
  os << results.size() << " suites, " << checks << " checks, " << failures << " failures\n";
  write_document(c, out, f == "json" ? dump(doc) : os.str());
  return ok ? kExitOk : kExitVerifyFailed;
}

void report_error(std::ostream& err, const char* kind, const std::string& message, int code) {
  json j = {{"error", {{"kind", kind}, {"message", message}, {"exit_code", code}}}};
  err << j.dump() << "\n";
}

}  // namespace

const SubgroupClass& select_subgroup(const PermGroup& G, std::span<const SubgroupClass> classes,
                                     std::string_view selector) {
  if (selector.empty()) throw ParseError("empty subgroup selector");
  auto pick = [&](const Subgroup& H) -> const SubgroupClass& { return classes[find_class(G, classes, H)]; };

  if (selector.starts_with("gens:")) {
    std::string body(selector.substr(5));
    std::vector<Permutation> gens;
    if (!body.empty() && body != "()") {
      PermGroup P = build_group("perm:" + body);
      gens.assign(P.generators().begin(), P.generators().end());
    }
    return pick(subgroup_from_perms(G, gens, selector));
  }
  if (auto gens = named_generators(G, selector)) return pick(subgroup_from_perms(G, *gens, selector));

  auto dot = selector.find('.');
  auto order = parse_size(selector.substr(0, dot));
  if (order) {
    std::size_t idx = 1;
    if (dot != std::string_view::npos) {
      auto i = parse_size(selector.substr(dot + 1));
      if (!i || *i == 0) throw ParseError("bad subgroup selector '" + std::string(selector) + "'");
      idx = *i;
    }
    std::size_t seen = 0;
    for (const auto& c : classes)
      if (c.order() == *order && ++seen == idx) return c;
    throw DomainError("no subgroup class " + std::string(selector) + " (" + std::to_string(seen) + " classes of order " +
                      std::to_string(*order) + ")");
  }

  for (const auto& c : classes)
    if (c.key == selector) return c;
  const SubgroupClass* match = nullptr;
  for (const auto& c : classes)
    if (c.name == selector) {
      if (match) throw DomainError("subgroup name " + std::string(selector) + " is ambiguous; use its key");
      match = &c;
    }
  if (!match) throw DomainError("no subgroup class matches '" + std::string(selector) + "'");
  return *match;
}

int run(const CliConfig& c, std::istream& in, std::ostream& out, std::ostream& err) {
  try {
    if (c.command == "verify") return cmd_verify(c, out);
    std::string doc;
    if (c.command == "spectrum") doc = cmd_spectrum(c);
    else if (c.command == "strata") doc = cmd_strata(c);
    else if (c.command == "subgroups") doc = cmd_subgroups(c);
    else if (c.command == "weyl") doc = cmd_weyl(c);
    else if (c.command == "double-cosets") doc = cmd_double_cosets(c);
    else if (c.command == "coequalize") doc = cmd_coequalize(c, in);
    else if (c.command == "drinfeld-check") doc = cmd_drinfeld(c);
    else throw ParseError("unknown command '" + c.command + "'");
    write_document(c, out, doc);
    return kExitOk;
  } catch (const ParseError& e) {
    report_error(err, "parse", e.what(), kExitParse);
    return kExitParse;
  } catch (const BoundError& e) {
    report_error(err, "bound", e.what(), kExitDomain);
    return kExitDomain;
  } catch (const UnsupportedError& e) {
    report_error(err, "unsupported", e.what(), kExitDomain);
    return kExitDomain;
  } catch (const FunctorialityError& e) {
    report_error(err, "functoriality", e.what(), kExitDomain);
    return kExitDomain;
  } catch (const DomainError& e) {
    report_error(err, "domain", e.what(), kExitDomain);
    return kExitDomain;
  }
}

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quillen stratifications of prime spectra for finite groups", "qstrat"};
  app.require_subcommand(1);
  CliConfig c;
  unsigned prime_bound = 19, degree_bound = 1;

  auto add_group = [&](CLI::App* s) {
    s->add_option("--group,-g", c.group, "group DSL, e.g. cyclic:4, sym:3, product:cyclic:2xcyclic:2")
        ->capture_default_str();
  };
  auto add_format = [&](CLI::App* s, const char* def, std::vector<std::string> choices) {
    s->add_option("--format,-f", c.format, std::string("output format (default ") + def + ")")
        ->check(CLI::IsMember(std::move(choices)));
  };
  auto add_output = [&](CLI::App* s) { s->add_option("--output,-o", c.output, "write the document here instead of stdout"); };
  std::vector<CLI::Option*> prime_opts, degree_opts;
  auto add_theory = [&](CLI::App* s) {
    s->add_option("--theory,-t", c.theory, "height1:p=<p> | ku | hz:p=<p> | modp:q=<q>[,deg=<d>] | kr")->required();
    prime_opts.push_back(s->add_option("--prime-bound", prime_bound, "largest residue characteristic shown (default 19)"));
    degree_opts.push_back(s->add_option("--degree-bound", degree_bound, "largest form degree for modp (default 1)"));
  };

  auto* spectrum = app.add_subcommand("spectrum", "assemble the stratified spectrum");
  add_group(spectrum);
  add_theory(spectrum);
  spectrum->add_option("--mode", c.mode, "strong (strata quotients) or weak (colimit)")
      ->check(CLI::IsMember({"strong", "weak"}))
      ->capture_default_str();
  add_format(spectrum, "json", {"json", "dot", "table"});
  add_output(spectrum);

  auto* strata = app.add_subcommand("strata", "list the strata with their Weyl actions");
  add_group(strata);
  add_theory(strata);
  add_format(strata, "json", {"json", "table"});
  add_output(strata);

  auto* subgroups = app.add_subcommand("subgroups", "conjugacy classes of subgroups");
  add_group(subgroups);
  subgroups->add_option("--family", c.family, "restrict to a family: cyclic, cyclic-p(p), elem-abelian-p(p), ...");
  add_format(subgroups, "json", {"json", "table"});
  add_output(subgroups);

  const char* selector_help = "<order>[.<i>], gens:<cycles>, A<n>, S<n>, or a class key";
  auto* weylc = app.add_subcommand("weyl", "Weyl groups of a subgroup");
  weylc->set_help_flag("--help", "print this help and exit");  // --h is taken by the selector
  add_group(weylc);
  weylc->add_option("--h", c.h, selector_help)->required();
  weylc->add_option("--kind", c.weyl_kind, "ordinary, global, quillen or all")
      ->check(CLI::IsMember({"ordinary", "global", "quillen", "all"}))
      ->capture_default_str();
  add_format(weylc, "json", {"json", "table"});
  add_output(weylc);

  auto* dc = app.add_subcommand("double-cosets", "double cosets H\\G/K with the Mackey count");
  dc->set_help_flag("--help", "print this help and exit");
  add_group(dc);
  dc->add_option("--h", c.h, selector_help)->required();
  dc->add_option("--k", c.k, selector_help)->required();
  add_format(dc, "json", {"json", "table"});
  add_output(dc);

  c.diagram = "-";
  auto* coeq = app.add_subcommand("coequalize", "colimit of a finite-set diagram given as JSON");
  coeq->add_option("diagram,--diagram", c.diagram, "diagram file, - for stdin")->capture_default_str();
  add_output(coeq);

  auto* drin = app.add_subcommand("drinfeld-check", "compare the level and p-series polynomials at p");
  drin->add_option("--p", c.p, "prime, at most 13")->required();
  add_format(drin, "json", {"json", "table"});
  add_output(drin);

  auto* ver = app.add_subcommand("verify", "run the invariant suites over the built-in corpus");
  ver->add_flag("--all", c.all, "run every suite (also the default)");
  ver->add_option("--suite", c.suites, "module or module/suite; repeatable");
  ver->add_flag("--list", c.list, "list suite names");
  add_format(ver, "table", {"json", "table"});
  add_output(ver);
  ver->footer("Workers: QUILLEN_STRATA_THREADS, else the hardware concurrency. Exit 3 on any failure.");

  std::vector<std::string> argv_store{"qstrat"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    report_error(err, "parse", e.what(), kExitParse);
    return kExitParse;
  }

  for (auto* s : app.get_subcommands()) c.command = s->get_name();
  for (auto* o : prime_opts)
    if (o->count()) c.prime_bound = prime_bound;
  for (auto* o : degree_opts)
    if (o->count()) c.degree_bound = degree_bound;
  return run(c, in, out, err);
}

}  // namespace qstrat
