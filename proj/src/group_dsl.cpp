#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>

#include "qstrat/error.hpp"
#include "qstrat/groups.hpp"

namespace qstrat {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::size_t parse_count(std::string_view text, std::string_view what) {
  text = trim(text);
  if (text.empty()) throw ParseError("missing " + std::string(what));
  std::size_t v = 0;
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ParseError("bad " + std::string(what) + ": '" + std::string(text) + "'");
    v = v * 10 + static_cast<std::size_t>(c - '0');
    if (v > 1'000'000) throw BoundError(std::string(what) + " too large");
  }
  return v;
}

void check_degree(std::size_t degree) {
  if (degree > kMaxDegree)
    throw BoundError("degree " + std::to_string(degree) + " exceeds " + std::to_string(kMaxDegree));
}

using Table = std::vector<std::vector<std::uint32_t>>;

Table make_table(std::size_t n, const std::function<std::uint32_t(std::uint32_t, std::uint32_t)>& mul) {
  Table t(n, std::vector<std::uint32_t>(n));
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b) t[a][b] = mul(a, b);
  return t;
}

PermGroup cyclic(std::size_t n) {
  if (n == 0) throw ParseError("cyclic order must be positive");
  check_degree(n);
  std::vector<Point> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<Point>((i + 1) % n);
  return PermGroup(n, {Permutation(std::move(images))});
}

PermGroup dihedral(std::size_t n) {
  if (n == 0) throw ParseError("dihedral parameter must be positive");
  if (n == 1) return cyclic(2);
  if (n == 2) {
    return PermGroup(4, {Permutation::from_cycles(4, {{0, 1}, {2, 3}}),
                         Permutation::from_cycles(4, {{0, 2}, {1, 3}})});
  }
  check_degree(n);
  std::vector<Point> rot(n), refl(n);
  for (std::size_t i = 0; i < n; ++i) {
    rot[i] = static_cast<Point>((i + 1) % n);
    refl[i] = static_cast<Point>(n - 1 - i);
  }
  return PermGroup(n, {Permutation(std::move(rot)), Permutation(std::move(refl))});
}

PermGroup symmetric(std::size_t n) {
  if (n == 0) throw ParseError("symmetric degree must be positive");
  check_degree(n);
  if (n == 1) return PermGroup(1, {});
  std::vector<Point> cycle(n);
  for (std::size_t i = 0; i < n; ++i) cycle[i] = static_cast<Point>(i);
  return PermGroup(n, {Permutation::from_cycles(n, {{0, 1}}), Permutation::from_cycles(n, {cycle})});
}

PermGroup alternating(std::size_t n) {
  if (n == 0) throw ParseError("alternating degree must be positive");
  check_degree(n);
  std::vector<Permutation> gens;
  for (std::size_t i = 2; i < n; ++i)
    gens.push_back(Permutation::from_cycles(n, {{0, 1, static_cast<Point>(i)}}));
  return PermGroup(n, std::move(gens));
}

PermGroup elementary_abelian(std::string_view arg) {
  auto caret = arg.find('^');
  std::size_t p = parse_count(arg.substr(0, caret), "prime");
  std::size_t k = caret == std::string_view::npos ? 1 : parse_count(arg.substr(caret + 1), "rank");
  if (prime_of_p_group(p) != p || p < 2) throw ParseError("elem-abelian needs a prime base");
  std::size_t n = 1;
  for (std::size_t i = 0; i < k; ++i) {
    n *= p;
    check_degree(n);
  }
  // Points are base-p digit vectors; generator i adds 1 in digit i.
  std::vector<Permutation> gens;
  std::size_t stride = 1;
  for (std::size_t i = 0; i < k; ++i, stride *= p) {
    std::vector<Point> images(n);
    for (std::size_t x = 0; x < n; ++x) {
      std::size_t digit = (x / stride) % p;
      images[x] = static_cast<Point>(x - digit * stride + ((digit + 1) % p) * stride);
    }
    gens.emplace_back(std::move(images));
  }
  return PermGroup(n, std::move(gens));
}

// Dic_m of order 4m: a^(2m) = 1, x^2 = a^m, x a x^-1 = a^-1. Element a^i x^j is 2m*j + i.
PermGroup dicyclic(std::size_t order) {
  if (order < 4 || order % 4 != 0) throw ParseError("dicyclic order must be a multiple of 4");
  check_degree(order);
  const std::uint32_t m2 = static_cast<std::uint32_t>(order / 2);
  const std::uint32_t m = m2 / 2;
  auto mul = [m2, m](std::uint32_t u, std::uint32_t v) -> std::uint32_t {
    std::uint32_t i1 = u % m2, j1 = u / m2, i2 = v % m2, j2 = v / m2;
    // x^j1 a^i2 = a^(+-i2) x^j1
    std::uint32_t i = (i1 + (j1 ? m2 - i2 : i2)) % m2;
    std::uint32_t j = j1 + j2;
    if (j == 2) {
      j = 0;
      i = (i + m) % m2;
    }
    return j * m2 + i;
  };
  auto table = make_table(order, mul);
  const std::uint32_t gens[] = {1, m2};
  return regular_group(order, table, gens);
}

// C_m x| C_n where the generator of C_n acts by x -> x^r. Element (i, j) is n*i + j.
PermGroup semidirect(std::string_view arg) {
  std::vector<std::size_t> v;
  while (true) {
    auto comma = arg.find(',');
    v.push_back(parse_count(arg.substr(0, comma), "semidirect parameter"));
    if (comma == std::string_view::npos) break;
    arg.remove_prefix(comma + 1);
  }
  if (v.size() != 3) throw ParseError("semidirect expects m,n,r");
  const std::size_t m = v[0], n = v[1], r = v[2] % std::max<std::size_t>(m, 1);
  if (m == 0 || n == 0) throw ParseError("semidirect factors must be nontrivial");
  if (std::gcd(r, m) != 1 && m > 1) throw ParseError("semidirect twist must be a unit mod m");
  std::size_t rn = 1;
  for (std::size_t i = 0; i < n; ++i) rn = (rn * r) % m;
  if (m > 1 && rn != 1 % m) throw ParseError("semidirect twist order must divide n");
  check_degree(m * n);
  std::vector<std::size_t> rpow(n, 1 % m);
  for (std::size_t j = 1; j < n; ++j) rpow[j] = (rpow[j - 1] * r) % m;
  auto mul = [&](std::uint32_t u, std::uint32_t w) -> std::uint32_t {
    std::size_t i1 = u / n, j1 = u % n, i2 = w / n, j2 = w % n;
    std::size_t i = (i1 + rpow[j1] * i2) % m;
    std::size_t j = (j1 + j2) % n;
    return static_cast<std::uint32_t>(i * n + j);
  };
  auto table = make_table(m * n, mul);
  const std::uint32_t gens[] = {static_cast<std::uint32_t>(n % (m * n)), 1};
  return regular_group(m * n, table, gens);
}

PermGroup direct_product(const PermGroup& a, const PermGroup& b) {
  const std::size_t degree = a.degree() + b.degree();
  check_degree(degree);
  std::vector<Permutation> gens;
  for (const auto& g : a.generators()) gens.push_back(g.extended(degree));
  for (const auto& g : b.generators()) {
    std::vector<Point> images(degree);
    std::iota(images.begin(), images.end(), Point{0});
    for (std::size_t x = 0; x < b.degree(); ++x)
      images[a.degree() + x] = static_cast<Point>(a.degree() + g(static_cast<Point>(x)));
    gens.emplace_back(std::move(images));
  }
  return PermGroup(degree, std::move(gens));
}

PermGroup from_cycles_spec(std::string_view body) {
  std::vector<std::vector<std::vector<Point>>> generators;
  std::size_t degree = 1;
  while (true) {
    auto semi = body.find(';');
    std::string_view gen = trim(body.substr(0, semi));
    std::vector<std::vector<Point>> cycles;
    std::size_t pos = 0;
    while (pos < gen.size()) {
      if (std::isspace(static_cast<unsigned char>(gen[pos]))) {
        ++pos;
        continue;
      }
      if (gen[pos] != '(') throw ParseError("expected '(' in cycle notation");
      auto close = gen.find(')', pos);
      if (close == std::string_view::npos) throw ParseError("unterminated cycle");
      std::string_view inner = gen.substr(pos + 1, close - pos - 1);
      std::vector<Point> cycle;
      std::size_t i = 0;
      while (i < inner.size()) {
        if (inner[i] == ',' || std::isspace(static_cast<unsigned char>(inner[i]))) {
          ++i;
          continue;
        }
        std::size_t j = i;
        while (j < inner.size() && std::isdigit(static_cast<unsigned char>(inner[j]))) ++j;
        if (j == i) throw ParseError("bad cycle entry in '" + std::string(inner) + "'");
        std::size_t point = parse_count(inner.substr(i, j - i), "point");
        if (point >= kMaxDegree) throw BoundError("point exceeds maximum degree");
        cycle.push_back(static_cast<Point>(point));
        degree = std::max(degree, point + 1);
        i = j;
      }
      if (cycle.size() > 1) cycles.push_back(std::move(cycle));
      pos = close + 1;
    }
    generators.push_back(std::move(cycles));
    if (semi == std::string_view::npos) break;
    body.remove_prefix(semi + 1);
  }
  std::vector<Permutation> gens;
  for (const auto& cycles : generators) {
    try {
      gens.push_back(Permutation::from_cycles(degree, cycles));
    } catch (const DomainError& e) {
      throw ParseError(e.what());
    }
  }
  return PermGroup(degree, std::move(gens));
}

}  // namespace

PermGroup regular_group(std::size_t n, const std::vector<std::vector<std::uint32_t>>& table,
                        std::span<const std::uint32_t> generators) {
  check_degree(n);
  std::vector<Permutation> gens;
  for (std::uint32_t g : generators) {
    std::vector<Point> images(n);
    for (std::size_t x = 0; x < n; ++x) images[x] = static_cast<Point>(table[g][x]);
    gens.emplace_back(std::move(images));
  }
  return PermGroup(n, std::move(gens));
}

PermGroup build_group(std::string_view spec) {
  spec = trim(spec);
  auto colon = spec.find(':');
  if (colon == std::string_view::npos) throw ParseError("group spec needs 'kind:argument'");
  std::string_view kind = spec.substr(0, colon);
  std::string_view arg = spec.substr(colon + 1);
  if (kind == "cyclic") return cyclic(parse_count(arg, "cyclic order"));
  if (kind == "dihedral") return dihedral(parse_count(arg, "dihedral parameter"));
  if (kind == "sym") return symmetric(parse_count(arg, "symmetric degree"));
  if (kind == "alt") return alternating(parse_count(arg, "alternating degree"));
  if (kind == "elem-abelian") return elementary_abelian(arg);
  if (kind == "dicyclic") return dicyclic(parse_count(arg, "dicyclic order"));
  if (kind == "quaternion") {
    std::size_t n = parse_count(arg, "quaternion order");
    if (n < 8 || prime_of_p_group(n) != 2) throw ParseError("quaternion order must be 2^k >= 8");
    return dicyclic(n);
  }
  if (kind == "semidirect") return semidirect(arg);
  if (kind == "perm") return from_cycles_spec(arg);
  if (kind == "product") {
    // Split at the first 'x' for which both sides parse.
    for (std::size_t pos = arg.find('x'); pos != std::string_view::npos;
         pos = arg.find('x', pos + 1)) {
      std::optional<PermGroup> left;
      try {
        left = build_group(arg.substr(0, pos));
      } catch (const ParseError&) {
        continue;
      }
      std::optional<PermGroup> right;
      try {
        right = build_group(arg.substr(pos + 1));
      } catch (const ParseError&) {
        continue;
      }
      return direct_product(*left, *right);
    }
    throw ParseError("product needs '<spec>x<spec>'");
  }
  throw ParseError("unknown group kind: " + std::string(kind));
}

std::string to_dsl(const PermGroup& G) {
  std::string out = "perm:";
  bool first = true;
  for (const auto& g : G.generators()) {
    if (!first) out += ';';
    out += g.cycle_string();
    first = false;
  }
  if (first) out += "()";
  return out;
}

}  // namespace qstrat
