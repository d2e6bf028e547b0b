#include "qstrat/corpus.hpp"

#include <cstdint>

#include "qstrat/groups.hpp"

namespace qstrat {

namespace {

using Table = std::vector<std::vector<std::uint32_t>>;

// (Z/2)^2 x| C4 with the generator of C4 swapping the two Z/2 factors.
// Element (v, k) with v in 0..3 (bit vector) is 4*k + v.
std::string swap_extension_of_c4() {
  Table t(16, std::vector<std::uint32_t>(16));
  auto swap = [](std::uint32_t v) { return ((v & 1u) << 1) | ((v >> 1) & 1u); };
  for (std::uint32_t a = 0; a < 16; ++a) {
    for (std::uint32_t b = 0; b < 16; ++b) {
      std::uint32_t v1 = a % 4, k1 = a / 4, v2 = b % 4, k2 = b / 4;
      std::uint32_t w = (k1 % 2) ? swap(v2) : v2;
      t[a][b] = 4 * ((k1 + k2) % 4) + (v1 ^ w);
    }
  }
  const std::uint32_t gens[] = {1, 4};
  return to_dsl(regular_group(16, t, gens));
}

// The Pauli group {i^k X^x Z^z}; element (k, x, z) is 4*k + 2*x + z.
std::string pauli_group() {
  Table t(16, std::vector<std::uint32_t>(16));
  for (std::uint32_t a = 0; a < 16; ++a) {
    for (std::uint32_t b = 0; b < 16; ++b) {
      std::uint32_t k1 = a / 4, x1 = (a / 2) % 2, z1 = a % 2;
      std::uint32_t k2 = b / 4, x2 = (b / 2) % 2, z2 = b % 2;
      std::uint32_t k = (k1 + k2 + 2 * (z1 * x2)) % 4;
      t[a][b] = 4 * k + 2 * (x1 ^ x2) + (z1 ^ z2);
    }
  }
  const std::uint32_t gens[] = {4, 2, 1};
  return to_dsl(regular_group(16, t, gens));
}

}  // namespace

std::vector<CorpusGroup> builtin_corpus() {
  return {
      {"C1", "cyclic:1"},
      {"C2", "cyclic:2"},
      {"C3", "cyclic:3"},
      {"C4", "cyclic:4"},
      {"C2^2", "elem-abelian:2^2"},
      {"C5", "cyclic:5"},
      {"C6", "cyclic:6"},
      {"D3", "dihedral:3"},
      {"C7", "cyclic:7"},
      {"C8", "cyclic:8"},
      {"C4xC2", "product:cyclic:4xcyclic:2"},
      {"C2^3", "elem-abelian:2^3"},
      {"D4", "dihedral:4"},
      {"Q8", "quaternion:8"},
      {"C9", "cyclic:9"},
      {"C3^2", "elem-abelian:3^2"},
      {"C10", "cyclic:10"},
      {"D5", "dihedral:5"},
      {"C11", "cyclic:11"},
      {"C12", "cyclic:12"},
      {"C6xC2", "product:cyclic:6xcyclic:2"},
      {"D6", "dihedral:6"},
      {"A4", "alt:4"},
      {"Dic3", "dicyclic:12"},
      {"C13", "cyclic:13"},
      {"C14", "cyclic:14"},
      {"D7", "dihedral:7"},
      {"C15", "cyclic:15"},
      {"C16", "cyclic:16"},
      {"C8xC2", "product:cyclic:8xcyclic:2"},
      {"C4xC4", "product:cyclic:4xcyclic:4"},
      {"C4xC2^2", "product:cyclic:4xelem-abelian:2^2"},
      {"C2^4", "elem-abelian:2^4"},
      {"D8", "dihedral:8"},
      {"Q16", "quaternion:16"},
      {"SD16", "semidirect:8,2,3"},
      {"M16", "semidirect:8,2,5"},
      {"C4:C4", "semidirect:4,4,3"},
      {"C2^2:C4", swap_extension_of_c4()},
      {"D4xC2", "product:dihedral:4xcyclic:2"},
      {"Q8xC2", "product:quaternion:8xcyclic:2"},
      {"Pauli", pauli_group()},
      {"S3", "sym:3"},
      {"S4", "sym:4"},
      {"C2^2:C2", "perm:(0 1);(2 3);(0 2)(1 3)"},
  };
}

}  // namespace qstrat
