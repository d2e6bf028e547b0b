#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "qstrat/groups.hpp"
#include "qstrat/strata.hpp"

namespace qstrat {

enum class EdgeKind { internal, cross_stratum, external };
std::string to_string(EdgeKind kind);
EdgeKind parse_edge_kind(std::string_view text);

struct SpacePoint {
  std::size_t id = 0;
  std::string stratum;  ///< subgroup class key
  std::string label;
  bool closed = false;

  friend bool operator==(const SpacePoint&, const SpacePoint&) = default;
};

/// Specialization from `from` (generic) to `to` (in the closure of `from`).
struct SpaceEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  EdgeKind kind = EdgeKind::internal;
  std::string provenance;

  friend auto operator<=>(const SpaceEdge&, const SpaceEdge&) = default;
  friend bool operator==(const SpaceEdge&, const SpaceEdge&) = default;
};

struct SpaceMeta {
  std::string group;
  std::string theory;
  std::string family;
  std::string mode;  ///< "strong" or "weak"
  unsigned prime_bound = 0;
  unsigned degree_bound = 0;
  bool truncated = false;
  /// False when cross-stratum specializations were not computed.
  bool cross_edges = true;

  friend bool operator==(const SpaceMeta&, const SpaceMeta&) = default;
};

struct StratifiedSpace {
  SpaceMeta meta;
  std::vector<SpacePoint> points;  ///< ids are 0..n-1 in order
  std::vector<SpaceEdge> edges;    ///< sorted

  friend bool operator==(const StratifiedSpace&, const StratifiedSpace&) = default;
};

/// Disjoint union over family classes of Weyl-orbit quotients of strata.
/// `group_label` is recorded in the metadata (normally the group DSL).
StratifiedSpace assemble_strong(const TheorySpec& theory, const PermGroup& G, const std::string& group_label);

/// Colimit of the full spectra over the Quillen orbit category.
/// Throws UnsupportedError for theories without transition maps.
StratifiedSpace assemble_weak(const TheorySpec& theory, const PermGroup& G, const std::string& group_label);

struct SpaceIsoReport {
  bool isomorphic = false;
  std::string obstruction;
  std::vector<std::size_t> mapping;  ///< point of the first space -> point of the second
};

/// Searches for a bijection preserving stratum, label, closedness and edges
/// with their kinds. Cross-stratum edges are compared only when both spaces
/// computed them.
SpaceIsoReport check_agreement(const StratifiedSpace& a, const StratifiedSpace& b);
SpaceIsoReport check_agreement(const TheorySpec& theory, const PermGroup& G, const std::string& group_label);

/// Structural checks: unique ids, edge endpoints in range, acyclic edges.
/// Returns an empty string when the space is well formed.
std::string validate(const StratifiedSpace& s);

std::string to_json(const StratifiedSpace& s);
std::string to_dot(const StratifiedSpace& s);
/// Throws ParseError on malformed documents.
StratifiedSpace from_json(std::string_view text);

}  // namespace qstrat
