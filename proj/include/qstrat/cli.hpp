#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qstrat/groups.hpp"

namespace qstrat {

struct CliConfig {
  std::string command;  ///< spectrum, strata, subgroups, weyl, double-cosets, coequalize, drinfeld-check, verify
  std::string group = "cyclic:1";
  std::string theory;
  std::optional<unsigned> prime_bound;   ///< overrides the theory's bound=
  std::optional<unsigned> degree_bound;  ///< overrides the theory's deg=
  std::string format;                    ///< json, dot or table; empty picks the command default
  std::string output;                    ///< file path; empty for standard output
  std::string mode = "strong";           ///< spectrum assembly: strong or weak
  std::string h, k;                      ///< subgroup selectors
  std::string weyl_kind = "all";
  std::string family;
  unsigned p = 0;
  std::string diagram;  ///< coequalize input path, "-" for standard input
  bool all = false;
  bool list = false;
  std::vector<std::string> suites;
};

/// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 1;
inline constexpr int kExitDomain = 2;
inline constexpr int kExitVerifyFailed = 3;

/// Resolves a subgroup selector against the class list:
///   <order>[.<i>]   the i-th class of that order (1-based, default 1)
///   gens:<cycles>   the class of the subgroup generated by perm:-style cycles
///   A<n>, S<n>      the alternating or symmetric group on points 0..n-1
///   otherwise       a class key (C2.1) or an unambiguous class name (C2xC2)
const SubgroupClass& select_subgroup(const PermGroup& G, std::span<const SubgroupClass> classes,
                                     std::string_view selector);

/// Runs one command. Documents go to `out` (or the configured file), errors to
/// `err` as JSON. Returns the process exit code.
int run(const CliConfig& config, std::istream& in, std::ostream& out, std::ostream& err);

/// Parses arguments (without the program name) and runs the command.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace qstrat
