#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace qstrat {

/// Result of one unit of verification work.
struct CheckOutcome {
  std::size_t checks = 0;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) failures.push_back(what);
  }
};

struct SuiteResult {
  std::string module;
  std::string name;
  std::size_t checks = 0;
  std::vector<std::string> failures;
  double seconds = 0;

  bool ok() const { return failures.empty(); }
};

/// Names of the invariant suites, as "module/suite".
std::vector<std::string> verification_suites();

/// Runs the named suites (all when `names` is empty) over the built-in corpus.
/// Work is split into independent tasks run on `threads` workers.
/// Throws ParseError for an unknown suite name.
std::vector<SuiteResult> run_verification(const std::vector<std::string>& names, unsigned threads);

/// Worker count: QUILLEN_STRATA_THREADS when set to a positive integer,
/// otherwise the hardware concurrency.
unsigned default_thread_count();

/// Runs tasks on up to `threads` workers; results keep the task order.
std::vector<CheckOutcome> run_parallel(const std::vector<std::function<CheckOutcome()>>& tasks, unsigned threads);

}  // namespace qstrat
