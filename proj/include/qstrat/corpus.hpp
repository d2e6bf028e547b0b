#pragma once

#include <string>
#include <vector>

namespace qstrat {

struct CorpusGroup {
  std::string name;
  std::string dsl;
};

/// One representative of every isomorphism type of order <= 16, followed by
/// the named examples S3, S4, D4, D6, Q8 and the swap semidirect product
/// (Z/2)^2 x| Z/2 in their natural permutation representations.
std::vector<CorpusGroup> builtin_corpus();

}  // namespace qstrat
