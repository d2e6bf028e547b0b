#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "qstrat/error.hpp"
#include "qstrat/groups.hpp"

namespace qstrat {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x]) throw DomainError("permutation images are not a bijection");
    seen[x] = true;
  }
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<Point>>& cycles) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      Point x = cycle[i];
      if (x >= degree) throw DomainError("cycle point exceeds degree");
      if (used[x]) throw DomainError("cycles are not disjoint");
      used[x] = true;
      images[x] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<Point> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<Point>(i);
  Permutation out;
  out.images_ = std::move(inv);
  return out;
}

Permutation Permutation::extended(std::size_t degree) const {
  if (degree < images_.size()) throw DomainError("cannot shrink a permutation");
  Permutation out(degree);
  std::copy(images_.begin(), images_.end(), out.images_.begin());
  return out;
}

std::string Permutation::cycle_string() const {
  std::ostringstream os;
  std::vector<bool> seen(images_.size(), false);
  bool any = false;
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    any = true;
    os << '(';
    std::size_t x = start;
    bool first = true;
    while (!seen[x]) {
      seen[x] = true;
      if (!first) os << ' ';
      os << x;
      first = false;
      x = images_[x];
    }
    os << ')';
  }
  if (!any) return "()";
  return os.str();
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  std::size_t n = std::max(a.degree(), b.degree());
  Permutation out;
  out.images_.resize(n);
  for (std::size_t x = 0; x < n; ++x) {
    Point bx = x < b.degree() ? b.images_[x] : static_cast<Point>(x);
    out.images_[x] = bx < a.degree() ? a.images_[bx] : bx;
  }
  return out;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace qstrat
