#include <algorithm>
#include <unordered_map>

#include "qstrat/error.hpp"
#include "qstrat/groups.hpp"

namespace qstrat {

namespace {

// Groups up to this order carry a full multiplication table.
constexpr std::size_t kTableLimit = 1024;

}  // namespace

struct PermGroup::Impl {
  std::size_t degree = 0;
  std::vector<Permutation> generators;
  std::vector<Permutation> elements;
  std::unordered_map<Permutation, ElemId, PermutationHash> index;
  std::vector<ElemId> table;
  std::vector<ElemId> inverse;
};

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators) {
  auto impl = std::make_shared<Impl>();
  impl->degree = degree;
  for (auto& g : generators) {
    if (g.degree() > degree) throw DomainError("generator degree exceeds group degree");
    if (g.degree() < degree) g = g.extended(degree);
  }
  impl->generators = std::move(generators);

  // Breadth-first closure under right multiplication by generators.
  std::unordered_map<Permutation, ElemId, PermutationHash> seen;
  std::vector<Permutation> found{Permutation(degree)};
  seen.emplace(found.front(), 0);
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (const auto& g : impl->generators) {
      Permutation next = found[i] * g;
      if (seen.contains(next)) continue;
      if (found.size() >= kMaxOrder)
        throw BoundError("group order exceeds " + std::to_string(kMaxOrder));
      seen.emplace(next, static_cast<ElemId>(found.size()));
      found.push_back(std::move(next));
    }
  }
  std::sort(found.begin(), found.end());
  impl->elements = std::move(found);
  for (std::size_t i = 0; i < impl->elements.size(); ++i)
    impl->index.emplace(impl->elements[i], static_cast<ElemId>(i));

  const std::size_t n = impl->elements.size();
  impl->inverse.resize(n);
  for (std::size_t i = 0; i < n; ++i) impl->inverse[i] = impl->index.at(impl->elements[i].inverse());
  if (n <= kTableLimit) {
    impl->table.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        impl->table[a * n + b] = impl->index.at(impl->elements[a] * impl->elements[b]);
  }
  impl_ = std::move(impl);
}

std::size_t PermGroup::degree() const { return impl_->degree; }
std::size_t PermGroup::order() const { return impl_->elements.size(); }
std::span<const Permutation> PermGroup::generators() const { return impl_->generators; }
std::span<const Permutation> PermGroup::elements() const { return impl_->elements; }
const Permutation& PermGroup::element(ElemId id) const { return impl_->elements.at(id); }

std::optional<ElemId> PermGroup::find(const Permutation& p) const {
  const Permutation* probe = &p;
  Permutation padded;
  if (p.degree() < impl_->degree) {
    padded = p.extended(impl_->degree);
    probe = &padded;
  }
  auto it = impl_->index.find(*probe);
  if (it == impl_->index.end()) return std::nullopt;
  return it->second;
}

ElemId PermGroup::mul(ElemId a, ElemId b) const {
  if (!impl_->table.empty()) return impl_->table[a * impl_->elements.size() + b];
  return impl_->index.at(impl_->elements[a] * impl_->elements[b]);
}

ElemId PermGroup::inv(ElemId a) const { return impl_->inverse[a]; }

ElemId PermGroup::pow(ElemId a, long long k) const {
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  ElemId result = identity();
  ElemId base = a;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

std::size_t PermGroup::element_order(ElemId a) const {
  std::size_t n = 1;
  for (ElemId x = a; x != identity(); x = mul(x, a)) ++n;
  return n;
}

}  // namespace qstrat
