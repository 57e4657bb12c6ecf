#include "ivl/perm_group.hpp"

#include <algorithm>

#include "ivl/config.hpp"

namespace ivl {

namespace {

std::vector<Permutation> clean_generators(std::size_t degree, std::vector<Permutation> gens) {
  if (degree == 0) throw DegreeMismatch("group degree must be positive");
  std::vector<Permutation> out;
  out.reserve(gens.size());
  for (auto& g : gens) {
    if (g.degree() != degree)
      throw DegreeMismatch("generator of degree " + std::to_string(g.degree()) + " in a group of degree " +
                           std::to_string(degree));
    if (g.is_identity()) continue;
    if (std::find(out.begin(), out.end(), g) != out.end()) continue;
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace

PermGroup::PermGroup() : impl_(std::make_shared<Impl>()) {}

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> gens) : impl_(std::make_shared<Impl>()) {
  impl_->degree = degree;
  impl_->gens = clean_generators(degree, std::move(gens));
}

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> gens, std::uint64_t known_order)
    : PermGroup(degree, std::move(gens)) {
  impl_->known_order = known_order;
}

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> gens, StabChain chain)
    : PermGroup(degree, std::move(gens)) {
  if (chain.degree() != degree) throw DegreeMismatch("chain degree mismatch");
  std::call_once(impl_->chain_once, [&] { impl_->chain = std::move(chain); });
}

std::size_t PermGroup::degree() const noexcept { return impl_->degree; }

const std::vector<Permutation>& PermGroup::generators() const noexcept { return impl_->gens; }

const StabChain& PermGroup::chain() const {
  std::call_once(impl_->chain_once, [this] {
    ChainBuilder builder(impl_->degree, impl_->known_order);
    for (const auto& g : impl_->gens) builder.add_generator(g);
    impl_->chain = builder.chain();
    if (impl_->known_order && impl_->chain.order() != *impl_->known_order)
      throw Error("stated group order " + std::to_string(*impl_->known_order) + " disagrees with computed " +
                  std::to_string(impl_->chain.order()));
  });
  return impl_->chain;
}

bool PermGroup::contains(const Permutation& g) const {
  if (g.degree() != impl_->degree) throw DegreeMismatch("membership: degree mismatch");
  return chain().contains(g);
}

bool PermGroup::is_subgroup_of(const PermGroup& other) const {
  if (degree() != other.degree()) throw DegreeMismatch("subgroup test: degree mismatch");
  if (other.order() % order() != 0) return false;
  for (const auto& g : generators())
    if (!other.contains(g)) return false;
  return true;
}

const SubgroupKey& PermGroup::key() const {
  std::call_once(impl_->key_once, [this] {
    const StabChain& c = chain();
    impl_->key = SubgroupKey{c.order(), hash_points(c.canonical_data(), c.order())};
  });
  return impl_->key;
}

PermGroup PermGroup::conjugate(const Permutation& g) const {
  std::vector<Permutation> gens;
  gens.reserve(generators().size());
  for (const auto& x : generators()) gens.push_back(conj_elem(x, g));
  return PermGroup(degree(), std::move(gens), order());
}

std::vector<std::size_t> PermGroup::orbit_lengths() const {
  const std::size_t n = degree();
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> lens;
  std::vector<Point> queue;
  for (std::size_t p = 0; p < n; ++p) {
    if (seen[p]) continue;
    queue.assign(1, static_cast<Point>(p));
    seen[p] = true;
    for (std::size_t k = 0; k < queue.size(); ++k)
      for (const auto& g : generators()) {
        const Point q = g[queue[k]];
        if (!seen[q]) {
          seen[q] = true;
          queue.push_back(q);
        }
      }
    lens.push_back(queue.size());
  }
  std::sort(lens.begin(), lens.end());
  return lens;
}

bool operator==(const PermGroup& a, const PermGroup& b) {
  if (a.impl_ == b.impl_) return true;
  if (a.degree() != b.degree() || a.order() != b.order()) return false;
  for (const auto& g : a.generators())
    if (!b.contains(g)) return false;
  return true;
}

PermGroup join(const PermGroup& a, const PermGroup& b) {
  if (a.degree() != b.degree()) throw DegreeMismatch("join: degree mismatch");
  std::vector<Permutation> gens = a.generators();
  for (const auto& g : b.generators())
    if (!a.contains(g)) gens.push_back(g);
  if (gens.size() == a.generators().size()) return a;
  return PermGroup(a.degree(), std::move(gens));
}

std::optional<std::size_t> SubgroupIndex::find(const PermGroup& g) const {
  auto it = by_key_.find(g.key());
  if (it == by_key_.end()) return std::nullopt;
  for (std::size_t idx : it->second)
    if (groups_[idx] == g) return idx;
  return std::nullopt;
}

std::pair<std::size_t, bool> SubgroupIndex::insert(const PermGroup& g) {
  auto& bucket = by_key_[g.key()];
  for (std::size_t idx : bucket)
    if (groups_[idx] == g) return {idx, false};
  bucket.push_back(groups_.size());
  groups_.push_back(g);
  return {groups_.size() - 1, true};
}

}  // namespace ivl
