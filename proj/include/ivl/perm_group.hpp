#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ivl/permutation.hpp"
#include "ivl/stab_chain.hpp"

namespace ivl {

/// Dedup key of a subgroup: its order and a hash of the canonical chain data.  Equal
/// groups always have equal keys; equal keys are confirmed by membership.
struct SubgroupKey {
  std::uint64_t order = 1;
  std::uint64_t hash = 0;
  friend bool operator==(const SubgroupKey&, const SubgroupKey&) = default;
  friend auto operator<=>(const SubgroupKey&, const SubgroupKey&) = default;
};

struct SubgroupKeyHash {
  std::size_t operator()(const SubgroupKey& k) const noexcept {
    return static_cast<std::size_t>(k.hash ^ (k.order * 0x9e3779b97f4a7c15ULL));
  }
};

/// Handle to an immutable permutation group.  Copies share the lazily built chain, key
/// and cached attributes; all of them are safe to read from several threads.
class PermGroup {
 public:
  PermGroup();  // trivial group of degree 1
  PermGroup(std::size_t degree, std::vector<Permutation> gens);
  /// `known_order` lets Schreier–Sims stop as soon as the chain reaches it.
  PermGroup(std::size_t degree, std::vector<Permutation> gens, std::uint64_t known_order);
  PermGroup(std::size_t degree, std::vector<Permutation> gens, StabChain chain);

  static PermGroup trivial(std::size_t degree) { return PermGroup(degree, {}); }

  std::size_t degree() const noexcept;
  const std::vector<Permutation>& generators() const noexcept;
  const StabChain& chain() const;
  std::uint64_t order() const { return chain().order(); }
  bool is_trivial() const { return order() == 1; }

  /// Throws DegreeMismatch for a permutation of another degree.
  bool contains(const Permutation& g) const;
  bool is_subgroup_of(const PermGroup& other) const;
  const SubgroupKey& key() const;

  /// H^g, generated by the conjugated generators.
  PermGroup conjugate(const Permutation& g) const;
  Permutation random_element(std::mt19937_64& rng) const { return chain().random_element(rng); }
  /// Orbit lengths on {0..degree-1}, sorted ascending.
  std::vector<std::size_t> orbit_lengths() const;

  /// Same order and each generator of one is a member of the other.
  friend bool operator==(const PermGroup& a, const PermGroup& b);

  /// Per-handle cache of derived data (class tables and the like).  Two threads racing
  /// on the same name both build; the first stored value wins.
  template <class T, class Make>
  std::shared_ptr<const T> attribute(const std::string& name, Make&& make) const {
    {
      std::lock_guard lock(impl_->attr_mutex);
      if (auto it = impl_->attributes.find(name); it != impl_->attributes.end())
        return std::static_pointer_cast<const T>(it->second);
    }
    std::shared_ptr<const T> value = std::make_shared<const T>(make());
    std::lock_guard lock(impl_->attr_mutex);
    auto [it, inserted] = impl_->attributes.emplace(name, value);
    return std::static_pointer_cast<const T>(it->second);
  }

 private:
  struct Impl {
    std::size_t degree = 1;
    std::vector<Permutation> gens;
    std::optional<std::uint64_t> known_order;
    std::once_flag chain_once;
    StabChain chain;
    std::once_flag key_once;
    SubgroupKey key;
    std::mutex attr_mutex;
    std::unordered_map<std::string, std::shared_ptr<const void>> attributes;
  };
  std::shared_ptr<Impl> impl_;
};

/// Join: the group generated by both generator lists.
PermGroup join(const PermGroup& a, const PermGroup& b);

/// Insertion-ordered set of subgroups deduplicated by key with a membership cross-check.
class SubgroupIndex {
 public:
  std::optional<std::size_t> find(const PermGroup& g) const;
  /// (index, inserted)
  std::pair<std::size_t, bool> insert(const PermGroup& g);
  std::size_t size() const noexcept { return groups_.size(); }
  const PermGroup& operator[](std::size_t i) const { return groups_[i]; }
  const std::vector<PermGroup>& groups() const noexcept { return groups_; }

 private:
  std::vector<PermGroup> groups_;
  std::unordered_map<SubgroupKey, std::vector<std::size_t>, SubgroupKeyHash> by_key_;
};

}  // namespace ivl
