#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "ivl/perm_group.hpp"
#include "ivl/perm_store.hpp"
#include "ivl/permutation.hpp"

namespace ivl {

/// Breadth-first spanning tree of an orbit: node 0 is the root, every other node records
/// its parent and the generator that maps the parent onto it.
class SchreierTree {
 public:
  void add_root();
  void add(std::size_t parent, std::size_t generator);
  std::size_t size() const noexcept { return parent_.size(); }
  /// Element t with root^t == node, as a product of generators.
  Permutation word(std::size_t node, std::span<const Permutation> gens, std::size_t degree) const;

 private:
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> via_;
};

/// Stabilizer of the root of an orbit of `group` under an action by its generators.
/// `transversal(k)` maps the root to node k and `image(k, s)` is the node k moved by
/// generator s.  Schreier generators are sifted in a fixed order until the order
/// |group| / |orbit| is reached.
PermGroup stabilizer_from_orbit(const PermGroup& group, std::size_t orbit_size,
                                const std::function<Permutation(std::size_t)>& transversal,
                                const std::function<std::size_t(std::size_t, std::size_t)>& image);

/// Orbit of a point with transversal words.
struct PointOrbit {
  std::vector<Point> points;
  std::vector<std::int32_t> position;  // point -> index or -1
  SchreierTree tree;
};
PointOrbit point_orbit(const PermGroup& group, Point p);

/// Orbit of a permutation under conjugation by a group, expanded lazily so that
/// conjugacy tests stop at the first hit.
class ElementOrbit {
 public:
  ElementOrbit(PermGroup group, const Permutation& x, std::size_t cap);
  /// Index of y in the orbit, expanding as far as necessary.
  std::optional<std::size_t> locate(const Permutation& y);
  void expand_all();
  std::size_t size() const noexcept { return store_.size(); }
  bool complete() const noexcept { return head_ == store_.size(); }
  Permutation element(std::size_t i) const { return store_.at(i); }
  /// t with x^t == element(i).
  Permutation transversal(std::size_t i) const;
  /// Stabilizer of x (requires and forces a complete orbit).
  PermGroup stabilizer();
  const PermGroup& group() const noexcept { return group_; }

 private:
  bool step();  // processes one node; false when complete

  PermGroup group_;
  std::size_t cap_;
  PermStore store_;
  SchreierTree tree_;
  std::vector<std::uint32_t> images_;  // node * ngens + s -> node, filled as processed
  std::size_t head_ = 0;
};

/// Orbit of a subgroup under conjugation, stored by dedup key with membership
/// cross-checks on key hits.
class SubgroupOrbit {
 public:
  SubgroupOrbit(PermGroup acting, PermGroup subgroup, std::size_t cap);
  std::optional<std::size_t> locate(const PermGroup& k);
  void expand_all();
  std::size_t size() const noexcept { return keys_.size(); }
  /// t with subgroup^t == member(i).
  Permutation transversal(std::size_t i) const;
  PermGroup member(std::size_t i) const;
  const SubgroupKey& key(std::size_t i) const { return keys_[i]; }
  PermGroup stabilizer();

 private:
  bool step();
  std::optional<std::size_t> find(const PermGroup& k) const;
  std::size_t add(const PermGroup& k, std::size_t parent, std::size_t gen);

  PermGroup acting_;
  PermGroup subgroup_;
  std::size_t cap_;
  std::vector<SubgroupKey> keys_;
  std::unordered_map<SubgroupKey, std::vector<std::uint32_t>, SubgroupKeyHash> by_key_;
  PermStore transversals_;
  std::vector<std::uint32_t> images_;
  std::size_t head_ = 0;
};

/// Orbit of the coset sub*1 under right multiplication by `acting`, each coset stored by
/// its lexicographically least representative.
class CosetOrbit {
 public:
  CosetOrbit(PermGroup acting, PermGroup sub, std::size_t cap);
  std::size_t size() const noexcept { return reps_.size(); }
  /// Index of the coset sub*g, if it lies in the orbit.
  std::optional<std::size_t> locate(const Permutation& g) const;
  /// Lexicographically least element of coset i (an element of sub * acting).
  Permutation rep(std::size_t i) const { return reps_.at(i); }
  /// Word in the acting generators mapping the root coset onto coset i.
  Permutation transversal(std::size_t i) const;
  std::size_t image(std::size_t node, std::size_t gen) const { return images_[node * ngens_ + gen]; }
  PermGroup stabilizer();

 private:
  PermGroup acting_;
  PermGroup sub_;
  PermStore reps_;
  SchreierTree tree_;
  std::vector<std::uint32_t> images_;
  std::size_t ngens_;
};

}  // namespace ivl
