#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "ivl/config.hpp"
#include "ivl/orbits.hpp"
#include "ivl/perm_group.hpp"

namespace ivl {

/// Points of the orbit of `point` (breadth-first order).  Throws Error when point >= degree.
std::vector<Point> orbit(const PermGroup& group, Point point);

/// Action of G on the right cosets of U, coset 0 being U itself.
class CosetAction {
 public:
  CosetAction(PermGroup parent, PermGroup point_subgroup, std::size_t cap = Caps{}.coset_index);

  const PermGroup& parent() const noexcept { return parent_; }
  const PermGroup& point_subgroup() const noexcept { return sub_; }
  std::size_t degree() const noexcept { return orbit_->size(); }
  /// g_i with U * g_i == coset i.
  Permutation transversal(std::size_t i) const { return orbit_->transversal(i); }
  /// Action of each generator of the parent (in generator order) on coset indices.
  const std::vector<Permutation>& images() const noexcept { return images_; }
  /// Coset index of U*g for g in the parent.
  std::size_t coset_of(const Permutation& g) const;
  /// Induced permutation of an arbitrary element of the parent.
  Permutation image_of(const Permutation& g) const;

 private:
  PermGroup parent_;
  PermGroup sub_;
  std::shared_ptr<CosetOrbit> orbit_;
  std::vector<Permutation> images_;
};

struct BlockSystem {
  std::size_t action_degree = 0;
  /// Block ids numbered by first appearance, so equal partitions compare equal.
  std::vector<std::size_t> block_of;
  std::size_t num_blocks = 0;

  std::size_t block_size() const noexcept { return action_degree / num_blocks; }
  friend bool operator==(const BlockSystem&, const BlockSystem&) = default;
};

/// Finest invariant partition with 0 and `seed` in one block.
BlockSystem minimal_block(const CosetAction& action, std::size_t seed);

/// Every invariant partition other than the singleton and one-block systems, sorted by
/// decreasing number of blocks and then by labeling.
std::vector<BlockSystem> all_block_systems(const CosetAction& action);

/// The subgroup between U and G that stabilizes the block containing coset 0.
PermGroup subgroup_from_block(const CosetAction& action, const BlockSystem& sys);

/// Coarsest common coarsening of two partitions of the same set.
BlockSystem join_partitions(const BlockSystem& a, const BlockSystem& b);

}  // namespace ivl
