#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <vector>

#include "ivl/config.hpp"
#include "ivl/lattice_interval.hpp"
#include "ivl/perm_group.hpp"

namespace ivl {

struct SubgroupClass {
  PermGroup representative;
  PermGroup normalizer;
  std::uint64_t orbit_size = 1;
  bool maximal = false;  // maximal in the whole group
};

/// Every subgroup of a small group, by conjugacy class and as an explicit list of all
/// conjugates.  Built by extending class representatives by cyclic subgroups of prime
/// power order, which generate every subgroup.
class SubgroupLattice {
 public:
  SubgroupLattice(PermGroup group, const Caps& caps);

  const PermGroup& group() const noexcept { return group_; }
  const std::vector<SubgroupClass>& classes() const noexcept { return classes_; }
  /// Every subgroup (all conjugates of all classes).
  const SubgroupIndex& subgroups() const noexcept { return all_; }
  std::size_t class_of(std::size_t subgroup_index) const { return class_of_[subgroup_index]; }
  std::uint64_t total() const noexcept { return all_.size(); }
  /// Pairs (i, j): some conjugate of class i is maximal in the representative of class j.
  const std::vector<std::pair<std::size_t, std::size_t>>& maximal_under() const;

 private:
  std::size_t add_class(const PermGroup& rep, const Caps& caps);

  PermGroup group_;
  std::vector<SubgroupClass> classes_;
  SubgroupIndex all_;
  std::vector<std::size_t> class_of_;
  std::unique_ptr<std::once_flag> maximal_once_ = std::make_unique<std::once_flag>();
  mutable std::vector<std::pair<std::size_t, std::size_t>> maximal_under_;
};

std::shared_ptr<const SubgroupLattice> all_subgroups(const PermGroup& g, const Caps& caps = {});

enum class MaximalSource { oracle, datafile };

struct MaximalClasses {
  PermGroup parent;
  std::vector<PermGroup> reps;
  MaximalSource source = MaximalSource::oracle;
};

/// One representative per conjugacy class of maximal subgroups, from the full lattice.
MaximalClasses maximal_subgroups_oracle(const PermGroup& t, const Caps& caps = {});

/// Every V with U < V < G together with the maximality edges, by filtering the full lattice.
LatticeInterval intermediate_oracle(const PermGroup& g, const PermGroup& u, const Caps& caps = {});

}  // namespace ivl
