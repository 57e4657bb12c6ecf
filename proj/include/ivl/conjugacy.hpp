#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "ivl/config.hpp"
#include "ivl/perm_group.hpp"
#include "ivl/perm_store.hpp"

namespace ivl {

struct ConjClass {
  Permutation representative;
  PermGroup centralizer;  // in the acting group
  std::uint64_t size = 1;
};

/// Classes of the elements of a group A under conjugation by a group L normalizing A
/// (L == A for ordinary conjugacy classes).  Every element of A is stored, so lookups
/// of the class of an element and of a conjugator from the representative are direct.
class ConjClassTable {
 public:
  ConjClassTable(PermGroup group, PermGroup acting, std::size_t cap);

  const PermGroup& group() const noexcept { return group_; }
  const PermGroup& acting() const noexcept { return acting_; }
  const std::vector<ConjClass>& classes() const noexcept { return classes_; }
  /// Throws NotMember for an element outside the group.
  std::size_t class_of(const Permutation& x) const;
  /// t in the acting group with representative^t == x.
  Permutation conjugator_to(const Permutation& x) const;

 private:
  PermGroup group_;
  PermGroup acting_;
  PermStore elements_;
  std::vector<std::uint32_t> class_id_;
  std::vector<std::uint32_t> parent_;  // conjugation tree inside each class
  std::vector<std::uint16_t> via_;
  std::vector<ConjClass> classes_;
};

std::shared_ptr<const ConjClassTable> conjugacy_classes(const PermGroup& g, const Caps& caps = {});
/// L-classes of A; requires A normal in the group generated by A and L.
std::shared_ptr<const ConjClassTable> classes_under(const PermGroup& a, const PermGroup& l, const Caps& caps = {});

/// Throws NotMember unless x lies in g.
PermGroup centralizer(const PermGroup& g, const Permutation& x, const Caps& caps = {});
PermGroup centralizer_chain(const PermGroup& g, const std::vector<Permutation>& xs, const Caps& caps = {});
/// Centralizer in c of an arbitrary permutation of the same degree.
PermGroup centralizer_of(const PermGroup& c, const Permutation& x, const Caps& caps = {});

/// d in g with x^d == y; throws NotMember unless x and y lie in g.
std::optional<Permutation> is_conjugate(const PermGroup& g, const Permutation& x, const Permutation& y,
                                        const Caps& caps = {});
/// Same search without membership requirements on x and y.
std::optional<Permutation> conjugating_element(const PermGroup& c, const Permutation& x, const Permutation& y,
                                               const Caps& caps = {});

/// Throws NotSubgroup unless h <= g.
PermGroup normalizer(const PermGroup& g, const PermGroup& h, const Caps& caps = {});
/// N_g(<x>), from the orbit of <x> with each conjugate stored as its least generator.
PermGroup cyclic_normalizer(const PermGroup& g, const Permutation& x, std::size_t cap);
/// x such that <x> is the subgroup generated by all elements of h of order |x|, which is
/// then characteristic in h; the largest such order wins.  Enumerates h.
std::optional<Permutation> characteristic_cyclic(const PermGroup& h);
/// t in g with h^t == k; throws NotSubgroup unless both lie in g.
std::optional<Permutation> is_subgroup_conjugate(const PermGroup& g, const PermGroup& h, const PermGroup& k,
                                                 const Caps& caps = {});
/// Intersection of two subgroups of a common parent.
PermGroup intersection(const PermGroup& a, const PermGroup& b, const Caps& caps = {});

}  // namespace ivl
