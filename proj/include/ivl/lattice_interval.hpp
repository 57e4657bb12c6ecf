#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ivl/perm_group.hpp"

namespace ivl {

using Edge = std::pair<std::size_t, std::size_t>;

/// Subgroups strictly between a bottom U and a top G plus maximality edges.  Index 0 is
/// U, indices 1..N the proper intermediates sorted by (order, key), and N+1 is G.
struct LatticeInterval {
  PermGroup bottom;
  PermGroup top;
  std::vector<PermGroup> subgroups;
  std::vector<Edge> inclusions;  // (i, j): i maximal in j, sorted

  std::size_t top_index() const noexcept { return subgroups.size() + 1; }
  const PermGroup& at(std::size_t i) const;
};

/// Sorts and deduplicates `subs` and fills in the edges by a containment sweep.  When
/// bottom == top the result is empty with no edges.
LatticeInterval make_interval(const PermGroup& bottom, const PermGroup& top, std::vector<PermGroup> subs);

/// Sorts and deduplicates `subs` by (order, key).
void sort_subgroups(std::vector<PermGroup>& subs);

/// Maximality edges among {bottom} ∪ subs ∪ {top} (subs already sorted).
std::vector<Edge> containment_edges(const PermGroup& bottom, const PermGroup& top, const std::vector<PermGroup>& subs);

/// Index of `g` in the interval, if present.
std::optional<std::size_t> index_of(const LatticeInterval& interval, const PermGroup& g);

/// Empty when both intervals have the same subgroups and edges, otherwise a short
/// description of the first difference.
std::optional<std::string> compare_intervals(const LatticeInterval& a, const LatticeInterval& b);

/// Empty when every listed subgroup lies strictly between bottom and top and every edge is
/// a maximal inclusion within the listed set, otherwise the first violation.
std::optional<std::string> check_interval(const LatticeInterval& interval);

}  // namespace ivl
