#pragma once

#include <cstdint>
#include <vector>

#include "ivl/config.hpp"
#include "ivl/perm_group.hpp"

namespace ivl {

struct DoubleCoset {
  Permutation representative;
  std::uint64_t size = 0;
};

struct DoubleCosetDecomp {
  PermGroup left;     // D
  PermGroup right;    // B
  PermGroup ambient;  // G
  std::vector<DoubleCoset> reps;
};

/// D\G/B as orbits of B on the right cosets of D.  The representative of each double
/// coset is the transversal element of its least coset index.
DoubleCosetDecomp double_cosets(const PermGroup& d, const PermGroup& g, const PermGroup& b, const Caps& caps = {});

/// Inverted representatives, which represent B\G/D.
std::vector<Permutation> inverse_reps(const DoubleCosetDecomp& dc);

}  // namespace ivl
