#pragma once

#include "ivl/config.hpp"
#include "ivl/lattice_interval.hpp"

namespace ivl {

/// Intermediate subgroups from the block systems of G acting on the cosets of U.
LatticeInterval intermediate_by_blocks(const PermGroup& g, const PermGroup& u, const Caps& caps = {});

}  // namespace ivl
