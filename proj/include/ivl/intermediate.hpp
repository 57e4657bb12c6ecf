#pragma once

#include <cstddef>
#include <optional>

#include "ivl/config.hpp"
#include "ivl/embedding.hpp"
#include "ivl/lattice_interval.hpp"
#include "ivl/maximal_data.hpp"
#include "ivl/subgroup_lattice.hpp"

namespace ivl {

struct IntervalOptions {
  Caps caps;
  /// Drop maximal classes whose orbit lengths cannot be split into those of U.
  bool orbit_filter = true;
  Toggle fallback = Toggle::automatic;
  /// Consulted before the oracle when set.
  const MaximalData* maximal_data = nullptr;
  bool use_oracle = true;
};

struct IntervalStats {
  std::size_t processed = 0;
  std::size_t prime_index = 0;
  std::size_t embedding_calls = 0;
  std::size_t cache_hits = 0;
  std::size_t cache_transfers = 0;
  std::size_t datafile_lookups = 0;
  std::size_t oracle_lookups = 0;
};

/// Maximal classes of t from the data file or the oracle.  Throws MaximalUnavailable when
/// neither applies.
MaximalClasses maximal_classes(const PermGroup& t, const IntervalOptions& opts);

/// Keeps the classes whose orbit lengths can be split into the orbit lengths of u.
MaximalClasses orbit_length_filter(const MaximalClasses& reps, const PermGroup& u);

/// Every V with U < V < G and the maximality edges among [U, G].
LatticeInterval intermediate_subgroups(const PermGroup& g, const PermGroup& u, const IntervalOptions& opts = {},
                                       IntervalStats* stats = nullptr);

/// Some V with U < V < G, or nothing when U is maximal in G.
std::optional<PermGroup> first_intermediate(const PermGroup& g, const PermGroup& u, const IntervalOptions& opts = {});

}  // namespace ivl
