#pragma once

#include <cstddef>
#include <memory>
#include <utility>
#include <vector>

#include "ivl/config.hpp"
#include "ivl/conjugacy.hpp"
#include "ivl/orbits.hpp"
#include "ivl/perm_group.hpp"

namespace ivl {

enum class Toggle { automatic, on, off };

struct SearchOptions {
  Caps caps;
  /// Small-C route: enumerate C-conjugates of x up to D-conjugacy instead of D-classes of
  /// the target classes.
  Toggle fallback = Toggle::automatic;
};

/// Shared state of one Search run: B = <gens> is conjugated into the target A, with the
/// class lists taken up to conjugation by the envelope L (A normal in L).
struct SearchContext {
  PermGroup target;    // A
  PermGroup envelope;  // L
  PermGroup ambient;   // G
  PermGroup sub;       // B
  std::vector<Permutation> gens;
  std::shared_ptr<const ConjClassTable> table;      // L-classes of A
  std::vector<std::vector<std::size_t>> class_lists;  // per generator: classes meeting its G-class
  std::vector<std::shared_ptr<ElementOrbit>> ambient_orbits;  // G-class of each generator
  std::vector<std::pair<PermGroup, Permutation>> results;
  SearchOptions options;
  std::size_t main_steps = 0;
  std::size_t fallback_steps = 0;
};

struct SearchFrame {
  PermGroup centralizer_sub;  // C
  std::size_t level = 0;      // 0-based index of the next generator
  Permutation conjugator;     // g
};

/// Builds the context for conjugating B into A inside G: envelope, class table, generator
/// choice and class lists.
SearchContext make_search_context(const PermGroup& g, const PermGroup& a, const PermGroup& l, const PermGroup& b,
                                  const SearchOptions& options);

/// Appends every solution extending `frame` to ctx.results, up to conjugation by the
/// envelope.
void search(SearchContext& ctx, const SearchFrame& frame);

/// Conjugators c in C with x^c in A, one for each D-orbit of such conjugates.
std::vector<Permutation> search_smallC_fallback(const SearchContext& ctx, const SearchFrame& frame,
                                                ElementOrbit& orbit, const PermGroup& d);

/// Every G-conjugate A^h strictly containing B, each with its conjugator h.
std::vector<std::pair<PermGroup, Permutation>> embedding_conjugates(const PermGroup& g, const PermGroup& a,
                                                                    const PermGroup& b,
                                                                    const SearchOptions& options = {});

/// Whether U's orbit lengths can be grouped into sums giving exactly W's orbit lengths.
bool orbit_lengths_refine(const std::vector<std::size_t>& u_lengths, const std::vector<std::size_t>& w_lengths);

}  // namespace ivl
