#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "ivl/permutation.hpp"

namespace ivl {

/// One level of a stabilizer chain: the orbit of `base` under the stabilizer of all
/// earlier base points, with explicit transversal elements.
struct StabLevel {
  Point base = 0;
  std::vector<Point> orbit;              // orbit[0] == base
  std::vector<std::int32_t> position;    // point -> orbit index, -1 when absent
  std::vector<Permutation> transversal;  // base^transversal[k] == orbit[k]
  std::vector<Permutation> inverse_transversal;
  std::vector<Permutation> generators;   // strong generators fixing earlier base points
};

/// Base and strong generating set.  The base is the canonical one: at every level the
/// smallest point moved by the current stabilizer, so the chain depends only on the group.
class StabChain {
 public:
  StabChain() = default;
  StabChain(std::size_t degree, std::vector<StabLevel> levels);

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<StabLevel>& levels() const noexcept { return levels_; }
  std::vector<Point> base() const;
  std::uint64_t order() const noexcept { return order_; }

  /// Residue after stripping through levels [from, end); second is the level where
  /// sifting stopped, levels().size() when it ran through.
  std::pair<Permutation, std::size_t> sift(Permutation g, std::size_t from = 0) const;
  bool contains(const Permutation& g) const;

  /// Uniform random element: product of uniformly chosen transversal elements.
  Permutation random_element(std::mt19937_64& rng) const;
  /// The element with mixed-radix index `index` < order().
  Permutation element(std::uint64_t index) const;

  /// Lexicographically least element of the right coset U*g (U = this group).
  Permutation min_coset_rep(const Permutation& g) const;
  /// Data determining the group uniquely: the lexicographically least transversal
  /// elements at every level, written out in full.
  std::vector<Point> canonical_data() const;

 private:
  std::size_t degree_ = 0;
  std::vector<StabLevel> levels_;
  std::uint64_t order_ = 1;
};

/// Incremental deterministic Schreier–Sims over the full ascending base 0..n-1.
class ChainBuilder {
 public:
  explicit ChainBuilder(std::size_t degree, std::optional<std::uint64_t> target_order = std::nullopt);

  /// Adds g unless it is already a member.  Returns whether the group grew.
  bool add_generator(const Permutation& g);
  bool contains(const Permutation& g) const;
  std::uint64_t order() const noexcept { return order_; }
  const std::vector<Permutation>& generators() const noexcept { return gens_; }
  /// Compressed chain (trivial levels dropped).
  StabChain chain() const;

 private:
  struct Level : StabLevel {
    std::vector<std::size_t> done;  // generators checked per orbit point
  };

  std::size_t sift_level(Permutation& h, std::size_t from) const;
  void add_strong(const Permutation& r, std::size_t from, std::size_t to);
  void extend_orbit(Level& level, std::size_t first_new_gen);
  void complete(std::size_t start);
  void recompute_order();
  bool target_reached() const noexcept { return target_ && order_ == *target_; }

  std::size_t degree_;
  std::optional<std::uint64_t> target_;
  std::vector<Level> levels_;
  std::vector<Permutation> gens_;
  std::uint64_t order_ = 1;
};

/// Checked 64-bit product; throws CapExceeded on overflow.
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);

}  // namespace ivl
