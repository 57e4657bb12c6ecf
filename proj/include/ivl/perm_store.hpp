#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ivl/permutation.hpp"

namespace ivl {

/// Hashed, insertion-ordered set of permutations of one degree, packed at 1, 2 or 4 bytes
/// per point depending on the degree.
class PermStore {
 public:
  explicit PermStore(std::size_t degree);

  std::size_t degree() const noexcept { return degree_; }
  std::size_t size() const noexcept { return hashes_.size(); }

  /// Returns (index, true) when newly inserted, (existing index, false) otherwise.
  std::pair<std::size_t, bool> insert(std::span<const Point> images);
  std::pair<std::size_t, bool> insert(const Permutation& p) { return insert(p.images()); }
  std::optional<std::size_t> find(std::span<const Point> images) const;
  std::optional<std::size_t> find(const Permutation& p) const { return find(p.images()); }

  Permutation at(std::size_t index) const;
  void load(std::size_t index, std::span<Point> out) const;

 private:
  bool equal_at(std::size_t index, std::span<const Point> images) const;
  void grow();

  std::size_t degree_;
  std::size_t width_;
  std::vector<std::uint8_t> data_;
  std::vector<std::uint64_t> hashes_;
  std::vector<std::uint32_t> slots_;  // index + 1, 0 = empty
};

}  // namespace ivl
