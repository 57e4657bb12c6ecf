#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ivl {

using Point = std::uint32_t;

/// A bijection of {0, ..., degree-1}.  Products act on the right: p^(ab) = (p^a)^b.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::size_t degree);
  /// Throws ParseError unless `images` is a bijection.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree) { return Permutation(degree); }
  /// Caller guarantees `images` is a bijection.
  static Permutation unchecked(std::vector<Point> images) {
    Permutation p;
    p.images_ = std::move(images);
    return p;
  }

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](Point p) const noexcept { return images_[p]; }
  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;
  Permutation pow(std::int64_t e) const;
  std::uint64_t order() const;
  /// Cycle lengths (fixed points included), sorted ascending.
  std::vector<std::size_t> cycle_type() const;
  /// Smallest moved point, or degree() for the identity.
  Point smallest_moved_point() const noexcept;

  /// Canonical disjoint-cycle text with 1-based points, "()" for the identity.
  std::string to_cycles() const;
  std::uint64_t hash() const noexcept;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  friend void mul_into(const Permutation&, const Permutation&, Permutation&);
  std::vector<Point> images_;
};

/// a then b.
Permutation compose(const Permutation& a, const Permutation& b);
inline Permutation operator*(const Permutation& a, const Permutation& b) { return compose(a, b); }
/// out = a * b, reusing out's storage.  out must not alias a or b.
void mul_into(const Permutation& a, const Permutation& b, Permutation& out);
/// x^g = g^-1 x g.
Permutation conj_elem(const Permutation& x, const Permutation& g);

/// Lexicographically least generator of the cyclic group generated by x.
Permutation least_cyclic_generator(const Permutation& x);

/// Parses "(1,2,3)(4,5)" style text; "()" is the identity.
Permutation parse_permutation(std::string_view text, std::size_t degree);

std::uint64_t hash_points(std::span<const Point> pts, std::uint64_t seed = 0) noexcept;

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept { return static_cast<std::size_t>(p.hash()); }
};

}  // namespace ivl
