#include "ivl/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "ivl/config.hpp"

namespace ivl {

namespace {

void check_degrees(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree())
    throw DegreeMismatch("permutation degrees differ: " + std::to_string(a.degree()) + " vs " +
                         std::to_string(b.degree()));
}

constexpr std::uint64_t mix(std::uint64_t h) noexcept {
  h ^= h >> 33;
  h *= 0xff51afd7ed558ccdULL;
  h ^= h >> 33;
  h *= 0xc4ceb9fe1a85ec53ULL;
  h ^= h >> 33;
  return h;
}

}  // namespace

std::uint64_t hash_points(std::span<const Point> pts, std::uint64_t seed) noexcept {
  std::uint64_t h = mix(seed ^ (pts.size() * 0x9e3779b97f4a7c15ULL));
  for (Point p : pts) h = mix(h ^ (p + 0x632be59bd9b4e019ULL)) + (h << 6);
  return mix(h);
}

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point p : images_) {
    if (p >= images_.size() || seen[p]) throw ParseError("image list is not a bijection");
    seen[p] = true;
  }
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) r.images_[images_[i]] = static_cast<Point>(i);
  return r;
}

Permutation Permutation::pow(std::int64_t e) const {
  Permutation base = e < 0 ? inverse() : *this;
  std::uint64_t n = e < 0 ? static_cast<std::uint64_t>(-e) : static_cast<std::uint64_t>(e);
  Permutation result(degree());
  while (n) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

std::uint64_t Permutation::order() const {
  std::uint64_t ord = 1;
  for (std::size_t len : cycle_type()) ord = std::lcm(ord, static_cast<std::uint64_t>(len));
  return ord;
}

std::vector<std::size_t> Permutation::cycle_type() const {
  std::vector<std::size_t> lens;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (Point p = static_cast<Point>(i); !seen[p]; p = images_[p]) {
      seen[p] = true;
      ++len;
    }
    lens.push_back(len);
  }
  std::sort(lens.begin(), lens.end());
  return lens;
}

Point Permutation::smallest_moved_point() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return static_cast<Point>(i);
  return static_cast<Point>(images_.size());
}

std::string Permutation::to_cycles() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    out += '(';
    Point p = static_cast<Point>(i);
    bool first = true;
    while (!seen[p]) {
      seen[p] = true;
      if (!first) out += ',';
      out += std::to_string(p + 1);
      first = false;
      p = images_[p];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::uint64_t Permutation::hash() const noexcept { return hash_points(images_); }

void mul_into(const Permutation& a, const Permutation& b, Permutation& out) {
  check_degrees(a, b);
  out.images_.resize(a.degree());
  for (std::size_t i = 0; i < a.images_.size(); ++i) out.images_[i] = b.images_[a.images_[i]];
}

Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation out;
  mul_into(a, b, out);
  return out;
}

Permutation conj_elem(const Permutation& x, const Permutation& g) {
  check_degrees(x, g);
  // (p^g)^(x^g) = (p^x)^g
  std::vector<Point> img(x.degree());
  for (std::size_t i = 0; i < img.size(); ++i) img[g[static_cast<Point>(i)]] = g[x[static_cast<Point>(i)]];
  return Permutation::unchecked(std::move(img));
}

Permutation least_cyclic_generator(const Permutation& x) {
  const std::uint64_t o = x.order();
  Permutation best = x, power = x, tmp;
  for (std::uint64_t k = 2; k < o; ++k) {
    mul_into(power, x, tmp);
    std::swap(power, tmp);
    if (std::gcd(k, o) == 1 && power < best) best = power;
  }
  return best;
}

Permutation parse_permutation(std::string_view text, std::size_t degree) {
  if (degree == 0) throw ParseError("degree must be positive");
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  std::vector<bool> used(degree, false);

  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto fail = [&](const std::string& why) -> ParseError {
    return ParseError("bad permutation \"" + std::string(text) + "\": " + why);
  };

  skip_ws();
  if (i == text.size()) throw fail("empty text");
  while (i < text.size()) {
    if (text[i] != '(') throw fail("expected '('");
    ++i;
    skip_ws();
    std::vector<Point> cycle;
    if (i < text.size() && text[i] == ')') {
      ++i;  // "()"
    } else {
      while (true) {
        skip_ws();
        std::size_t start = i;
        std::uint64_t v = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
          v = v * 10 + static_cast<std::uint64_t>(text[i] - '0');
          if (v > degree) throw fail("point exceeds degree " + std::to_string(degree));
          ++i;
        }
        if (i == start) throw fail("expected a point");
        if (v == 0) throw fail("points are 1-based");
        Point p = static_cast<Point>(v - 1);
        if (used[p]) throw fail("repeated point " + std::to_string(v));
        used[p] = true;
        cycle.push_back(p);
        skip_ws();
        if (i < text.size() && text[i] == ',') {
          ++i;
          continue;
        }
        if (i < text.size() && text[i] == ')') {
          ++i;
          break;
        }
        throw fail("expected ',' or ')'");
      }
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) img[cycle[k]] = cycle[(k + 1) % cycle.size()];
    skip_ws();
  }
  return Permutation(std::move(img));
}

}  // namespace ivl
