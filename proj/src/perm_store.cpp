#include "ivl/perm_store.hpp"

#include <cstring>
#include <limits>

#include "ivl/config.hpp"

namespace ivl {

PermStore::PermStore(std::size_t degree)
    : degree_(degree), width_(degree <= 256 ? 1 : degree <= 65536 ? 2 : 4), slots_(64, 0) {}

bool PermStore::equal_at(std::size_t index, std::span<const Point> images) const {
  const std::uint8_t* base = data_.data() + index * degree_ * width_;
  switch (width_) {
    case 1:
      for (std::size_t i = 0; i < degree_; ++i)
        if (base[i] != images[i]) return false;
      return true;
    case 2:
      for (std::size_t i = 0; i < degree_; ++i) {
        std::uint16_t v;
        std::memcpy(&v, base + 2 * i, 2);
        if (v != images[i]) return false;
      }
      return true;
    default:
      for (std::size_t i = 0; i < degree_; ++i) {
        std::uint32_t v;
        std::memcpy(&v, base + 4 * i, 4);
        if (v != images[i]) return false;
      }
      return true;
  }
}

void PermStore::load(std::size_t index, std::span<Point> out) const {
  const std::uint8_t* base = data_.data() + index * degree_ * width_;
  for (std::size_t i = 0; i < degree_; ++i) {
    if (width_ == 1) {
      out[i] = base[i];
    } else if (width_ == 2) {
      std::uint16_t v;
      std::memcpy(&v, base + 2 * i, 2);
      out[i] = v;
    } else {
      std::uint32_t v;
      std::memcpy(&v, base + 4 * i, 4);
      out[i] = v;
    }
  }
}

Permutation PermStore::at(std::size_t index) const {
  std::vector<Point> img(degree_);
  load(index, img);
  return Permutation::unchecked(std::move(img));
}

std::optional<std::size_t> PermStore::find(std::span<const Point> images) const {
  const std::uint64_t h = hash_points(images);
  const std::size_t mask = slots_.size() - 1;
  for (std::size_t s = h & mask;; s = (s + 1) & mask) {
    const std::uint32_t slot = slots_[s];
    if (slot == 0) return std::nullopt;
    const std::size_t idx = slot - 1;
    if (hashes_[idx] == h && equal_at(idx, images)) return idx;
  }
}

void PermStore::grow() {
  std::vector<std::uint32_t> fresh(slots_.size() * 2, 0);
  const std::size_t mask = fresh.size() - 1;
  for (std::size_t idx = 0; idx < hashes_.size(); ++idx) {
    std::size_t s = hashes_[idx] & mask;
    while (fresh[s] != 0) s = (s + 1) & mask;
    fresh[s] = static_cast<std::uint32_t>(idx + 1);
  }
  slots_.swap(fresh);
}

std::pair<std::size_t, bool> PermStore::insert(std::span<const Point> images) {
  if (images.size() != degree_) throw DegreeMismatch("element store degree mismatch");
  const std::uint64_t h = hash_points(images);
  std::size_t mask = slots_.size() - 1;
  std::size_t s = h & mask;
  for (;; s = (s + 1) & mask) {
    const std::uint32_t slot = slots_[s];
    if (slot == 0) break;
    const std::size_t idx = slot - 1;
    if (hashes_[idx] == h && equal_at(idx, images)) return {idx, false};
  }
  if (hashes_.size() >= std::numeric_limits<std::uint32_t>::max() - 1)
    throw CapExceeded("element store exceeds 32-bit index range");
  const std::size_t idx = hashes_.size();
  hashes_.push_back(h);
  const std::size_t off = data_.size();
  data_.resize(off + degree_ * width_);
  std::uint8_t* base = data_.data() + off;
  for (std::size_t i = 0; i < degree_; ++i) {
    if (width_ == 1) {
      base[i] = static_cast<std::uint8_t>(images[i]);
    } else if (width_ == 2) {
      const auto v = static_cast<std::uint16_t>(images[i]);
      std::memcpy(base + 2 * i, &v, 2);
    } else {
      const std::uint32_t v = images[i];
      std::memcpy(base + 4 * i, &v, 4);
    }
  }
  slots_[s] = static_cast<std::uint32_t>(idx + 1);
  if (2 * hashes_.size() > slots_.size()) grow();
  return {idx, true};
}

}  // namespace ivl
