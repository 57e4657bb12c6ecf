#include "ivl/stab_chain.hpp"

#include <algorithm>
#include <limits>

#include "ivl/config.hpp"

namespace ivl {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
    throw CapExceeded("group order exceeds the 64-bit range");
  return a * b;
}

// ---------------------------------------------------------------------------
// StabChain

StabChain::StabChain(std::size_t degree, std::vector<StabLevel> levels)
    : degree_(degree), levels_(std::move(levels)) {
  for (const auto& l : levels_) order_ = checked_mul(order_, l.orbit.size());
}

std::vector<Point> StabChain::base() const {
  std::vector<Point> b;
  b.reserve(levels_.size());
  for (const auto& l : levels_) b.push_back(l.base);
  return b;
}

std::pair<Permutation, std::size_t> StabChain::sift(Permutation g, std::size_t from) const {
  if (g.degree() != degree_) throw DegreeMismatch("sift: degree mismatch");
  Permutation scratch;
  for (std::size_t j = from; j < levels_.size(); ++j) {
    const StabLevel& l = levels_[j];
    const std::int32_t k = l.position[g[l.base]];
    if (k < 0) return {std::move(g), j};
    if (k > 0) {
      mul_into(g, l.inverse_transversal[static_cast<std::size_t>(k)], scratch);
      std::swap(g, scratch);
    }
  }
  return {std::move(g), levels_.size()};
}

bool StabChain::contains(const Permutation& g) const {
  auto [r, j] = sift(g);
  return j == levels_.size() && r.is_identity();
}

Permutation StabChain::random_element(std::mt19937_64& rng) const {
  Permutation g(degree_);
  for (std::size_t j = levels_.size(); j-- > 0;) {
    std::uniform_int_distribution<std::size_t> pick(0, levels_[j].orbit.size() - 1);
    g = g * levels_[j].transversal[pick(rng)];
  }
  return g;
}

Permutation StabChain::element(std::uint64_t index) const {
  std::vector<std::size_t> digits(levels_.size());
  for (std::size_t j = 0; j < levels_.size(); ++j) {
    digits[j] = static_cast<std::size_t>(index % levels_[j].orbit.size());
    index /= levels_[j].orbit.size();
  }
  Permutation g(degree_);
  for (std::size_t j = levels_.size(); j-- > 0;) g = g * levels_[j].transversal[digits[j]];
  return g;
}

namespace {

// Lexicographically least element of S_from * t where S_from is the stabilizer at `from`.
Permutation lexmin_from(const std::vector<StabLevel>& levels, std::size_t from, Permutation t) {
  Permutation scratch;
  for (std::size_t j = from; j < levels.size(); ++j) {
    const StabLevel& l = levels[j];
    std::size_t best = 0;
    Point best_img = t[l.orbit[0]];
    for (std::size_t k = 1; k < l.orbit.size(); ++k) {
      const Point img = t[l.orbit[k]];
      if (img < best_img) {
        best_img = img;
        best = k;
      }
    }
    if (best != 0) {
      mul_into(l.transversal[best], t, scratch);
      std::swap(t, scratch);
    }
  }
  return t;
}

}  // namespace

Permutation StabChain::min_coset_rep(const Permutation& g) const {
  if (g.degree() != degree_) throw DegreeMismatch("coset representative: degree mismatch");
  return lexmin_from(levels_, 0, g);
}

std::vector<Point> StabChain::canonical_data() const {
  std::vector<Point> data;
  data.push_back(static_cast<Point>(levels_.size()));
  for (const auto& l : levels_) data.push_back(l.base);
  for (std::size_t j = 0; j < levels_.size(); ++j) {
    const StabLevel& l = levels_[j];
    std::vector<std::size_t> idx(l.orbit.size());
    for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = k;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return l.orbit[a] < l.orbit[b]; });
    for (std::size_t k : idx) {
      const Permutation t = lexmin_from(levels_, j + 1, l.transversal[k]);
      for (std::size_t m = 0; m < t.degree(); ++m) data.push_back(t[static_cast<Point>(m)]);
    }
  }
  return data;
}

// ---------------------------------------------------------------------------
// ChainBuilder

ChainBuilder::ChainBuilder(std::size_t degree, std::optional<std::uint64_t> target_order)
    : degree_(degree), target_(target_order), levels_(degree) {
  for (std::size_t i = 0; i < degree; ++i) {
    Level& l = levels_[i];
    l.base = static_cast<Point>(i);
    l.orbit = {l.base};
    l.position.assign(degree, -1);
    l.position[i] = 0;
    l.transversal = {Permutation(degree)};
    l.inverse_transversal = {Permutation(degree)};
    l.done = {0};
  }
}

std::size_t ChainBuilder::sift_level(Permutation& h, std::size_t from) const {
  Permutation scratch;
  for (std::size_t j = from; j < degree_; ++j) {
    const Level& l = levels_[j];
    const std::int32_t k = l.position[h[l.base]];
    if (k < 0) return j;
    if (k > 0) {
      mul_into(h, l.inverse_transversal[static_cast<std::size_t>(k)], scratch);
      std::swap(h, scratch);
    }
  }
  return degree_;
}

bool ChainBuilder::contains(const Permutation& g) const {
  if (g.degree() != degree_) throw DegreeMismatch("membership: degree mismatch");
  Permutation h = g;
  return sift_level(h, 0) == degree_;
}

void ChainBuilder::extend_orbit(Level& l, std::size_t first_new_gen) {
  auto try_add = [&](std::size_t k, std::size_t s) {
    const Point q = l.generators[s][l.orbit[k]];
    if (l.position[q] >= 0) return;
    l.position[q] = static_cast<std::int32_t>(l.orbit.size());
    l.orbit.push_back(q);
    Permutation t = l.transversal[k] * l.generators[s];
    l.inverse_transversal.push_back(t.inverse());
    l.transversal.push_back(std::move(t));
    l.done.push_back(0);
  };
  const std::size_t old = l.orbit.size();
  for (std::size_t k = 0; k < old; ++k)
    for (std::size_t s = first_new_gen; s < l.generators.size(); ++s) try_add(k, s);
  for (std::size_t k = old; k < l.orbit.size(); ++k)
    for (std::size_t s = 0; s < l.generators.size(); ++s) try_add(k, s);
}

void ChainBuilder::add_strong(const Permutation& r, std::size_t from, std::size_t to) {
  for (std::size_t j = from; j <= to; ++j) {
    Level& l = levels_[j];
    l.generators.push_back(r);
    extend_orbit(l, l.generators.size() - 1);
  }
  recompute_order();
}

void ChainBuilder::recompute_order() {
  std::uint64_t o = 1;
  for (const auto& l : levels_) o = checked_mul(o, l.orbit.size());
  order_ = o;
}

void ChainBuilder::complete(std::size_t start) {
  Permutation tmp, h;
  std::size_t i = start + 1;
  while (i-- > 0) {
    if (target_reached()) return;
    Level& l = levels_[i];
    bool jumped = false;
    for (std::size_t k = 0; k < l.orbit.size() && !jumped; ++k) {
      while (l.done[k] < l.generators.size()) {
        const std::size_t s = l.done[k]++;
        const Permutation& gen = l.generators[s];
        const auto k2 = static_cast<std::size_t>(l.position[gen[l.orbit[k]]]);
        mul_into(l.transversal[k], gen, tmp);
        mul_into(tmp, l.inverse_transversal[k2], h);
        const std::size_t j = sift_level(h, i + 1);
        if (j < degree_) {
          add_strong(h, i + 1, j);
          i = j + 1;  // resume the sweep at level j
          jumped = true;
          break;
        }
      }
    }
  }
}

bool ChainBuilder::add_generator(const Permutation& g) {
  if (g.degree() != degree_) throw DegreeMismatch("generator degree mismatch");
  Permutation h = g;
  const std::size_t j = sift_level(h, 0);
  if (j == degree_) return false;
  gens_.push_back(g);
  // g itself fixes everything below its smallest moved point, so it belongs to those levels.
  const std::size_t top = g.smallest_moved_point();
  add_strong(g, 0, top);
  complete(top);
  return true;
}

StabChain ChainBuilder::chain() const {
  std::vector<StabLevel> kept;
  for (const auto& l : levels_) {
    if (l.orbit.size() <= 1) continue;
    kept.push_back(static_cast<const StabLevel&>(l));
  }
  return StabChain(degree_, std::move(kept));
}

}  // namespace ivl
