#include "ivl/actions.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace ivl {

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  // Keeps the smaller root so roots are the least points of their classes.
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent[b] = a;
    return true;
  }
};

BlockSystem from_roots(UnionFind& uf) {
  const std::size_t n = uf.parent.size();
  BlockSystem sys;
  sys.action_degree = n;
  sys.block_of.assign(n, 0);
  std::vector<std::size_t> label(n, SIZE_MAX);
  for (std::size_t p = 0; p < n; ++p) {
    const std::size_t r = uf.find(p);
    if (label[r] == SIZE_MAX) label[r] = sys.num_blocks++;
    sys.block_of[p] = label[r];
  }
  return sys;
}

}  // namespace

std::vector<Point> orbit(const PermGroup& group, Point point) {
  if (point >= group.degree()) throw Error("orbit: point out of range");
  return point_orbit(group, point).points;
}

CosetAction::CosetAction(PermGroup parent, PermGroup point_subgroup, std::size_t cap)
    : parent_(std::move(parent)), sub_(std::move(point_subgroup)) {
  if (!sub_.is_subgroup_of(parent_)) throw NotSubgroup("coset action: U is not a subgroup of G");
  if (parent_.order() / sub_.order() > cap)
    throw CapExceeded("coset action of index " + std::to_string(parent_.order() / sub_.order()) +
                      " exceeds the index cap of " + std::to_string(cap));
  orbit_ = std::make_shared<CosetOrbit>(parent_, sub_, cap);
  const std::size_t n = orbit_->size();
  for (std::size_t s = 0; s < parent_.generators().size(); ++s) {
    std::vector<Point> img(n);
    for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<Point>(orbit_->image(i, s));
    images_.push_back(Permutation::unchecked(std::move(img)));
  }
}

std::size_t CosetAction::coset_of(const Permutation& g) const {
  auto idx = orbit_->locate(g);
  if (!idx) throw NotMember("coset action: element outside the parent group");
  return *idx;
}

Permutation CosetAction::image_of(const Permutation& g) const {
  std::vector<Point> img(degree());
  for (std::size_t i = 0; i < degree(); ++i) img[i] = static_cast<Point>(coset_of(transversal(i) * g));
  return Permutation::unchecked(std::move(img));
}

BlockSystem minimal_block(const CosetAction& action, std::size_t seed) {
  const std::size_t n = action.degree();
  if (seed == 0 || seed >= n) throw Error("minimal block: seed out of range");
  UnionFind uf(n);
  std::vector<std::pair<std::size_t, std::size_t>> queue{{0, seed}};
  uf.unite(0, seed);
  for (std::size_t k = 0; k < queue.size(); ++k) {
    const auto [a, b] = queue[k];
    for (const auto& s : action.images()) {
      const std::size_t sa = s[static_cast<Point>(a)], sb = s[static_cast<Point>(b)];
      if (uf.find(sa) != uf.find(sb)) {
        uf.unite(sa, sb);
        queue.emplace_back(sa, sb);
      }
    }
  }
  return from_roots(uf);
}

BlockSystem join_partitions(const BlockSystem& a, const BlockSystem& b) {
  const std::size_t n = a.action_degree;
  UnionFind uf(n);
  std::vector<std::size_t> first_a(a.num_blocks, SIZE_MAX), first_b(b.num_blocks, SIZE_MAX);
  for (std::size_t p = 0; p < n; ++p) {
    auto& fa = first_a[a.block_of[p]];
    if (fa == SIZE_MAX) fa = p; else uf.unite(fa, p);
    auto& fb = first_b[b.block_of[p]];
    if (fb == SIZE_MAX) fb = p; else uf.unite(fb, p);
  }
  return from_roots(uf);
}

std::vector<BlockSystem> all_block_systems(const CosetAction& action) {
  const std::size_t n = action.degree();
  if (n <= 1) return {};

  // Seeds in one orbit of the point stabilizer give the same minimal system, so one seed
  // per suborbit suffices.
  std::vector<std::vector<Point>> sub_images;
  for (const auto& u : action.point_subgroup().generators()) {
    std::vector<Point> img(n);
    for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<Point>(action.coset_of(action.transversal(i) * u));
    sub_images.push_back(std::move(img));
  }
  std::vector<bool> covered(n, false);
  covered[0] = true;
  std::vector<std::size_t> seeds;
  for (std::size_t p = 1; p < n; ++p) {
    if (covered[p]) continue;
    seeds.push_back(p);
    std::vector<std::size_t> queue{p};
    covered[p] = true;
    for (std::size_t k = 0; k < queue.size(); ++k)
      for (const auto& img : sub_images) {
        const std::size_t q = img[queue[k]];
        if (!covered[q]) {
          covered[q] = true;
          queue.push_back(q);
        }
      }
  }

  std::set<std::vector<std::size_t>> seen;
  std::vector<BlockSystem> minimal;
  for (std::size_t seed : seeds) {
    BlockSystem sys = minimal_block(action, seed);
    if (sys.num_blocks == 1) continue;
    if (seen.insert(sys.block_of).second) minimal.push_back(std::move(sys));
  }

  // Every system is the join of the minimal systems below it, so closing under joins with
  // the minimal systems reaches all of them.
  std::vector<BlockSystem> all = minimal;
  for (std::size_t k = 0; k < all.size(); ++k)
    for (const auto& m : minimal) {
      BlockSystem j = join_partitions(all[k], m);
      if (j.num_blocks == 1) continue;
      if (seen.insert(j.block_of).second) all.push_back(std::move(j));
    }

  std::sort(all.begin(), all.end(), [](const BlockSystem& a, const BlockSystem& b) {
    if (a.num_blocks != b.num_blocks) return a.num_blocks > b.num_blocks;
    return a.block_of < b.block_of;
  });
  return all;
}

PermGroup subgroup_from_block(const CosetAction& action, const BlockSystem& sys) {
  const PermGroup& u = action.point_subgroup();
  const std::uint64_t target = checked_mul(u.order(), sys.block_size());
  if (target == u.order()) return u;
  if (target == action.parent().order()) return action.parent();
  ChainBuilder builder(u.degree(), target);
  for (const auto& g : u.generators()) builder.add_generator(g);
  for (std::size_t i = 1; i < sys.action_degree && builder.order() < target; ++i)
    if (sys.block_of[i] == sys.block_of[0]) builder.add_generator(action.transversal(i));
  return PermGroup(u.degree(), builder.generators(), builder.chain());
}

}  // namespace ivl
