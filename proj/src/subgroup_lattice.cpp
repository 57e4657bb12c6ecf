#include "ivl/subgroup_lattice.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <unordered_map>

#include "ivl/conjugacy.hpp"
#include "ivl/orbits.hpp"
#include "ivl/perm_store.hpp"

namespace ivl {

namespace {

bool is_prime_power(std::uint64_t n) {
  if (n < 2) return false;
  std::uint64_t p = 2;
  while (n % p != 0) ++p;
  while (n % p == 0) n /= p;
  return n == 1;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent[b] = a;
  }
};

}  // namespace

SubgroupLattice::SubgroupLattice(PermGroup group, const Caps& caps) : group_(std::move(group)) {
  if (group_.order() > caps.oracle_order)
    throw CapExceeded("subgroup oracle: group order " + std::to_string(group_.order()) + " exceeds the cap of " +
                      std::to_string(caps.oracle_order));
  const std::size_t n = group_.degree();
  const std::uint64_t full = group_.order();

  // cyclic subgroups of prime power order, each by its least generator
  PermStore elements(n);
  elements.insert(Permutation(n));
  Permutation x, y;
  for (std::size_t k = 0; k < elements.size(); ++k) {
    x = elements.at(k);
    for (const auto& s : group_.generators()) {
      mul_into(x, s, y);
      elements.insert(y);
    }
  }
  std::vector<Permutation> cyclic;
  std::unordered_map<Permutation, std::size_t, PermutationHash> cyclic_index;
  for (std::size_t k = 0; k < elements.size(); ++k) {
    x = elements.at(k);
    if (!is_prime_power(x.order())) continue;
    if (least_cyclic_generator(x) != x) continue;
    cyclic_index.emplace(x, cyclic.size());
    cyclic.push_back(x);
  }

  using Item = std::pair<std::uint64_t, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> work;
  work.emplace(1, add_class(PermGroup::trivial(n), caps));
  while (!work.empty()) {
    const std::size_t c = work.top().second;
    work.pop();
    const PermGroup h = classes_[c].representative;
    const PermGroup norm = classes_[c].normalizer;
    if (h.order() == full) continue;

    // orbits of the normalizer on the cyclic subgroups outside h
    std::vector<bool> outside(cyclic.size());
    for (std::size_t i = 0; i < cyclic.size(); ++i) outside[i] = !h.contains(cyclic[i]);
    UnionFind uf(cyclic.size());
    for (std::size_t i = 0; i < cyclic.size(); ++i) {
      if (!outside[i]) continue;
      for (const auto& s : norm.generators()) uf.unite(i, cyclic_index.at(least_cyclic_generator(conj_elem(cyclic[i], s))));
    }
    bool only_whole_group = true;
    for (std::size_t i = 0; i < cyclic.size(); ++i) {
      if (!outside[i] || uf.find(i) != i) continue;
      std::vector<Permutation> gens = h.generators();
      gens.push_back(cyclic[i]);
      PermGroup k(n, std::move(gens));
      if (k.order() != full) only_whole_group = false;
      if (all_.find(k)) continue;
      const std::size_t id = add_class(k, caps);
      work.emplace(k.order(), id);
    }
    classes_[c].maximal = only_whole_group;
  }
}

std::size_t SubgroupLattice::add_class(const PermGroup& rep, const Caps& caps) {
  const std::size_t id = classes_.size();
  SubgroupOrbit orb(group_, rep, caps.subgroup_orbit);
  orb.expand_all();
  for (std::size_t i = 0; i < orb.size(); ++i) {
    all_.insert(i == 0 ? rep : orb.member(i));
    class_of_.push_back(id);
  }
  SubgroupClass cls;
  cls.representative = rep;
  cls.orbit_size = orb.size();
  cls.normalizer = orb.size() == 1 ? group_ : orb.stabilizer();
  classes_.push_back(std::move(cls));
  return id;
}

const std::vector<std::pair<std::size_t, std::size_t>>& SubgroupLattice::maximal_under() const {
  std::call_once(*maximal_once_, [this] {
    std::vector<std::size_t> by_order(all_.size());
    std::iota(by_order.begin(), by_order.end(), std::size_t{0});
    std::stable_sort(by_order.begin(), by_order.end(),
                     [&](std::size_t a, std::size_t b) { return all_[a].order() > all_[b].order(); });
    for (std::size_t j = 0; j < classes_.size(); ++j) {
      const PermGroup& k = classes_[j].representative;
      std::vector<std::size_t> inside;
      for (std::size_t s : by_order) {
        const PermGroup& v = all_[s];
        if (v.order() < k.order() && k.order() % v.order() == 0 && v.is_subgroup_of(k)) inside.push_back(s);
      }
      std::vector<std::size_t> found;
      for (std::size_t a = 0; a < inside.size(); ++a) {
        const PermGroup& v = all_[inside[a]];
        bool maximal = true;
        for (std::size_t b = 0; b < a && maximal; ++b) {
          const PermGroup& w = all_[inside[b]];
          if (w.order() > v.order() && w.order() % v.order() == 0 && v.is_subgroup_of(w)) maximal = false;
        }
        if (maximal) found.push_back(class_of_[inside[a]]);
      }
      std::sort(found.begin(), found.end());
      found.erase(std::unique(found.begin(), found.end()), found.end());
      for (std::size_t i : found) maximal_under_.emplace_back(i, j);
    }
  });
  return maximal_under_;
}

std::shared_ptr<const SubgroupLattice> all_subgroups(const PermGroup& g, const Caps& caps) {
  if (g.order() > caps.oracle_order)
    throw CapExceeded("subgroup oracle: group order " + std::to_string(g.order()) + " exceeds the cap of " +
                      std::to_string(caps.oracle_order));
  return g.attribute<SubgroupLattice>("subgroup-lattice", [&] { return SubgroupLattice(g, caps); });
}

MaximalClasses maximal_subgroups_oracle(const PermGroup& t, const Caps& caps) {
  MaximalClasses out{t, {}, MaximalSource::oracle};
  auto lattice = all_subgroups(t, caps);
  for (const auto& c : lattice->classes())
    if (c.maximal) out.reps.push_back(c.representative);
  return out;
}

LatticeInterval intermediate_oracle(const PermGroup& g, const PermGroup& u, const Caps& caps) {
  if (!u.is_subgroup_of(g)) throw NotSubgroup("oracle: U is not a subgroup of G");
  if (u.order() == g.order()) return make_interval(u, g, {});
  auto lattice = all_subgroups(g, caps);
  std::vector<PermGroup> subs;
  for (const auto& v : lattice->subgroups().groups())
    if (v.order() > u.order() && v.order() < g.order() && v.order() % u.order() == 0 && u.is_subgroup_of(v))
      subs.push_back(v);
  return make_interval(u, g, std::move(subs));
}

}  // namespace ivl
