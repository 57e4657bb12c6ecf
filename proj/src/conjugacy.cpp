#include "ivl/conjugacy.hpp"

#include <algorithm>
#include <map>

#include "ivl/orbits.hpp"
#include "ivl/perm_store.hpp"

namespace ivl {

namespace {

constexpr std::uint32_t kUnset = UINT32_MAX;
// indices up to this go straight to the conjugation orbit of the subgroup
constexpr std::uint64_t kDirectNormalizerIndex = 2000;

std::string key_text(const PermGroup& g) {
  const auto& k = g.key();
  return std::to_string(k.order) + ":" + std::to_string(k.hash);
}

}  // namespace

ConjClassTable::ConjClassTable(PermGroup group, PermGroup acting, std::size_t cap)
    : group_(std::move(group)), acting_(std::move(acting)), elements_(group_.degree()) {
  if (group_.degree() != acting_.degree()) throw DegreeMismatch("class table: degree mismatch");
  if (group_.order() > cap)
    throw CapExceeded("class table of a group of order " + std::to_string(group_.order()) +
                      " exceeds the element cap of " + std::to_string(cap));
  const std::size_t n = group_.degree();
  const std::size_t total = group_.order();
  const auto& agens = group_.generators();
  const auto& lgens = acting_.generators();
  const std::size_t ng = lgens.size();

  // breadth-first closure fixes the sweep order
  elements_.insert(Permutation(n));
  std::vector<Point> buf(n);
  Permutation x, y;
  for (std::size_t k = 0; k < elements_.size(); ++k) {
    x = elements_.at(k);
    for (const auto& s : agens) {
      mul_into(x, s, y);
      elements_.insert(y);
    }
  }
  if (elements_.size() != total) throw Error("class table: closure disagrees with the group order");

  class_id_.assign(total, kUnset);
  parent_.assign(total, 0);
  via_.assign(total, 0);
  std::vector<std::uint32_t> local(total, 0);
  std::vector<std::uint32_t> members, images;
  for (std::size_t start = 0; start < total; ++start) {
    if (class_id_[start] != kUnset) continue;
    const auto c = static_cast<std::uint32_t>(classes_.size());
    members.assign(1, static_cast<std::uint32_t>(start));
    images.clear();
    class_id_[start] = c;
    parent_[start] = static_cast<std::uint32_t>(start);
    local[start] = 0;
    for (std::size_t k = 0; k < members.size(); ++k) {
      x = elements_.at(members[k]);
      for (std::size_t s = 0; s < ng; ++s) {
        auto j = elements_.find(conj_elem(x, lgens[s]));
        if (!j) throw NotSubgroup("class table: acting group does not normalize the group");
        if (class_id_[*j] == kUnset) {
          class_id_[*j] = c;
          parent_[*j] = members[k];
          via_[*j] = static_cast<std::uint16_t>(s);
          local[*j] = static_cast<std::uint32_t>(members.size());
          members.push_back(static_cast<std::uint32_t>(*j));
        }
        images.push_back(local[*j]);
      }
    }
    ConjClass cls;
    cls.representative = elements_.at(start);
    cls.size = members.size();
    if (members.size() == 1) {
      cls.centralizer = acting_;
    } else {
      cls.centralizer = stabilizer_from_orbit(
          acting_, members.size(), [&](std::size_t k) { return conjugator_to(elements_.at(members[k])); },
          [&](std::size_t k, std::size_t s) { return static_cast<std::size_t>(images[k * ng + s]); });
    }
    classes_.push_back(std::move(cls));
  }
}

std::size_t ConjClassTable::class_of(const Permutation& x) const {
  auto idx = elements_.find(x);
  if (!idx) throw NotMember("class lookup: element outside the group");
  return class_id_[*idx];
}

Permutation ConjClassTable::conjugator_to(const Permutation& x) const {
  auto idx = elements_.find(x);
  if (!idx) throw NotMember("class lookup: element outside the group");
  std::vector<std::uint16_t> word;
  std::size_t i = *idx;
  while (parent_[i] != i) {
    word.push_back(via_[i]);
    i = parent_[i];
  }
  Permutation t(group_.degree()), tmp;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    mul_into(t, acting_.generators()[*it], tmp);
    std::swap(t, tmp);
  }
  return t;
}

std::shared_ptr<const ConjClassTable> conjugacy_classes(const PermGroup& g, const Caps& caps) {
  return g.attribute<ConjClassTable>("classes", [&] { return ConjClassTable(g, g, caps.class_elements); });
}

std::shared_ptr<const ConjClassTable> classes_under(const PermGroup& a, const PermGroup& l, const Caps& caps) {
  if (a == l) return conjugacy_classes(a, caps);
  return a.attribute<ConjClassTable>("classes-under:" + key_text(l),
                                     [&] { return ConjClassTable(a, l, caps.class_elements); });
}

PermGroup centralizer_of(const PermGroup& c, const Permutation& x, const Caps& caps) {
  if (x.degree() != c.degree()) throw DegreeMismatch("centralizer: degree mismatch");
  if (x.is_identity()) return c;
  bool central = true;
  for (const auto& s : c.generators())
    if (x * s != s * x) {
      central = false;
      break;
    }
  if (central) return c;
  ElementOrbit orb(c, x, caps.class_elements);
  return orb.stabilizer();
}

PermGroup centralizer(const PermGroup& g, const Permutation& x, const Caps& caps) {
  if (!g.contains(x)) throw NotMember("centralizer: element outside the group");
  return centralizer_of(g, x, caps);
}

PermGroup centralizer_chain(const PermGroup& g, const std::vector<Permutation>& xs, const Caps& caps) {
  for (const auto& x : xs)
    if (!g.contains(x)) throw NotMember("centralizer: element outside the group");
  PermGroup c = g;
  for (const auto& x : xs) c = centralizer_of(c, x, caps);
  return c;
}

std::optional<Permutation> conjugating_element(const PermGroup& c, const Permutation& x, const Permutation& y,
                                               const Caps& caps) {
  if (x.degree() != c.degree() || y.degree() != c.degree()) throw DegreeMismatch("conjugacy test: degree mismatch");
  if (x == y) return Permutation(c.degree());
  if (x.cycle_type() != y.cycle_type()) return std::nullopt;
  ElementOrbit orb(c, x, caps.class_elements);
  auto idx = orb.locate(y);
  if (!idx) return std::nullopt;
  return orb.transversal(*idx);
}

std::optional<Permutation> is_conjugate(const PermGroup& g, const Permutation& x, const Permutation& y,
                                        const Caps& caps) {
  if (!g.contains(x) || !g.contains(y)) throw NotMember("conjugacy test: element outside the group");
  return conjugating_element(g, x, y, caps);
}

PermGroup normalizer(const PermGroup& g, const PermGroup& h, const Caps& caps) {
  if (!h.is_subgroup_of(g)) throw NotSubgroup("normalizer: not a subgroup");
  if (h.is_trivial() || h.order() == g.order()) return g;
  bool normal = true;
  for (const auto& s : g.generators()) {
    for (const auto& x : h.generators())
      if (!h.contains(conj_elem(x, s))) {
        normal = false;
        break;
      }
    if (!normal) break;
  }
  if (normal) return g;
  // a long conjugation orbit is cut down through a characteristic cyclic subgroup
  if (g.order() / h.order() > kDirectNormalizerIndex && h.order() <= caps.class_elements) {
    if (auto x = characteristic_cyclic(h)) {
      const PermGroup n = cyclic_normalizer(g, *x, caps.class_elements);
      SubgroupOrbit orb(n, h, caps.subgroup_orbit);
      return orb.stabilizer();
    }
  }
  SubgroupOrbit orb(g, h, caps.subgroup_orbit);
  return orb.stabilizer();
}

PermGroup cyclic_normalizer(const PermGroup& g, const Permutation& x, std::size_t cap) {
  const std::size_t n = g.degree();
  const auto& gens = g.generators();
  PermStore store(n);
  SchreierTree tree;
  std::vector<std::uint32_t> images;
  store.insert(least_cyclic_generator(x));
  tree.add_root();
  for (std::size_t k = 0; k < store.size(); ++k) {
    const Permutation y = store.at(k);
    for (std::size_t s = 0; s < gens.size(); ++s) {
      const auto [idx, fresh] = store.insert(least_cyclic_generator(conj_elem(y, gens[s])));
      if (fresh) {
        if (store.size() > cap)
          throw CapExceeded("cyclic subgroup orbit exceeds the cap of " + std::to_string(cap));
        tree.add(k, s);
      }
      images.push_back(static_cast<std::uint32_t>(idx));
    }
  }
  return stabilizer_from_orbit(
      g, store.size(), [&](std::size_t k) { return tree.word(k, gens, n); },
      [&](std::size_t k, std::size_t s) { return images[k * gens.size() + s]; });
}

std::optional<Permutation> characteristic_cyclic(const PermGroup& h) {
  if (h.is_trivial()) return std::nullopt;
  PermStore elements(h.degree());
  elements.insert(Permutation(h.degree()));
  Permutation y;
  for (std::size_t k = 0; k < elements.size(); ++k) {
    const Permutation x = elements.at(k);
    for (const auto& s : h.generators()) {
      mul_into(x, s, y);
      elements.insert(y);
    }
  }
  // the elements of order m generate a cyclic group exactly when they all lie in the
  // group generated by one of them
  std::map<std::uint64_t, std::vector<Permutation>, std::greater<>> by_order;
  for (std::size_t k = 1; k < elements.size(); ++k) {
    Permutation x = elements.at(k);
    by_order[x.order()].push_back(std::move(x));
  }
  for (const auto& [m, xs] : by_order) {
    if (xs.size() >= m) continue;  // a cyclic group of order m has fewer than m generators
    const PermGroup c(h.degree(), {xs.front()});
    if (std::all_of(xs.begin(), xs.end(), [&](const Permutation& x) { return c.contains(x); })) return xs.front();
  }
  return std::nullopt;
}

std::optional<Permutation> is_subgroup_conjugate(const PermGroup& g, const PermGroup& h, const PermGroup& k,
                                                 const Caps& caps) {
  if (!h.is_subgroup_of(g) || !k.is_subgroup_of(g)) throw NotSubgroup("subgroup conjugacy: not a subgroup");
  if (h.order() != k.order()) return std::nullopt;
  if (h == k) return Permutation(g.degree());
  if (h.orbit_lengths() != k.orbit_lengths()) return std::nullopt;
  SubgroupOrbit orb(g, h, caps.subgroup_orbit);
  auto idx = orb.locate(k);
  if (!idx) return std::nullopt;
  return orb.transversal(*idx);
}

PermGroup intersection(const PermGroup& a, const PermGroup& b, const Caps& caps) {
  if (a.degree() != b.degree()) throw DegreeMismatch("intersection: degree mismatch");
  if (a.is_subgroup_of(b)) return a;
  if (b.is_subgroup_of(a)) return b;
  // the acting group's orbit on cosets of the other has length [acting : a ∩ b]
  const bool a_acts = a.order() <= b.order();
  CosetOrbit orb(a_acts ? a : b, a_acts ? b : a, caps.coset_index);
  return orb.stabilizer();
}

}  // namespace ivl
