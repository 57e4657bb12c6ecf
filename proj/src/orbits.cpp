#include "ivl/orbits.hpp"

#include <algorithm>

#include "ivl/config.hpp"

namespace ivl {

// ---------------------------------------------------------------------------
// SchreierTree

void SchreierTree::add_root() {
  parent_.push_back(0);
  via_.push_back(0);
}

void SchreierTree::add(std::size_t parent, std::size_t generator) {
  parent_.push_back(static_cast<std::uint32_t>(parent));
  via_.push_back(static_cast<std::uint32_t>(generator));
}

Permutation SchreierTree::word(std::size_t node, std::span<const Permutation> gens, std::size_t degree) const {
  std::vector<std::uint32_t> path;
  while (node != 0) {
    path.push_back(via_[node]);
    node = parent_[node];
  }
  Permutation t(degree), scratch;
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    mul_into(t, gens[*it], scratch);
    std::swap(t, scratch);
  }
  return t;
}

PermGroup stabilizer_from_orbit(const PermGroup& group, std::size_t orbit_size,
                                const std::function<Permutation(std::size_t)>& transversal,
                                const std::function<std::size_t(std::size_t, std::size_t)>& image) {
  const std::size_t n = group.degree();
  const std::uint64_t target = group.order() / orbit_size;
  ChainBuilder builder(n, target);
  const auto& gens = group.generators();
  Permutation tmp, z;
  for (std::size_t k = 0; k < orbit_size && builder.order() < target; ++k) {
    const Permutation tk = transversal(k);
    for (std::size_t s = 0; s < gens.size() && builder.order() < target; ++s) {
      const Permutation ti = transversal(image(k, s)).inverse();
      mul_into(tk, gens[s], tmp);
      mul_into(tmp, ti, z);
      builder.add_generator(z);
    }
  }
  if (builder.order() != target) throw Error("stabilizer computation did not reach the expected order");
  return PermGroup(n, builder.generators(), builder.chain());
}

// ---------------------------------------------------------------------------
// Point orbits

PointOrbit point_orbit(const PermGroup& group, Point p) {
  PointOrbit o;
  o.position.assign(group.degree(), -1);
  o.points.push_back(p);
  o.position[p] = 0;
  o.tree.add_root();
  const auto& gens = group.generators();
  for (std::size_t k = 0; k < o.points.size(); ++k)
    for (std::size_t s = 0; s < gens.size(); ++s) {
      const Point q = gens[s][o.points[k]];
      if (o.position[q] >= 0) continue;
      o.position[q] = static_cast<std::int32_t>(o.points.size());
      o.points.push_back(q);
      o.tree.add(k, s);
    }
  return o;
}

// ---------------------------------------------------------------------------
// ElementOrbit

ElementOrbit::ElementOrbit(PermGroup group, const Permutation& x, std::size_t cap)
    : group_(std::move(group)), cap_(cap), store_(x.degree()) {
  if (x.degree() != group_.degree()) throw DegreeMismatch("conjugation orbit: degree mismatch");
  store_.insert(x);
  tree_.add_root();
}

bool ElementOrbit::step() {
  if (head_ == store_.size()) return false;
  const auto& gens = group_.generators();
  const Permutation x = store_.at(head_);
  for (std::size_t s = 0; s < gens.size(); ++s) {
    auto [idx, fresh] = store_.insert(conj_elem(x, gens[s]));
    if (fresh) {
      if (store_.size() > cap_)
        throw CapExceeded("conjugation orbit exceeds the element cap of " + std::to_string(cap_));
      tree_.add(head_, s);
    }
    images_.push_back(static_cast<std::uint32_t>(idx));
  }
  ++head_;
  return true;
}

std::optional<std::size_t> ElementOrbit::locate(const Permutation& y) {
  if (y.degree() != store_.degree()) throw DegreeMismatch("conjugation orbit: degree mismatch");
  while (true) {
    if (auto idx = store_.find(y)) return idx;
    if (!step()) return std::nullopt;
  }
}

void ElementOrbit::expand_all() {
  while (step()) {
  }
}

Permutation ElementOrbit::transversal(std::size_t i) const {
  return tree_.word(i, group_.generators(), group_.degree());
}

PermGroup ElementOrbit::stabilizer() {
  expand_all();
  const std::size_t ngens = group_.generators().size();
  return stabilizer_from_orbit(
      group_, store_.size(), [this](std::size_t k) { return transversal(k); },
      [this, ngens](std::size_t k, std::size_t s) { return static_cast<std::size_t>(images_[k * ngens + s]); });
}

// ---------------------------------------------------------------------------
// SubgroupOrbit

SubgroupOrbit::SubgroupOrbit(PermGroup acting, PermGroup subgroup, std::size_t cap)
    : acting_(std::move(acting)), subgroup_(std::move(subgroup)), cap_(cap), transversals_(acting_.degree()) {
  if (acting_.degree() != subgroup_.degree()) throw DegreeMismatch("subgroup orbit: degree mismatch");
  add(subgroup_, 0, 0);
}

std::optional<std::size_t> SubgroupOrbit::find(const PermGroup& k) const {
  auto it = by_key_.find(k.key());
  if (it == by_key_.end()) return std::nullopt;
  for (std::uint32_t idx : it->second) {
    const Permutation t = transversals_.at(idx);
    bool same = true;
    for (const auto& g : subgroup_.generators())
      if (!k.contains(conj_elem(g, t))) {
        same = false;
        break;
      }
    if (same) return idx;
  }
  return std::nullopt;
}

std::size_t SubgroupOrbit::add(const PermGroup& k, std::size_t parent, std::size_t gen) {
  const std::size_t idx = keys_.size();
  if (idx >= cap_) throw CapExceeded("subgroup conjugation orbit exceeds the cap of " + std::to_string(cap_));
  Permutation t = idx == 0 ? Permutation(acting_.degree()) : transversals_.at(parent) * acting_.generators()[gen];
  transversals_.insert(t);
  keys_.push_back(k.key());
  by_key_[k.key()].push_back(static_cast<std::uint32_t>(idx));
  return idx;
}

bool SubgroupOrbit::step() {
  if (head_ == keys_.size()) return false;
  const auto& gens = acting_.generators();
  const Permutation t = transversals_.at(head_);
  for (std::size_t s = 0; s < gens.size(); ++s) {
    const PermGroup k = subgroup_.conjugate(t * gens[s]);
    std::size_t idx;
    if (auto found = find(k)) {
      idx = *found;
    } else {
      idx = add(k, head_, s);
    }
    images_.push_back(static_cast<std::uint32_t>(idx));
  }
  ++head_;
  return true;
}

std::optional<std::size_t> SubgroupOrbit::locate(const PermGroup& k) {
  if (k.degree() != subgroup_.degree() || k.order() != subgroup_.order()) return std::nullopt;
  while (true) {
    if (auto idx = find(k)) return idx;
    if (!step()) return std::nullopt;
  }
}

void SubgroupOrbit::expand_all() {
  while (step()) {
  }
}

Permutation SubgroupOrbit::transversal(std::size_t i) const { return transversals_.at(i); }

PermGroup SubgroupOrbit::member(std::size_t i) const { return subgroup_.conjugate(transversals_.at(i)); }

PermGroup SubgroupOrbit::stabilizer() {
  expand_all();
  const std::size_t ngens = acting_.generators().size();
  return stabilizer_from_orbit(
      acting_, keys_.size(), [this](std::size_t k) { return transversal(k); },
      [this, ngens](std::size_t k, std::size_t s) { return static_cast<std::size_t>(images_[k * ngens + s]); });
}

// ---------------------------------------------------------------------------
// CosetOrbit

CosetOrbit::CosetOrbit(PermGroup acting, PermGroup sub, std::size_t cap)
    : acting_(std::move(acting)), sub_(std::move(sub)), reps_(acting_.degree()), ngens_(acting_.generators().size()) {
  if (acting_.degree() != sub_.degree()) throw DegreeMismatch("coset orbit: degree mismatch");
  const StabChain& chain = sub_.chain();
  reps_.insert(chain.min_coset_rep(Permutation(acting_.degree())));
  tree_.add_root();
  const auto& gens = acting_.generators();
  for (std::size_t k = 0; k < reps_.size(); ++k) {
    const Permutation r = reps_.at(k);
    for (std::size_t s = 0; s < gens.size(); ++s) {
      auto [idx, fresh] = reps_.insert(chain.min_coset_rep(r * gens[s]));
      if (fresh) {
        if (reps_.size() > cap)
          throw CapExceeded("coset enumeration exceeds the index cap of " + std::to_string(cap));
        tree_.add(k, s);
      }
      images_.push_back(static_cast<std::uint32_t>(idx));
    }
  }
}

std::optional<std::size_t> CosetOrbit::locate(const Permutation& g) const {
  return reps_.find(sub_.chain().min_coset_rep(g));
}

Permutation CosetOrbit::transversal(std::size_t i) const {
  return tree_.word(i, acting_.generators(), acting_.degree());
}

PermGroup CosetOrbit::stabilizer() {
  return stabilizer_from_orbit(
      acting_, reps_.size(), [this](std::size_t k) { return transversal(k); },
      [this](std::size_t k, std::size_t s) { return image(k, s); });
}

}  // namespace ivl
