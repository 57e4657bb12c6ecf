#include "ivl/intermediate.hpp"

#include <algorithm>
#include <memory>
#include <queue>
#include <set>
#include <unordered_map>

#include "ivl/orbits.hpp"

namespace ivl {

namespace {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

// Maximal classes per conjugacy class of the top group: every conjugate of a processed T
// is registered, and a later conjugate T^h receives the conjugated representatives.
class MaximalCache {
 public:
  MaximalCache(PermGroup top, const IntervalOptions& opts, IntervalStats& stats)
      : top_(std::move(top)), opts_(opts), stats_(stats) {}

  MaximalClasses get(const PermGroup& t) {
    if (auto it = by_key_.find(t.key()); it != by_key_.end()) {
      for (std::size_t e : it->second) {
        const Entry& entry = entries_[e];
        if (!entry.orbit) {
          if (entry.t == t) {
            ++stats_.cache_hits;
            return entry.maximals;
          }
          continue;
        }
        auto idx = entry.orbit->locate(t);
        if (!idx) continue;
        if (*idx == 0) {
          ++stats_.cache_hits;
          return entry.maximals;
        }
        ++stats_.cache_transfers;
        const Permutation h = entry.orbit->transversal(*idx);
        MaximalClasses out{t, {}, entry.maximals.source};
        for (const auto& w : entry.maximals.reps) out.reps.push_back(w.conjugate(h));
        return out;
      }
    }
    Entry entry{t, fetch(t), nullptr};
    const std::size_t id = entries_.size();
    try {
      auto orbit = std::make_shared<SubgroupOrbit>(top_, t, opts_.caps.subgroup_orbit);
      orbit->expand_all();
      for (std::size_t i = 0; i < orbit->size(); ++i) by_key_[orbit->key(i)].push_back(id);
      entry.orbit = std::move(orbit);
    } catch (const CapExceeded&) {
      by_key_[t.key()].push_back(id);
    }
    entries_.push_back(std::move(entry));
    return entries_.back().maximals;
  }

 private:
  struct Entry {
    PermGroup t;
    MaximalClasses maximals;
    std::shared_ptr<SubgroupOrbit> orbit;
  };

  MaximalClasses fetch(const PermGroup& t) {
    MaximalClasses m = maximal_classes(t, opts_);
    if (m.source == MaximalSource::datafile)
      ++stats_.datafile_lookups;
    else
      ++stats_.oracle_lookups;
    return m;
  }

  PermGroup top_;
  const IntervalOptions& opts_;
  IntervalStats& stats_;
  std::vector<Entry> entries_;
  std::unordered_map<SubgroupKey, std::vector<std::size_t>, SubgroupKeyHash> by_key_;
};

MaximalClasses candidate_classes(MaximalCache& cache, const PermGroup& t, const PermGroup& u,
                                 const IntervalOptions& opts) {
  MaximalClasses m = cache.get(t);
  MaximalClasses out{t, {}, m.source};
  for (auto& w : m.reps)
    if (w.order() % u.order() == 0) out.reps.push_back(std::move(w));
  if (opts.orbit_filter) out = orbit_length_filter(out, u);
  return out;
}

}  // namespace

MaximalClasses maximal_classes(const PermGroup& t, const IntervalOptions& opts) {
  if (opts.maximal_data && opts.maximal_data->has(t)) return opts.maximal_data->lookup(t);
  if (opts.use_oracle && t.order() <= opts.caps.oracle_order) return maximal_subgroups_oracle(t, opts.caps);
  throw MaximalUnavailable("no maximal subgroups available for a group of order " + std::to_string(t.order()));
}

MaximalClasses orbit_length_filter(const MaximalClasses& reps, const PermGroup& u) {
  MaximalClasses out{reps.parent, {}, reps.source};
  const auto ul = u.orbit_lengths();
  for (const auto& w : reps.reps)
    if (orbit_lengths_refine(ul, w.orbit_lengths())) out.reps.push_back(w);
  return out;
}

LatticeInterval intermediate_subgroups(const PermGroup& g, const PermGroup& u, const IntervalOptions& opts,
                                       IntervalStats* stats) {
  if (!u.is_subgroup_of(g)) throw NotSubgroup("intermediate subgroups: U is not a subgroup of G");
  if (u.order() == g.order()) return make_interval(u, g, {});
  IntervalStats local;
  IntervalStats& st = stats ? *stats : local;
  const SearchOptions search_opts{opts.caps, opts.fallback};
  constexpr std::size_t kBottom = SIZE_MAX;

  SubgroupIndex found;
  found.insert(g);
  std::set<std::pair<std::size_t, std::size_t>> edges;  // (found id or kBottom, found id)
  using Item = std::pair<std::uint64_t, std::size_t>;
  auto later = [](const Item& a, const Item& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second > b.second;
  };
  std::priority_queue<Item, std::vector<Item>, decltype(later)> work(later);
  work.emplace(g.order(), 0);
  MaximalCache cache(g, opts, st);

  while (!work.empty()) {
    const std::size_t t_id = work.top().second;
    work.pop();
    const PermGroup t = found[t_id];
    ++st.processed;
    if (is_prime(t.order() / u.order())) {
      ++st.prime_index;
      edges.emplace(kBottom, t_id);
      continue;
    }
    bool any = false;
    for (const auto& w : candidate_classes(cache, t, u, opts).reps) {
      ++st.embedding_calls;
      for (const auto& [x, h] : embedding_conjugates(t, w, u, search_opts)) {
        any = true;
        auto [id, fresh] = found.insert(x);
        if (fresh) work.emplace(x.order(), id);
        edges.emplace(id, t_id);
      }
    }
    if (!any) edges.emplace(kBottom, t_id);
  }

  // final numbering: 0 = U, 1..N sorted by (order, key), N+1 = G
  std::vector<std::size_t> ids;
  for (std::size_t i = 1; i < found.size(); ++i) ids.push_back(i);
  std::stable_sort(ids.begin(), ids.end(), [&](std::size_t a, std::size_t b) { return found[a].key() < found[b].key(); });
  std::vector<std::size_t> position(found.size(), 0);
  LatticeInterval out{u, g, {}, {}};
  for (std::size_t k = 0; k < ids.size(); ++k) {
    position[ids[k]] = k + 1;
    out.subgroups.push_back(found[ids[k]]);
  }
  position[0] = ids.size() + 1;
  for (const auto& [a, b] : edges) out.inclusions.emplace_back(a == kBottom ? 0 : position[a], position[b]);
  std::sort(out.inclusions.begin(), out.inclusions.end());
  return out;
}

std::optional<PermGroup> first_intermediate(const PermGroup& g, const PermGroup& u, const IntervalOptions& opts) {
  if (!u.is_subgroup_of(g)) throw NotSubgroup("intermediate subgroups: U is not a subgroup of G");
  if (u.order() == g.order() || is_prime(g.order() / u.order())) return std::nullopt;
  IntervalStats st;
  MaximalCache cache(g, opts, st);
  const SearchOptions search_opts{opts.caps, opts.fallback};
  for (const auto& w : candidate_classes(cache, g, u, opts).reps) {
    auto v = embedding_conjugates(g, w, u, search_opts);
    if (!v.empty()) return v.front().first;
  }
  return std::nullopt;
}

}  // namespace ivl
