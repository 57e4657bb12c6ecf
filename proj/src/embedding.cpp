#include "ivl/embedding.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>

#include "ivl/double_cosets.hpp"

namespace ivl {

namespace {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

// Classes of the table whose representative lies in the G-class enumerated by `orbit`.
std::vector<std::size_t> classes_meeting(const ConjClassTable& table, ElementOrbit& orbit, const Permutation& x) {
  std::vector<std::size_t> out;
  const auto type = x.cycle_type();
  for (std::size_t c = 0; c < table.classes().size(); ++c) {
    const auto& y = table.classes()[c].representative;
    if (y.cycle_type() != type) continue;
    if (orbit.locate(y)) out.push_back(c);
  }
  return out;
}

}  // namespace

SearchContext make_search_context(const PermGroup& g, const PermGroup& a, const PermGroup& l, const PermGroup& b,
                                  const SearchOptions& options) {
  SearchContext ctx{a, l, g, b, {}, {}, {}, {}, {}, options};
  ctx.table = classes_under(a, l, options.caps);
  if (b.is_trivial()) return ctx;

  // candidates: class representatives of B, which generate B since no proper subgroup
  // meets every class; B's own generators when the table is out of reach
  std::vector<Permutation> candidates;
  if (b.order() <= options.caps.class_elements) {
    for (const auto& c : conjugacy_classes(b, options.caps)->classes())
      if (!c.representative.is_identity()) candidates.push_back(c.representative);
  } else {
    candidates = b.generators();
  }

  struct Scored {
    std::size_t score;
    bool prime;
    Permutation x;
    std::shared_ptr<ElementOrbit> orbit;
    std::vector<std::size_t> classes;
  };
  std::vector<Scored> scored;
  for (const auto& x : candidates) {
    auto orbit = std::make_shared<ElementOrbit>(g, x, options.caps.class_elements);
    auto classes = classes_meeting(*ctx.table, *orbit, x);
    scored.push_back({classes.size(), is_prime(x.order()), x, orbit, std::move(classes)});
  }
  std::stable_sort(scored.begin(), scored.end(), [](const Scored& p, const Scored& q) {
    if (p.score != q.score) return p.score < q.score;
    if (p.prime != q.prime) return p.prime;
    return p.x < q.x;
  });

  ChainBuilder generated(g.degree(), b.order());
  for (auto& s : scored) {
    if (generated.order() == b.order()) break;
    if (!generated.add_generator(s.x)) continue;
    ctx.gens.push_back(s.x);
    ctx.class_lists.push_back(std::move(s.classes));
    ctx.ambient_orbits.push_back(s.orbit);
  }
  if (generated.order() != b.order()) throw Error("search: chosen generators do not generate the subgroup");
  return ctx;
}

std::vector<Permutation> search_smallC_fallback(const SearchContext& ctx, const SearchFrame& frame,
                                                ElementOrbit& orbit, const PermGroup& d) {
  (void)frame;
  orbit.expand_all();
  const std::size_t m = orbit.size();
  std::vector<std::size_t> inside;
  std::vector<std::int64_t> slot(m, -1);
  for (std::size_t e = 0; e < m; ++e)
    if (ctx.target.contains(orbit.element(e))) {
      slot[e] = static_cast<std::int64_t>(inside.size());
      inside.push_back(e);
    }
  // D-orbits on the conjugates inside A
  std::vector<bool> seen(inside.size(), false);
  std::vector<Permutation> out;
  std::vector<std::size_t> queue;
  for (std::size_t s = 0; s < inside.size(); ++s) {
    if (seen[s]) continue;
    seen[s] = true;
    out.push_back(orbit.transversal(inside[s]));
    queue.assign(1, s);
    for (std::size_t k = 0; k < queue.size(); ++k) {
      const Permutation y = orbit.element(inside[queue[k]]);
      for (const auto& dg : d.generators()) {
        auto idx = orbit.locate(conj_elem(y, dg));
        if (!idx || slot[*idx] < 0) throw Error("search: D does not preserve the conjugates inside A");
        const auto t = static_cast<std::size_t>(slot[*idx]);
        if (!seen[t]) {
          seen[t] = true;
          queue.push_back(t);
        }
      }
    }
  }
  return out;
}

void search(SearchContext& ctx, const SearchFrame& frame) {
  const std::size_t k = ctx.gens.size();
  const std::size_t i = frame.level;
  const Permutation& g = frame.conjugator;
  if (i >= k) {
    std::vector<Permutation> images;
    for (const auto& b : ctx.gens) {
      images.push_back(conj_elem(b, g));
      if (!ctx.target.contains(images.back())) throw Error("search: stored conjugate is not inside the target");
    }
    ctx.results.emplace_back(ctx.sub.conjugate(g), g);
    return;
  }
  const PermGroup& c = frame.centralizer_sub;
  const Permutation x = conj_elem(ctx.gens[i], g);
  const PermGroup d = intersection(c, ctx.envelope, ctx.options.caps);

  std::shared_ptr<ElementOrbit> orbit;
  if (i == 0 && g.is_identity() && c == ctx.ambient)
    orbit = ctx.ambient_orbits[0];
  else
    orbit = std::make_shared<ElementOrbit>(c, x, ctx.options.caps.class_elements);

  bool use_fallback = ctx.options.fallback == Toggle::on;
  if (ctx.options.fallback == Toggle::automatic) {
    double projected = 0;
    for (std::size_t y : ctx.class_lists[i]) projected += static_cast<double>(ctx.table->classes()[y].size);
    projected /= static_cast<double>(d.order());
    orbit->expand_all();
    use_fallback = projected > static_cast<double>(orbit->size());
  }

  std::vector<Permutation> conjugators;
  if (use_fallback) {
    ++ctx.fallback_steps;
    conjugators = search_smallC_fallback(ctx, frame, *orbit, d);
  } else {
    ++ctx.main_steps;
    for (std::size_t cls : ctx.class_lists[i]) {
      const auto& entry = ctx.table->classes()[cls];
      const auto dc = double_cosets(entry.centralizer, ctx.envelope, d, ctx.options.caps);
      for (const auto& r : dc.reps) {
        const Permutation y = conj_elem(entry.representative, r.representative);
        if (auto idx = orbit->locate(y)) conjugators.push_back(orbit->transversal(*idx));
      }
    }
  }
  if (conjugators.empty()) return;

  // C_C(x^c) = C_C(x)^c for c in C
  std::optional<PermGroup> cx;
  if (i + 1 < k) cx = orbit->stabilizer();
  for (const auto& cc : conjugators) {
    SearchFrame next{cx ? cx->conjugate(cc) : c, i + 1, g * cc};
    search(ctx, next);
  }
}

std::vector<std::pair<PermGroup, Permutation>> embedding_conjugates(const PermGroup& g, const PermGroup& a,
                                                                    const PermGroup& b,
                                                                    const SearchOptions& options) {
  if (!a.is_subgroup_of(g) || !b.is_subgroup_of(g)) throw NotSubgroup("embedding: not a subgroup");
  // conjugates of A of the same order as B could only equal B, which is excluded
  if (a.order() % b.order() != 0 || a.order() == b.order()) return {};

  const PermGroup l = normalizer(g, a, options.caps);
  if (l.order() == g.order()) {
    if (!b.is_subgroup_of(a)) return {};
    return {{a, Permutation(g.degree())}};
  }
  SearchContext ctx = make_search_context(g, a, l, b, options);
  for (const auto& list : ctx.class_lists)
    if (list.empty()) return {};
  search(ctx, SearchFrame{g, 0, Permutation(g.degree())});

  SubgroupIndex seeds;
  std::vector<Permutation> seed_conj;
  for (const auto& [bg, conj] : ctx.results) {
    const Permutation h = conj.inverse();
    if (seeds.insert(a.conjugate(h)).second) seed_conj.push_back(h);
  }

  const PermGroup nb = normalizer(g, b, options.caps);
  SubgroupIndex found;
  std::vector<std::pair<PermGroup, Permutation>> out;
  for (std::size_t s = 0; s < seeds.size(); ++s) {
    if (found.find(seeds[s])) continue;
    SubgroupOrbit orb(nb, seeds[s], options.caps.subgroup_orbit);
    orb.expand_all();
    for (std::size_t m = 0; m < orb.size(); ++m) {
      PermGroup member = m == 0 ? seeds[s] : orb.member(m);
      if (!found.insert(member).second) continue;
      Permutation h = seed_conj[s] * orb.transversal(m);
      for (const auto& x : b.generators())
        if (!member.contains(x)) throw Error("embedding: conjugate does not contain the subgroup");
      out.emplace_back(std::move(member), std::move(h));
    }
  }
  return out;
}

bool orbit_lengths_refine(const std::vector<std::size_t>& u_lengths, const std::vector<std::size_t>& w_lengths) {
  if (std::accumulate(u_lengths.begin(), u_lengths.end(), std::size_t{0}) !=
      std::accumulate(w_lengths.begin(), w_lengths.end(), std::size_t{0}))
    return false;
  // counts of each U-orbit length, largest first
  std::map<std::size_t, std::size_t, std::greater<>> count_map;
  for (std::size_t x : u_lengths) ++count_map[x];
  std::vector<std::size_t> values, counts;
  for (const auto& [v, c] : count_map) {
    values.push_back(v);
    counts.push_back(c);
  }
  std::vector<std::size_t> bins(w_lengths);
  std::sort(bins.begin(), bins.end(), std::greater<>());
  if (!bins.empty() && !values.empty() && values.front() > bins.front()) return false;

  std::set<std::pair<std::size_t, std::vector<std::size_t>>> failed;
  // fill bin `b` with `left` still missing, trying values from index `from` on
  std::function<bool(std::size_t, std::size_t, std::size_t)> fill = [&](std::size_t b, std::size_t left,
                                                                         std::size_t from) -> bool {
    if (left == 0) {
      if (b + 1 == bins.size()) return true;
      auto state = std::make_pair(b + 1, counts);
      if (failed.count(state)) return false;
      if (fill(b + 1, bins[b + 1], 0)) return true;
      failed.insert(std::move(state));
      return false;
    }
    for (std::size_t v = from; v < values.size(); ++v) {
      if (counts[v] == 0 || values[v] > left) continue;
      --counts[v];
      const bool ok = fill(b, left - values[v], v);
      ++counts[v];
      if (ok) return true;
    }
    return false;
  };
  if (bins.empty()) return u_lengths.empty();
  return fill(0, bins[0], 0);
}

}  // namespace ivl
