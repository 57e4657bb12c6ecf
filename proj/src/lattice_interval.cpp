#include "ivl/lattice_interval.hpp"

#include <algorithm>

#include "ivl/config.hpp"

namespace ivl {

namespace {

bool proper_subgroup(const PermGroup& a, const PermGroup& b) {
  return a.order() < b.order() && b.order() % a.order() == 0 && a.is_subgroup_of(b);
}

}  // namespace

const PermGroup& LatticeInterval::at(std::size_t i) const {
  if (i == 0) return bottom;
  if (i == top_index()) return top;
  if (i > top_index()) throw Error("interval index out of range");
  return subgroups[i - 1];
}

void sort_subgroups(std::vector<PermGroup>& subs) {
  std::stable_sort(subs.begin(), subs.end(),
                   [](const PermGroup& a, const PermGroup& b) { return a.key() < b.key(); });
  std::vector<PermGroup> out;
  out.reserve(subs.size());
  for (std::size_t i = 0; i < subs.size();) {
    std::size_t j = i;
    while (j < subs.size() && subs[j].key() == subs[i].key()) ++j;
    // equal keys are almost always equal groups; keep one of each group
    const std::size_t first = out.size();
    for (std::size_t k = i; k < j; ++k) {
      bool dup = false;
      for (std::size_t m = first; m < out.size() && !dup; ++m) dup = out[m] == subs[k];
      if (!dup) out.push_back(subs[k]);
    }
    i = j;
  }
  subs = std::move(out);
}

std::vector<Edge> containment_edges(const PermGroup& bottom, const PermGroup& top, const std::vector<PermGroup>& subs) {
  const std::size_t n = subs.size() + 2;
  auto node = [&](std::size_t i) -> const PermGroup& {
    if (i == 0) return bottom;
    if (i == n - 1) return top;
    return subs[i - 1];
  };
  // below[j] holds every i strictly contained in j; the nodes are sorted by order, so
  // only smaller indices can lie below
  std::vector<std::vector<bool>> below(n, std::vector<bool>(n, false));
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      if (i == 0 || j == n - 1) {
        below[j][i] = true;
        continue;
      }
      below[j][i] = proper_subgroup(node(i), node(j));
    }
  std::vector<Edge> edges;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      if (!below[j][i]) continue;
      bool maximal = true;
      for (std::size_t k = i + 1; k < j && maximal; ++k)
        if (below[j][k] && below[k][i]) maximal = false;
      if (maximal) edges.emplace_back(i, j);
    }
  std::sort(edges.begin(), edges.end());
  return edges;
}

LatticeInterval make_interval(const PermGroup& bottom, const PermGroup& top, std::vector<PermGroup> subs) {
  LatticeInterval out{bottom, top, {}, {}};
  if (bottom.order() == top.order()) return out;
  sort_subgroups(subs);
  out.subgroups = std::move(subs);
  out.inclusions = containment_edges(bottom, top, out.subgroups);
  return out;
}

std::optional<std::size_t> index_of(const LatticeInterval& interval, const PermGroup& g) {
  if (g == interval.bottom) return 0;
  if (g == interval.top) return interval.top_index();
  auto it = std::lower_bound(interval.subgroups.begin(), interval.subgroups.end(), g.key(),
                             [](const PermGroup& a, const SubgroupKey& k) { return a.key() < k; });
  for (; it != interval.subgroups.end() && it->key() == g.key(); ++it)
    if (*it == g) return static_cast<std::size_t>(it - interval.subgroups.begin()) + 1;
  return std::nullopt;
}

std::optional<std::string> compare_intervals(const LatticeInterval& a, const LatticeInterval& b) {
  if (!(a.bottom == b.bottom) || !(a.top == b.top)) return "different bottom or top";
  if (a.subgroups.size() != b.subgroups.size())
    return "subgroup counts differ: " + std::to_string(a.subgroups.size()) + " vs " +
           std::to_string(b.subgroups.size());
  for (std::size_t i = 0; i < a.subgroups.size(); ++i)
    if (!(a.subgroups[i] == b.subgroups[i]))
      return "subgroup " + std::to_string(i + 1) + " differs (orders " + std::to_string(a.subgroups[i].order()) +
             " and " + std::to_string(b.subgroups[i].order()) + ")";
  if (a.inclusions != b.inclusions) {
    for (std::size_t i = 0; i < std::max(a.inclusions.size(), b.inclusions.size()); ++i) {
      if (i >= a.inclusions.size() || i >= b.inclusions.size() || a.inclusions[i] != b.inclusions[i]) {
        const Edge e = i < a.inclusions.size() ? a.inclusions[i] : b.inclusions[i];
        return "inclusion lists differ near [" + std::to_string(e.first) + "," + std::to_string(e.second) + "]";
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_interval(const LatticeInterval& in) {
  for (std::size_t i = 0; i < in.subgroups.size(); ++i) {
    const auto& v = in.subgroups[i];
    if (!proper_subgroup(in.bottom, v) || !proper_subgroup(v, in.top))
      return "subgroup " + std::to_string(i + 1) + " is not strictly between bottom and top";
    if (i > 0 && !(in.subgroups[i - 1].key() < v.key())) return "subgroups not sorted";
  }
  for (const auto& [i, j] : in.inclusions) {
    if (i >= j || j > in.top_index()) return "bad edge";
    if (!proper_subgroup(in.at(i), in.at(j)))
      return "edge [" + std::to_string(i) + "," + std::to_string(j) + "] is not a proper inclusion";
    for (std::size_t k = i + 1; k < j; ++k)
      if (proper_subgroup(in.at(i), in.at(k)) && proper_subgroup(in.at(k), in.at(j)))
        return "edge [" + std::to_string(i) + "," + std::to_string(j) + "] has " + std::to_string(k) + " between";
  }
  return std::nullopt;
}

}  // namespace ivl
