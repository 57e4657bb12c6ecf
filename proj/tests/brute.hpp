#pragma once

// Brute-force references for the test suites.  Everything here works on explicit element
// lists and deliberately avoids the stabilizer-chain machinery it is used to check.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "ivl/perm_group.hpp"
#include "ivl/permutation.hpp"

namespace brute {

using ivl::Permutation;
using ivl::PermGroup;
using ivl::Point;

inline Permutation P(const std::string& cycles, std::size_t degree) { return ivl::parse_permutation(cycles, degree); }

inline PermGroup group(std::size_t degree, std::initializer_list<const char*> gens) {
  std::vector<Permutation> g;
  for (const char* c : gens) g.push_back(P(c, degree));
  return PermGroup(degree, std::move(g));
}

/// Breadth-first closure of a generator list.
inline std::vector<Permutation> closure(std::size_t degree, const std::vector<Permutation>& gens) {
  std::set<Permutation> seen{Permutation(degree)};
  std::vector<Permutation> out{Permutation(degree)};
  for (std::size_t k = 0; k < out.size(); ++k)
    for (const auto& g : gens) {
      Permutation h = out[k] * g;
      if (seen.insert(h).second) out.push_back(h);
    }
  return out;
}

inline std::vector<Permutation> elements(const PermGroup& g) { return closure(g.degree(), g.generators()); }

inline std::set<Permutation> element_set(const PermGroup& g) {
  auto e = elements(g);
  return {e.begin(), e.end()};
}

inline std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<Point> img(n);
  std::iota(img.begin(), img.end(), Point{0});
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation(img));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

/// Conjugacy classes by direct partition of the element list.
inline std::vector<std::set<Permutation>> classes(const PermGroup& g) {
  auto elts = elements(g);
  std::set<Permutation> done;
  std::vector<std::set<Permutation>> out;
  for (const auto& x : elts) {
    if (done.count(x)) continue;
    std::set<Permutation> cls;
    for (const auto& h : elts) cls.insert(ivl::conj_elem(x, h));
    done.insert(cls.begin(), cls.end());
    out.push_back(std::move(cls));
  }
  return out;
}

inline std::set<Permutation> conjugate_set(const std::set<Permutation>& s, const Permutation& g) {
  std::set<Permutation> out;
  for (const auto& x : s) out.insert(ivl::conj_elem(x, g));
  return out;
}

/// Subgroups of g containing u as element sets, by closing u under adjoining single
/// elements.
inline std::set<std::set<Permutation>> overgroups(const PermGroup& g, const PermGroup& u) {
  const std::size_t n = g.degree();
  auto elts = elements(g);
  std::set<std::set<Permutation>> subs;
  std::vector<std::pair<std::set<Permutation>, std::vector<Permutation>>> work;
  auto base = element_set(u);
  subs.insert(base);
  work.push_back({base, u.generators()});
  for (std::size_t k = 0; k < work.size(); ++k)
    for (const auto& x : elts) {
      if (work[k].first.count(x)) continue;
      auto gens = work[k].second;
      gens.push_back(x);
      auto c = closure(n, gens);
      std::set<Permutation> s(c.begin(), c.end());
      if (subs.insert(s).second) work.push_back({std::move(s), std::move(gens)});
    }
  return subs;
}

inline std::set<std::set<Permutation>> all_subgroups(const PermGroup& g) {
  return overgroups(g, PermGroup::trivial(g.degree()));
}

inline std::set<Permutation> normalizer(const PermGroup& g, const std::set<Permutation>& h) {
  std::set<Permutation> out;
  for (const auto& x : elements(g))
    if (conjugate_set(h, x) == h) out.insert(x);
  return out;
}

inline std::set<Permutation> centralizer(const PermGroup& g, const Permutation& x) {
  std::set<Permutation> out;
  for (const auto& y : elements(g))
    if (x * y == y * x) out.insert(y);
  return out;
}

inline std::set<Permutation> as_set(const PermGroup& g) { return element_set(g); }

}  // namespace brute
