#include "ivl/double_cosets.hpp"

#include "ivl/orbits.hpp"

namespace ivl {

DoubleCosetDecomp double_cosets(const PermGroup& d, const PermGroup& g, const PermGroup& b, const Caps& caps) {
  if (!d.is_subgroup_of(g) || !b.is_subgroup_of(g)) throw NotSubgroup("double cosets: not a subgroup");
  DoubleCosetDecomp out{d, b, g, {}};
  const std::size_t n = g.degree();
  if (d.order() == g.order() || b.order() == g.order()) {
    out.reps.push_back({Permutation(n), g.order()});
    return out;
  }
  if (g.order() / d.order() > caps.coset_index)
    throw CapExceeded("double cosets: index " + std::to_string(g.order() / d.order()) + " exceeds the index cap of " +
                      std::to_string(caps.coset_index));
  CosetOrbit cosets(g, d, caps.coset_index);
  const std::size_t m = cosets.size();

  // action of the generators of B on the coset indices
  std::vector<std::vector<std::uint32_t>> act;
  for (const auto& s : b.generators()) {
    std::vector<std::uint32_t> img(m);
    for (std::size_t i = 0; i < m; ++i) img[i] = static_cast<std::uint32_t>(*cosets.locate(cosets.rep(i) * s));
    act.push_back(std::move(img));
  }
  std::vector<bool> seen(m, false);
  std::vector<std::uint32_t> queue;
  for (std::size_t start = 0; start < m; ++start) {
    if (seen[start]) continue;
    seen[start] = true;
    queue.assign(1, static_cast<std::uint32_t>(start));
    for (std::size_t k = 0; k < queue.size(); ++k)
      for (const auto& img : act) {
        const auto q = img[queue[k]];
        if (!seen[q]) {
          seen[q] = true;
          queue.push_back(q);
        }
      }
    out.reps.push_back({cosets.transversal(start), checked_mul(queue.size(), d.order())});
  }
  return out;
}

std::vector<Permutation> inverse_reps(const DoubleCosetDecomp& dc) {
  std::vector<Permutation> out;
  out.reserve(dc.reps.size());
  for (const auto& r : dc.reps) out.push_back(r.representative.inverse());
  return out;
}

}  // namespace ivl
