#include "ivl/interval_block.hpp"

#include "ivl/actions.hpp"

namespace ivl {

LatticeInterval intermediate_by_blocks(const PermGroup& g, const PermGroup& u, const Caps& caps) {
  if (!u.is_subgroup_of(g)) throw NotSubgroup("block method: U is not a subgroup of G");
  if (u.order() == g.order()) return make_interval(u, g, {});
  CosetAction action(g, u, caps.coset_index);
  std::vector<PermGroup> subs;
  for (const auto& sys : all_block_systems(action)) subs.push_back(subgroup_from_block(action, sys));
  const std::size_t systems = subs.size();
  LatticeInterval out = make_interval(u, g, std::move(subs));
  if (out.subgroups.size() != systems) throw Error("block method: distinct block systems gave equal subgroups");
  return out;
}

}  // namespace ivl
