#include "transknot/transverse.hpp"

#include <algorithm>

#include "move_search.hpp"

namespace transknot {

long long self_linking(const BraidWord& braid) { return exponent_sum(braid) - braid.strands(); }

EquivalenceResult transversely_equivalent(const TransverseBraid& a, const TransverseBraid& b,
                                          const EquivalenceBudget& budget) {
  EquivalenceResult result;
  const int components_a = closure_components(a.braid);
  const int components_b = closure_components(b.braid);
  result.multi_component = components_a > 1 || components_b > 1;
  result.strand_cap = std::max(a.braid.strands(), b.braid.strands()) + budget.extra_strands;

  if (components_a != components_b) {
    result.outcome = EquivalenceOutcome::distinct_components;
    return result;
  }
  if (self_linking(a) != self_linking(b)) {
    result.outcome = EquivalenceOutcome::distinct_self_linking;
    return result;
  }

  detail::MoveSet moves;
  moves.braid_relations = budget.search.braid_relations;
  moves.stabilize_strand_cap = result.strand_cap;
  moves.positive_destabilize = true;

  // Each side gets half of the state budget.
  const std::size_t cap = std::max<std::size_t>(budget.search.max_states / 2, 1);
  detail::MoveSearch side_a(a.braid, moves, cap);
  detail::MoveSearch side_b(b.braid, moves, cap);

  auto meet = [&](detail::MoveSearch& mine, std::size_t i, detail::MoveSearch& other,
                  bool mine_is_a) -> bool {
    const std::ptrdiff_t j = other.find(mine.node(i).word);
    if (j < 0) return false;
    EquivalenceWitness w;
    w.common = mine.node(i).word;
    auto p = mine.path_to(i);
    auto q = other.path_to(static_cast<std::size_t>(j));
    w.from_a = mine_is_a ? std::move(p) : std::move(q);
    w.from_b = mine_is_a ? std::move(q) : std::move(p);
    result.witness = std::move(w);
    result.outcome = EquivalenceOutcome::equivalent;
    return true;
  };

  auto finish = [&] { result.states_explored = side_a.size() + side_b.size(); };

  if (meet(side_a, 0, side_b, true)) return finish(), result;

  for (;;) {
    const bool a_can = side_a.depth() < budget.search.max_depth && !side_a.exhausted();
    const bool b_can = side_b.depth() < budget.search.max_depth && !side_b.exhausted();
    if (!a_can && !b_can) break;
    if (a_can) {
      for (std::size_t i : side_a.expand_layer()) {
        if (meet(side_a, i, side_b, true)) return finish(), result;
      }
    }
    if (b_can) {
      for (std::size_t i : side_b.expand_layer()) {
        if (meet(side_b, i, side_a, false)) return finish(), result;
      }
    }
  }
  finish();
  return result;
}

}  // namespace transknot
