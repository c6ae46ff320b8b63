#include "move_search.hpp"
#include "transknot/braid.hpp"

namespace transknot {

std::optional<MoveWitness> find_destabilization(const BraidWord& word, const SearchBudget& budget) {
  if (word.strands() < 2) return std::nullopt;

  detail::MoveSet moves;
  moves.braid_relations = budget.braid_relations;
  detail::MoveSearch search(word, moves, budget.max_states);

  auto accept = [&](std::size_t i) -> std::optional<MoveWitness> {
    const auto site = negative_stabilization_site(search.node(i).word);
    if (!site) return std::nullopt;
    return MoveWitness{search.path_to(i), *site};
  };

  if (auto w = accept(0)) return w;
  while (search.depth() < budget.max_depth && !search.exhausted()) {
    for (std::size_t i : search.expand_layer()) {
      if (auto w = accept(i)) return w;
    }
  }
  return std::nullopt;
}

}  // namespace transknot
