#pragma once

#include <optional>
#include <string>
#include <vector>

#include "transknot/braid.hpp"

namespace transknot {

// A transverse link presented as the closure of a braid around the z-axis.
struct TransverseBraid {
  BraidWord braid;
  std::optional<std::string> label;

  bool operator==(const TransverseBraid&) const = default;
};

// Bennequin's formula e(beta) - n. For links this is the total self-linking
// number without per-component corrections.
long long self_linking(const BraidWord& braid);
inline long long self_linking(const TransverseBraid& k) { return self_linking(k.braid); }

struct EquivalenceBudget {
  SearchBudget search;
  // Extra strands allowed by positive stabilization during the search.
  int extra_strands = 3;
};

struct EquivalenceWitness {
  std::vector<Move> from_a;
  std::vector<Move> from_b;
  BraidWord common;  // freely reduced word both sides reach
};

enum class EquivalenceOutcome {
  equivalent,
  distinct_self_linking,  // sl differs: certified inequivalent
  distinct_components,    // component count differs: certified inequivalent
  budget_exhausted,
};

struct EquivalenceResult {
  EquivalenceOutcome outcome = EquivalenceOutcome::budget_exhausted;
  std::optional<EquivalenceWitness> witness;
  std::size_t states_explored = 0;
  int strand_cap = 0;
  // set when the compared closures are links
  bool multi_component = false;
};

// Searches both braids under conjugation, cyclic shift, free reduction and
// positive Markov (de)stabilization for a common freely reduced word.
// A budget_exhausted outcome is not a proof of inequivalence.
EquivalenceResult transversely_equivalent(const TransverseBraid& a, const TransverseBraid& b,
                                          const EquivalenceBudget& budget = {});

}  // namespace transknot
