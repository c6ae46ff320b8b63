// Witness replay. Deliberately written against raw letter vectors so that it
// shares nothing with the search and the BraidWord move helpers.

#include <cstdlib>
#include <string>
#include <vector>

#include "transknot/braid.hpp"

namespace transknot {

namespace {

struct Word {
  int n;
  std::vector<int> w;
};

bool in_range(const Word& s, int k) { return k != 0 && std::abs(k) <= s.n - 1; }

// Returns an error message, empty on success.
std::string step(Word& s, const Move& m) {
  auto& w = s.w;
  const int a = m.argument;
  const auto at = static_cast<std::size_t>(a);
  switch (m.kind) {
    case MoveKind::conjugate:
      if (!in_range(s, a)) return "conjugating letter out of range";
      w.insert(w.begin(), a);
      w.push_back(-a);
      return {};
    case MoveKind::cyclic_shift:
      if (!w.empty()) {
        const int first = w.front();
        w.erase(w.begin());
        w.push_back(first);
      }
      return {};
    case MoveKind::free_reduce_at:
      if (a < 0 || at + 1 >= w.size()) return "position out of range";
      if (w[at] + w[at + 1] != 0) return "letters do not cancel";
      w.erase(w.begin() + a, w.begin() + a + 2);
      return {};
    case MoveKind::positive_stabilize:
      w.push_back(s.n);
      ++s.n;
      return {};
    case MoveKind::positive_destabilize_at: {
      if (a < 0 || at >= w.size()) return "position out of range";
      if (s.n < 2 || w[at] != s.n - 1) return "not a positive top generator";
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (i != at && std::abs(w[i]) == s.n - 1) return "top generator occurs more than once";
      }
      w.erase(w.begin() + a);
      --s.n;
      return {};
    }
    case MoveKind::far_commute_at:
      if (a < 0 || at + 1 >= w.size()) return "position out of range";
      if (std::abs(std::abs(w[at]) - std::abs(w[at + 1])) < 2) return "generators not distant";
      std::swap(w[at], w[at + 1]);
      return {};
    case MoveKind::braid_relation_at: {
      if (a < 0 || at + 2 >= w.size()) return "position out of range";
      const int x = w[at], y = w[at + 1];
      if (w[at + 2] != x || (x > 0) != (y > 0) || std::abs(std::abs(x) - std::abs(y)) != 1) {
        return "not a braid relation site";
      }
      w[at] = y;
      w[at + 1] = x;
      w[at + 2] = y;
      return {};
    }
  }
  return "unknown move";
}

}  // namespace

ReplayResult validate_witness(const BraidWord& source, const MoveWitness& witness) {
  ReplayResult result;
  Word s{source.strands(), source.letters()};
  for (std::size_t i = 0; i < witness.steps.size(); ++i) {
    const std::string err = step(s, witness.steps[i]);
    if (!err.empty()) {
      result.message = "step " + std::to_string(i + 1) + " (" + to_string(witness.steps[i]) + "): " + err;
      return result;
    }
  }
  result.final_word = BraidWord(s.n, s.w);

  const int top = s.n - 1;
  if (top < 1) {
    result.message = "final braid has a single strand";
    return result;
  }
  int count = 0;
  for (int k : s.w) count += (std::abs(k) == top) ? 1 : 0;
  if (count != 1) {
    result.message = "generator " + std::to_string(top) + " occurs " + std::to_string(count) +
                     " times after replay (expected once)";
    return result;
  }
  if (witness.terminal >= s.w.size() || s.w[witness.terminal] != -top) {
    result.message = "terminal position does not hold letter " + std::to_string(-top);
    return result;
  }
  // w = u . sigma_top^-1 . v  ~  v . u . sigma_top^-1 ; destabilize to v . u
  std::vector<int> rest(s.w.begin() + static_cast<std::ptrdiff_t>(witness.terminal) + 1, s.w.end());
  rest.insert(rest.end(), s.w.begin(), s.w.begin() + static_cast<std::ptrdiff_t>(witness.terminal));
  result.destabilized = BraidWord(top, std::move(rest));
  result.ok = true;
  result.message = "ok";
  return result;
}

}  // namespace transknot
