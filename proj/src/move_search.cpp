#include "move_search.hpp"

#include <algorithm>
#include <cstdlib>
#include <cstring>

namespace transknot::detail {

namespace {

std::string state_key(const BraidWord& word) {
  std::string key(sizeof(int) * (word.size() + 1), '\0');
  const int n = word.strands();
  std::memcpy(key.data(), &n, sizeof(int));
  if (!word.empty()) std::memcpy(key.data() + sizeof(int), word.letters().data(), sizeof(int) * word.size());
  return key;
}

}  // namespace

std::vector<Move> reduction_steps(const BraidWord& word) {
  // The current word is always stack + unread suffix, so a cancellation
  // between the stack top and the next letter sits at stack.size() - 1.
  std::vector<Move> steps;
  std::vector<int> stack;
  for (int k : word.letters()) {
    if (!stack.empty() && stack.back() == -k) {
      steps.push_back({MoveKind::free_reduce_at, static_cast<int>(stack.size() - 1)});
      stack.pop_back();
    } else {
      stack.push_back(k);
    }
  }
  return steps;
}

MoveSearch::MoveSearch(const BraidWord& start, MoveSet moves, std::size_t state_cap)
    : moves_(moves), state_cap_(std::max<std::size_t>(state_cap, 1)) {
  std::vector<std::size_t> added;
  add(start, {}, -1, 0, added);
  frontier_ = std::move(added);
}

bool MoveSearch::add(BraidWord raw, std::vector<Move> steps, std::ptrdiff_t parent, int depth,
                     std::vector<std::size_t>& added) {
  if (nodes_.size() >= state_cap_) return false;
  const std::vector<Move> reduce = reduction_steps(raw);
  BraidWord reduced = free_reduce(raw);
  auto [it, inserted] = index_.try_emplace(state_key(reduced), nodes_.size());
  if (!inserted) return false;
  steps.insert(steps.end(), reduce.begin(), reduce.end());
  nodes_.push_back({std::move(reduced), parent, std::move(steps), depth});
  added.push_back(nodes_.size() - 1);
  return true;
}

std::vector<std::pair<Move, BraidWord>> MoveSearch::successors(const BraidWord& word) const {
  std::vector<std::pair<Move, BraidWord>> out;
  const int n = word.strands();
  const auto& w = word.letters();

  if (!word.empty()) out.emplace_back(Move{MoveKind::cyclic_shift, 0}, cyclic_shift(word));
  for (int g = 1; g < n; ++g) {
    for (int s : {g, -g}) out.emplace_back(Move{MoveKind::conjugate, s}, conjugate(word, s));
  }
  if (moves_.braid_relations) {
    for (std::size_t p = 0; p + 1 < w.size(); ++p) {
      const Move m{MoveKind::far_commute_at, static_cast<int>(p)};
      if (std::abs(std::abs(w[p]) - std::abs(w[p + 1])) >= 2) out.emplace_back(m, apply_move(word, m));
    }
    for (std::size_t p = 0; p + 2 < w.size(); ++p) {
      const int a = w[p], b = w[p + 1];
      if (w[p + 2] == a && (a > 0) == (b > 0) && std::abs(std::abs(a) - std::abs(b)) == 1) {
        const Move m{MoveKind::braid_relation_at, static_cast<int>(p)};
        out.emplace_back(m, apply_move(word, m));
      }
    }
  }
  if (moves_.stabilize_strand_cap > 0 && n < moves_.stabilize_strand_cap) {
    out.emplace_back(Move{MoveKind::positive_stabilize, 0}, positive_markov_stabilize(word));
  }
  if (moves_.positive_destabilize && n >= 2) {
    std::ptrdiff_t site = -1;
    int count = 0;
    for (std::size_t p = 0; p < w.size(); ++p) {
      if (std::abs(w[p]) != n - 1) continue;
      ++count;
      site = static_cast<std::ptrdiff_t>(p);
    }
    if (count == 1 && w[static_cast<std::size_t>(site)] > 0) {
      const Move m{MoveKind::positive_destabilize_at, static_cast<int>(site)};
      out.emplace_back(m, apply_move(word, m));
    }
  }
  return out;
}

std::vector<std::size_t> MoveSearch::expand_layer() {
  std::vector<std::size_t> added;
  std::vector<std::size_t> next;
  ++depth_;
  for (std::size_t i : frontier_) {
    // nodes_ may reallocate inside add(); copy the word first
    const BraidWord word = nodes_[i].word;
    for (auto& [move, raw] : successors(word)) {
      if (capped()) break;
      add(std::move(raw), {move}, static_cast<std::ptrdiff_t>(i), depth_, added);
    }
    if (capped()) break;
  }
  frontier_ = capped() ? std::vector<std::size_t>{} : added;
  return added;
}

std::ptrdiff_t MoveSearch::find(const BraidWord& word) const {
  auto it = index_.find(state_key(word));
  return it == index_.end() ? -1 : static_cast<std::ptrdiff_t>(it->second);
}

std::vector<Move> MoveSearch::path_to(std::size_t i) const {
  std::vector<std::size_t> chain;
  for (std::ptrdiff_t at = static_cast<std::ptrdiff_t>(i); at >= 0; at = nodes_[at].parent) {
    chain.push_back(static_cast<std::size_t>(at));
  }
  std::vector<Move> out;
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    const auto& s = nodes_[*it].steps;
    out.insert(out.end(), s.begin(), s.end());
  }
  return out;
}

}  // namespace transknot::detail
