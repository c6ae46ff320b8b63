#pragma once

// Breadth-first exploration of braid words under a configurable move set.
// Every stored state is freely reduced; states are deduplicated on
// (strands, letters).

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include "transknot/braid.hpp"

namespace transknot::detail {

struct MoveSet {
  bool braid_relations = false;
  // Positive Markov stabilization allowed while strands < this cap; 0 disables.
  int stabilize_strand_cap = 0;
  bool positive_destabilize = false;
};

// Free-reduce-at steps that take `word` to its free reduction.
std::vector<Move> reduction_steps(const BraidWord& word);

class MoveSearch {
 public:
  struct Node {
    BraidWord word;
    std::ptrdiff_t parent = -1;
    std::vector<Move> steps;  // from parent (or from the raw start for the root)
    int depth = 0;
  };

  MoveSearch(const BraidWord& start, MoveSet moves, std::size_t state_cap);

  // Expands every node of the current frontier. Returns indices of nodes
  // added; stops early once the state cap is reached.
  std::vector<std::size_t> expand_layer();

  bool exhausted() const { return frontier_.empty(); }
  bool capped() const { return nodes_.size() >= state_cap_; }
  int depth() const { return depth_; }
  std::size_t size() const { return nodes_.size(); }
  const Node& node(std::size_t i) const { return nodes_[i]; }
  std::ptrdiff_t find(const BraidWord& word) const;

  // Steps from the raw start word to node i.
  std::vector<Move> path_to(std::size_t i) const;

 private:
  bool add(BraidWord raw, std::vector<Move> steps, std::ptrdiff_t parent, int depth,
           std::vector<std::size_t>& added);
  std::vector<std::pair<Move, BraidWord>> successors(const BraidWord& word) const;

  MoveSet moves_;
  std::size_t state_cap_;
  std::vector<Node> nodes_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::size_t> frontier_;
  int depth_ = 0;
};

}  // namespace transknot::detail
