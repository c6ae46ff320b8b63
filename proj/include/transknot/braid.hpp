#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "transknot/errors.hpp"

namespace transknot {

// Words longer than this are rejected at construction.
inline constexpr std::size_t kMaxBraidLetters = 1'000'000;

class BraidError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A word in the Artin generators of B_n. Letter k > 0 is sigma_k, k < 0 is
// sigma_|k|^-1. Words act left to right.
class BraidWord {
 public:
  BraidWord() = default;  // empty braid on one strand
  BraidWord(int strands, std::vector<int> letters);

  static BraidWord identity(int strands) { return BraidWord(strands, {}); }

  int strands() const noexcept { return strands_; }
  const std::vector<int>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  bool operator==(const BraidWord&) const = default;

 private:
  int strands_ = 1;
  std::vector<int> letters_;
};

// images[i] is the final position (0-based) of the strand starting at i.
struct Permutation {
  std::vector<int> images;

  int size() const noexcept { return static_cast<int>(images.size()); }
  // this followed by other
  Permutation then(const Permutation& other) const;
  int cycle_count() const;
  int sign() const;
  bool operator==(const Permutation&) const = default;
};

BraidWord parse_braid(std::string_view text);
// Parses one word per non-blank, non-comment line.
std::vector<BraidWord> parse_braid_list(std::string_view text);
std::string serialize(const BraidWord& word);

BraidWord compose(const BraidWord& a, const BraidWord& b);
BraidWord inverse(const BraidWord& a);
BraidWord conjugate(const BraidWord& a, int g);
BraidWord free_reduce(const BraidWord& a);
BraidWord cyclic_shift(const BraidWord& a);
long long exponent_sum(const BraidWord& a);
Permutation permutation(const BraidWord& a);
int closure_components(const BraidWord& a);
BraidWord positive_markov_stabilize(const BraidWord& a);
BraidWord negative_braid_stabilize(const BraidWord& a);

// Index of the unique letter of generator index n-1 when it is negative and
// occurs once; nullopt otherwise (including n < 2).
std::optional<std::size_t> negative_stabilization_site(const BraidWord& a);

// ---------------------------------------------------------------------------
// Moves and witnesses

enum class MoveKind : std::uint8_t {
  conjugate,            // g . w . g^-1, argument = g
  cyclic_shift,         // first letter to the end
  free_reduce_at,       // delete letters p, p+1 with w[p] == -w[p+1]
  positive_stabilize,   // append +n on n+1 strands
  positive_destabilize_at,  // delete the only +(n-1) at p, drop a strand
  far_commute_at,       // swap w[p], w[p+1] with ||w[p]| - |w[p+1]|| >= 2
  braid_relation_at,    // a b a -> b a b at p, |a| = |b| +- 1, all one sign
};

struct Move {
  MoveKind kind;
  int argument = 0;  // letter for conjugate, position otherwise

  bool operator==(const Move&) const = default;
};

std::string to_string(const Move& move);
Move parse_move(std::string_view text);

struct MoveWitness {
  std::vector<Move> steps;
  // position of the single -(n-1) letter after replaying steps
  std::size_t terminal = 0;

  bool operator==(const MoveWitness&) const = default;
};

struct SearchBudget {
  int max_depth = 6;
  std::size_t max_states = 50'000;
  bool braid_relations = false;

  bool operator==(const SearchBudget&) const = default;
};

std::string to_string(const SearchBudget& budget);

// Applies one move; throws BraidError when its precondition fails.
BraidWord apply_move(const BraidWord& word, const Move& move);
BraidWord apply_moves(const BraidWord& word, const std::vector<Move>& steps);

// Bounded breadth-first search for a sequence of conjugations, cyclic shifts
// and free reductions bringing `word` into negatively stabilized shape.
// nullopt means the budget ran out, not that no witness exists.
std::optional<MoveWitness> find_destabilization(const BraidWord& word,
                                                const SearchBudget& budget = {});

// Replay check used for certificates. Independent of the search code.
struct ReplayResult {
  bool ok = false;
  std::string message;
  BraidWord final_word;
  BraidWord destabilized;  // final_word with the terminal letter removed
};

ReplayResult validate_witness(const BraidWord& source, const MoveWitness& witness);

}  // namespace transknot
