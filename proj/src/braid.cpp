#include "transknot/braid.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace transknot {

namespace {

void check_letter(int strands, int letter) {
  if (letter == 0) throw BraidError("braid letter must be nonzero");
  if (std::abs(static_cast<long long>(letter)) > strands - 1) {
    throw BraidError("letter " + std::to_string(letter) + " out of range for B" +
                     std::to_string(strands) + " (|k| <= " + std::to_string(strands - 1) + ")");
  }
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v'; }

}  // namespace

BraidWord::BraidWord(int strands, std::vector<int> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 1) throw BraidError("braid must have at least one strand");
  if (letters_.size() > kMaxBraidLetters) {
    throw BraidError("braid word exceeds " + std::to_string(kMaxBraidLetters) + " letters");
  }
  for (int k : letters_) check_letter(strands_, k);
}

Permutation Permutation::then(const Permutation& other) const {
  if (size() != other.size()) throw BraidError("permutation size mismatch");
  Permutation out;
  out.images.resize(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) out.images[i] = other.images[images[i]];
  return out;
}

int Permutation::cycle_count() const {
  std::vector<char> seen(images.size(), 0);
  int cycles = 0;
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (std::size_t j = i; !seen[j]; j = images[j]) seen[j] = 1;
  }
  return cycles;
}

int Permutation::sign() const {
  // (-1)^(n - cycles)
  return ((size() - cycle_count()) % 2 == 0) ? 1 : -1;
}

// ---------------------------------------------------------------------------
// Text format

namespace {

// Parses one word from [begin, end) of `text`; offsets are reported relative
// to the whole text.
BraidWord parse_word_line(std::string_view text, std::size_t begin, std::size_t end) {
  std::size_t i = begin;
  auto skip_ws = [&] {
    while (i < end && is_space(text[i])) ++i;
  };
  skip_ws();

  std::optional<int> declared;
  if (i < end && text[i] == 'B') {
    const std::size_t header_at = i;
    ++i;
    int n = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + end, n);
    if (ec != std::errc() || ptr == text.data() + i) {
      throw ParseError("expected strand count after 'B'", i);
    }
    i = static_cast<std::size_t>(ptr - text.data());
    if (i >= end || text[i] != ':') throw ParseError("expected ':' after braid header", i);
    ++i;
    if (n < 1) throw ParseError("strand count must be positive", header_at);
    declared = n;
  }

  std::vector<int> letters;
  int max_abs = 0;
  for (;;) {
    skip_ws();
    if (i >= end) break;
    const std::size_t at = i;
    int value = 0;
    const char* first = text.data() + i;
    if (*first == '+') ++first;  // from_chars rejects a leading '+'
    auto [ptr, ec] = std::from_chars(first, text.data() + end, value);
    if (ec == std::errc::result_out_of_range) throw ParseError("letter out of range", at);
    if (ec != std::errc() || ptr == first) throw ParseError("expected integer letter", at);
    i = static_cast<std::size_t>(ptr - text.data());
    if (i < end && !is_space(text[i])) throw ParseError("unexpected character in letter", i);
    if (value == 0) throw ParseError("braid letter must be nonzero", at);
    if (value == std::numeric_limits<int>::min()) throw ParseError("letter out of range", at);
    if (letters.size() == kMaxBraidLetters) {
      throw ParseError("braid word exceeds " + std::to_string(kMaxBraidLetters) + " letters", at);
    }
    if (declared && std::abs(value) > *declared - 1) {
      throw ParseError("letter " + std::to_string(value) + " out of range for B" +
                           std::to_string(*declared),
                       at);
    }
    max_abs = std::max(max_abs, std::abs(value));
    letters.push_back(value);
  }
  if (!declared && max_abs == std::numeric_limits<int>::max()) {
    throw ParseError("letter out of range", begin);
  }
  return BraidWord(declared.value_or(max_abs + 1), std::move(letters));
}

// Splits `text` into content lines with comments removed; returns
// [begin, end) offsets for lines holding anything but whitespace.
std::vector<std::pair<std::size_t, std::size_t>> content_lines(std::string_view text) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t stop = text.find('\n', start);
    if (stop == std::string_view::npos) stop = text.size();
    std::size_t content_end = stop;
    const std::size_t hash = text.substr(start, stop - start).find('#');
    if (hash != std::string_view::npos) content_end = start + hash;
    bool blank = true;
    for (std::size_t j = start; j < content_end; ++j) {
      if (!is_space(text[j])) {
        blank = false;
        break;
      }
    }
    if (!blank) out.emplace_back(start, content_end);
    start = stop + 1;
  }
  return out;
}

}  // namespace

BraidWord parse_braid(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) return BraidWord();
  if (lines.size() > 1) throw ParseError("expected a single braid word", lines[1].first);
  return parse_word_line(text, lines.front().first, lines.front().second);
}

std::vector<BraidWord> parse_braid_list(std::string_view text) {
  std::vector<BraidWord> out;
  for (auto [b, e] : content_lines(text)) out.push_back(parse_word_line(text, b, e));
  return out;
}

std::string serialize(const BraidWord& word) {
  std::string out = "B" + std::to_string(word.strands()) + ":";
  for (int k : word.letters()) {
    out += ' ';
    out += std::to_string(k);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Word algebra

BraidWord compose(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands()) {
    throw BraidError("cannot compose braids on " + std::to_string(a.strands()) + " and " +
                     std::to_string(b.strands()) + " strands");
  }
  std::vector<int> letters = a.letters();
  letters.insert(letters.end(), b.letters().begin(), b.letters().end());
  return BraidWord(a.strands(), std::move(letters));
}

BraidWord inverse(const BraidWord& a) {
  std::vector<int> letters(a.letters().rbegin(), a.letters().rend());
  for (int& k : letters) k = -k;
  return BraidWord(a.strands(), std::move(letters));
}

BraidWord conjugate(const BraidWord& a, int g) {
  check_letter(a.strands(), g);
  std::vector<int> letters;
  letters.reserve(a.size() + 2);
  letters.push_back(g);
  letters.insert(letters.end(), a.letters().begin(), a.letters().end());
  letters.push_back(-g);
  return BraidWord(a.strands(), std::move(letters));
}

BraidWord free_reduce(const BraidWord& a) {
  std::vector<int> stack;
  stack.reserve(a.size());
  for (int k : a.letters()) {
    if (!stack.empty() && stack.back() == -k) {
      stack.pop_back();
    } else {
      stack.push_back(k);
    }
  }
  return BraidWord(a.strands(), std::move(stack));
}

BraidWord cyclic_shift(const BraidWord& a) {
  if (a.empty()) return a;
  std::vector<int> letters(a.letters().begin() + 1, a.letters().end());
  letters.push_back(a.letters().front());
  return BraidWord(a.strands(), std::move(letters));
}

long long exponent_sum(const BraidWord& a) {
  long long sum = 0;
  for (int k : a.letters()) sum += (k > 0) ? 1 : -1;
  return sum;
}

Permutation permutation(const BraidWord& a) {
  const int n = a.strands();
  // strand_at[p] = strand currently at position p
  std::vector<int> strand_at(n);
  std::iota(strand_at.begin(), strand_at.end(), 0);
  for (int k : a.letters()) {
    const int p = std::abs(k) - 1;
    std::swap(strand_at[p], strand_at[p + 1]);
  }
  Permutation out;
  out.images.resize(n);
  for (int p = 0; p < n; ++p) out.images[strand_at[p]] = p;
  return out;
}

int closure_components(const BraidWord& a) { return permutation(a).cycle_count(); }

BraidWord positive_markov_stabilize(const BraidWord& a) {
  std::vector<int> letters = a.letters();
  letters.push_back(a.strands());
  return BraidWord(a.strands() + 1, std::move(letters));
}

BraidWord negative_braid_stabilize(const BraidWord& a) {
  std::vector<int> letters = a.letters();
  letters.push_back(-a.strands());
  return BraidWord(a.strands() + 1, std::move(letters));
}

std::optional<std::size_t> negative_stabilization_site(const BraidWord& a) {
  const int top = a.strands() - 1;
  if (top < 1) return std::nullopt;
  std::optional<std::size_t> site;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const int k = a.letters()[i];
    if (k != top && k != -top) continue;
    if (site || k > 0) return std::nullopt;
    site = i;
  }
  return site;
}

// ---------------------------------------------------------------------------
// Moves

namespace {

struct MoveName {
  MoveKind kind;
  std::string_view name;
};

constexpr MoveName kMoveNames[] = {
    {MoveKind::conjugate, "conjugate"},
    {MoveKind::cyclic_shift, "cyclic-shift"},
    {MoveKind::free_reduce_at, "free-reduce-at"},
    {MoveKind::positive_stabilize, "positive-markov-stabilize"},
    {MoveKind::positive_destabilize_at, "positive-markov-destabilize-at"},
    {MoveKind::far_commute_at, "far-commute-at"},
    {MoveKind::braid_relation_at, "braid-relation-at"},
};

bool takes_argument(MoveKind kind) {
  return kind != MoveKind::cyclic_shift && kind != MoveKind::positive_stabilize;
}

}  // namespace

std::string to_string(const Move& move) {
  for (const auto& entry : kMoveNames) {
    if (entry.kind != move.kind) continue;
    std::string out(entry.name);
    if (takes_argument(move.kind)) out += " " + std::to_string(move.argument);
    return out;
  }
  throw BraidError("unknown move kind");
}

Move parse_move(std::string_view text) {
  while (!text.empty() && is_space(text.front())) text.remove_prefix(1);
  while (!text.empty() && is_space(text.back())) text.remove_suffix(1);
  const std::size_t space = text.find(' ');
  const std::string_view name = text.substr(0, space);
  for (const auto& entry : kMoveNames) {
    if (entry.name != name) continue;
    Move move{entry.kind, 0};
    if (!takes_argument(entry.kind)) {
      if (space != std::string_view::npos) throw ParseError("move takes no argument", space);
      return move;
    }
    if (space == std::string_view::npos) throw ParseError("move requires an argument", text.size());
    std::string_view arg = text.substr(space + 1);
    while (!arg.empty() && is_space(arg.front())) arg.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), move.argument);
    if (ec != std::errc() || ptr != arg.data() + arg.size()) {
      throw ParseError("bad move argument", space + 1);
    }
    return move;
  }
  throw ParseError("unknown move '" + std::string(name) + "'", 0);
}

std::string to_string(const SearchBudget& budget) {
  return "depth=" + std::to_string(budget.max_depth) +
         " states=" + std::to_string(budget.max_states) +
         " braid-relations=" + (budget.braid_relations ? "on" : "off");
}

BraidWord apply_move(const BraidWord& word, const Move& move) {
  const auto& w = word.letters();
  const int n = word.strands();
  auto position = [&](std::size_t span) -> std::size_t {
    if (move.argument < 0 || static_cast<std::size_t>(move.argument) + span > w.size()) {
      throw BraidError(to_string(move) + ": position out of range for word of length " +
                       std::to_string(w.size()));
    }
    return static_cast<std::size_t>(move.argument);
  };

  switch (move.kind) {
    case MoveKind::conjugate:
      return conjugate(word, move.argument);
    case MoveKind::cyclic_shift:
      return cyclic_shift(word);
    case MoveKind::free_reduce_at: {
      const std::size_t p = position(2);
      if (w[p] != -w[p + 1]) throw BraidError(to_string(move) + ": letters do not cancel");
      std::vector<int> letters = w;
      letters.erase(letters.begin() + static_cast<std::ptrdiff_t>(p),
                    letters.begin() + static_cast<std::ptrdiff_t>(p + 2));
      return BraidWord(n, std::move(letters));
    }
    case MoveKind::positive_stabilize:
      return positive_markov_stabilize(word);
    case MoveKind::positive_destabilize_at: {
      const std::size_t p = position(1);
      if (n < 2 || w[p] != n - 1) throw BraidError(to_string(move) + ": not a +(n-1) letter");
      const auto top_count = std::count_if(w.begin(), w.end(),
                                           [&](int k) { return std::abs(k) == n - 1; });
      if (top_count != 1) throw BraidError(to_string(move) + ": generator n-1 occurs more than once");
      std::vector<int> letters = w;
      letters.erase(letters.begin() + static_cast<std::ptrdiff_t>(p));
      return BraidWord(n - 1, std::move(letters));
    }
    case MoveKind::far_commute_at: {
      const std::size_t p = position(2);
      if (std::abs(std::abs(w[p]) - std::abs(w[p + 1])) < 2) {
        throw BraidError(to_string(move) + ": generators are adjacent");
      }
      std::vector<int> letters = w;
      std::swap(letters[p], letters[p + 1]);
      return BraidWord(n, std::move(letters));
    }
    case MoveKind::braid_relation_at: {
      const std::size_t p = position(3);
      const int a = w[p], b = w[p + 1];
      if (w[p + 2] != a || (a > 0) != (b > 0) || std::abs(std::abs(a) - std::abs(b)) != 1) {
        throw BraidError(to_string(move) + ": not of the form a b a with adjacent generators");
      }
      std::vector<int> letters = w;
      letters[p] = b;
      letters[p + 1] = a;
      letters[p + 2] = b;
      return BraidWord(n, std::move(letters));
    }
  }
  throw BraidError("unknown move kind");
}

BraidWord apply_moves(const BraidWord& word, const std::vector<Move>& steps) {
  BraidWord current = word;
  for (const Move& m : steps) current = apply_move(current, m);
  return current;
}

}  // namespace transknot
