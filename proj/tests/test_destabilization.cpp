#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "transknot/braid.hpp"

using namespace transknot;

TEST_CASE("already stabilized words need no moves") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 200; ++i) {
    const auto beta = oracle::random_braid(rng, 4, 10);
    const auto stab = negative_braid_stabilize(beta);
    const auto w = find_destabilization(stab);
    REQUIRE(w);
    const auto replay = validate_witness(stab, *w);
    CHECK(replay.ok);
    // free reduction may shorten the word, but the -n letter survives
    CHECK(replay.destabilized == free_reduce(beta));
  }
}

TEST_CASE("conjugated and padded stabilization is found") {
  // sigma_2 (sigma_1^3 sigma_2^-1) sigma_2^-1 with a cancelling pair
  // sigma_2 sigma_2^-1 appended.
  const BraidWord w(3, {2, 1, 1, 1, -2, -2, 2, -2});
  const auto witness = find_destabilization(w);
  REQUIRE(witness);
  CHECK_FALSE(witness->steps.empty());
  const auto replay = validate_witness(w, *witness);
  CHECK(replay.ok);
  CHECK(replay.final_word.strands() == 3);
  CHECK(replay.destabilized == BraidWord(2, {1, 1, 1}));
}

TEST_CASE("sigma_2 sigma_1^3 sigma_2^-1 is a split link, not a stabilization") {
  // closure is a trefoil plus a split unknot; every reduced conjugate keeps
  // an even number of sigma_2 letters
  const BraidWord w(3, {2, 1, 1, 1, -2, -2, 2});
  CHECK(closure_components(w) == 2);
  CHECK_FALSE(find_destabilization(w));
}

TEST_CASE("positive trefoil has no negative destabilization in budget") {
  const BraidWord trefoil(2, {1, 1, 1});
  CHECK_FALSE(find_destabilization(trefoil));
  CHECK_FALSE(find_destabilization(trefoil, {8, 200'000, false}));
  CHECK_FALSE(find_destabilization(trefoil, {6, 50'000, true}));
  CHECK_FALSE(find_destabilization(BraidWord()));
}

TEST_CASE("witnesses need the moves they list") {
  // sigma_2 sigma_1 sigma_2^-2 becomes sigma_1 sigma_2^-1 after a shift and
  // a cancellation
  const BraidWord w(3, {2, 1, -2, -2});
  const auto witness = find_destabilization(w);
  REQUIRE(witness);
  CHECK(witness->steps == std::vector<Move>{{MoveKind::cyclic_shift, 0}, {MoveKind::free_reduce_at, 2}});
  CHECK(witness->terminal == 1);
  const auto replay = validate_witness(w, *witness);
  CHECK(replay.ok);
  CHECK(replay.destabilized == BraidWord(2, {1}));
}

TEST_CASE("braid relations widen the search") {
  // sigma_2^-1 sigma_1^-1 sigma_2^-1 = sigma_1^-1 sigma_2^-1 sigma_1^-1, so the
  // closure is a negative stabilization, but the word has two sigma_2 letters
  // and no free cancellation is available.
  const BraidWord w(3, {-2, -1, -2});
  SearchBudget with{6, 50'000, true};
  const auto witness = find_destabilization(w, with);
  REQUIRE(witness);
  CHECK(validate_witness(w, *witness).ok);
}

TEST_CASE("the search is deterministic") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 50; ++i) {
    const auto b = oracle::random_braid(rng, 4, 8);
    CHECK(find_destabilization(b, {4, 5'000, false}) == find_destabilization(b, {4, 5'000, false}));
  }
}

TEST_CASE("every returned witness replays on random braids") {
  std::mt19937_64 rng(29);
  int found = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto b = oracle::random_braid(rng, 5, 12);
    const auto w = find_destabilization(b, {3, 5'000, false});
    if (!w) continue;
    ++found;
    const auto replay = validate_witness(b, *w);
    CHECK_MESSAGE(replay.ok, serialize(b) << ": " << replay.message);
    CHECK(apply_moves(b, w->steps) == replay.final_word);
  }
  CHECK(found > 0);
}

TEST_CASE("replay validator rejects broken witnesses") {
  const BraidWord w(3, {1, 1, 1, -2});
  CHECK(validate_witness(w, {{}, 3}).ok);
  CHECK_FALSE(validate_witness(w, {{}, 2}).ok);
  CHECK_FALSE(validate_witness(w, {{{MoveKind::free_reduce_at, 0}}, 3}).ok);
  CHECK_FALSE(validate_witness(w, {{{MoveKind::conjugate, 3}}, 3}).ok);
  CHECK_FALSE(validate_witness(BraidWord(3, {1, 1, 1, 2}), {{}, 3}).ok);
  CHECK_FALSE(validate_witness(BraidWord(3, {-2, 1, -2}), {{}, 0}).ok);
  CHECK_FALSE(validate_witness(BraidWord(), {{}, 0}).ok);
  // a positive stabilization step changes which generator is on top
  const auto r = validate_witness(w, {{{MoveKind::positive_stabilize, 0}}, 3});
  CHECK_FALSE(r.ok);
}
