#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "transknot/front.hpp"

using namespace transknot;

namespace {

FrontDiagram fixture(const char* name) {
  return parse_front(std::string(
      name == std::string("unknot")    ? "b 1\nd 1\n"
      : name == std::string("gamma")   ? "b 1\nb 2\nd 1\nd 1\n"
      : name == std::string("trefoil") ? "b 1; b 3; x 2; x 2; x 2; d 1; d 1"
                                       : "b 1; b 1; x 2 over=lower; d 1; d 1"));
}

struct Classical {
  int tb, r, sl;
};

Classical classical(const FrontDiagram& f) {
  const auto o = orient(f);
  return {thurston_bennequin(o), rotation_number(o), self_linking_of_pushoff(o)};
}

}  // namespace

TEST_CASE("parsing fronts") {
  const auto f = parse_front("b 1; b 1; x 2 over=lower; d 1; d 1");
  REQUIRE(f.events().size() == 5);
  CHECK(f.events()[2] == FrontEvent{EventKind::crossing, 2, Over::lower});
  CHECK(f.cusp_count() == 4);
  CHECK(f.crossing_count() == 1);
  CHECK_FALSE(f.satisfies_slope_rule());
  CHECK(parse_front("# comment\nb 1\n\nd 1 # trailing\n") == fixture("unknot"));
  CHECK(parse_front("b 1; b 3; x 2; x 2; x 2; d 1; d 1").satisfies_slope_rule());

  CHECK_THROWS_AS(parse_front("d 1"), FrontError);
  CHECK_THROWS_AS(parse_front("b 1"), FrontError);
  CHECK_THROWS_AS(parse_front("b 1; x 2; d 1"), FrontError);
  CHECK_THROWS_AS(parse_front("b 1; b 4; d 1; d 1"), FrontError);
  CHECK_THROWS_AS(parse_front("b 0; d 1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_front("q 1"), ParseError);
  CHECK_THROWS_AS(parse_front("b 1; x 2 over=middle; d 1"), ParseError);
}

TEST_CASE("serialize round trip") {
  for (const char* name : {"unknot", "gamma", "trefoil", "kinked"}) {
    const auto f = fixture(name);
    CHECK(parse_front(serialize(f)) == f);
  }
  std::mt19937_64 rng(41);
  for (int i = 0; i < 200; ++i) {
    const auto f = oracle::random_knot_front(rng);
    CHECK(parse_front(serialize(f)) == f);
  }
}

TEST_CASE("classical invariants of the small fronts") {
  auto c = classical(fixture("unknot"));
  CHECK(c.tb == -1);
  CHECK(c.r == 0);
  CHECK(c.sl == -1);

  c = classical(fixture("gamma"));
  CHECK(c.tb == -2);
  CHECK(std::abs(c.r) == 1);

  const auto trefoil = orient(fixture("trefoil"));
  CHECK(writhe(trefoil) == 3);
  CHECK(thurston_bennequin(trefoil) == 1);
  CHECK(rotation_number(trefoil) == 0);
  CHECK(self_linking_of_pushoff(trefoil) == 1);

  const auto kinked = orient(fixture("kinked"));
  CHECK(kinked.component_count() == 1);
  CHECK(writhe(kinked) == -1);
  CHECK(thurston_bennequin(kinked) == -3);
  CHECK(rotation_number(kinked) == 0);
}

TEST_CASE("canonical orientation") {
  const auto o = orient(fixture("unknot"));
  CHECK(o.direction_after(0, 1) == 1);
  CHECK(o.direction_after(0, 2) == -1);
  CHECK(o.cusp(0) == CuspDirection::up);
  CHECK(o.cusp(1) == CuspDirection::down);
  const auto r = o.reversed();
  CHECK(r.direction_after(0, 1) == -1);
  CHECK(r.cusp(0) == CuspDirection::down);
  CHECK(r.cusp(1) == CuspDirection::up);
}

TEST_CASE("links are reported but have no knot invariants") {
  const auto two = orient(parse_front("b 1; d 1; b 1; d 1"));
  CHECK(two.component_count() == 2);
  CHECK(writhe(two) == 0);
  CHECK_THROWS_AS(thurston_bennequin(two), FrontError);
  CHECK_THROWS_AS(rotation_number(two), FrontError);

  // Hopf-like: two crossings between distinct unknots
  const auto hopf = orient(parse_front("b 1; b 3; x 2; x 2; d 1; d 1"));
  CHECK(hopf.component_count() == 2);
  CHECK(std::abs(writhe(hopf)) == 2);
  const auto flipped = hopf.reversed(1);
  CHECK(writhe(flipped) == -writhe(hopf));
}

TEST_CASE("stabilizations of the unknot") {
  const auto u = fixture("unknot");
  auto c = classical(stabilize(u, StabilizationSign::plus, {0, 1}));
  CHECK(c.tb == -2);
  CHECK(c.r == 1);
  CHECK(c.sl == -3);
  c = classical(stabilize(u, StabilizationSign::minus, {0, 1}));
  CHECK(c.tb == -2);
  CHECK(c.r == -1);
  CHECK(c.sl == -1);
  // an opposite pair cancels in r
  c = classical(stabilize(stabilize(u, StabilizationSign::plus, {0, 2}), StabilizationSign::minus, {0, 1}));
  CHECK(c.tb == -3);
  CHECK(c.r == 0);
  // on a leftward strand as well
  c = classical(stabilize(u, StabilizationSign::plus, {0, 2}));
  CHECK(c.tb == -2);
  CHECK(c.r == 1);

  CHECK_THROWS_AS(stabilize(u, StabilizationSign::plus, {1, 1}), FrontError);
  CHECK_THROWS_AS(stabilize(u, StabilizationSign::plus, {0, 3}), FrontError);
  CHECK_THROWS_AS(stabilize(u, StabilizationSign::plus, {7, 1}), FrontError);
}

TEST_CASE("random fronts: invariant laws") {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 500; ++i) {
    const auto f = oracle::random_knot_front(rng);
    const auto o = orient(f);
    CAPTURE(serialize(f));
    const int tb = thurston_bennequin(o), r = rotation_number(o);
    CHECK(o.up_cusps() + o.down_cusps() == static_cast<int>(f.cusp_count()));
    CHECK(o.up_cusps(0) == o.up_cusps());
    CHECK((tb + r) % 2 != 0);

    // writhe from the oracle definition: sign = (over==upper ? 1 : -1) dU dL
    int w = 0;
    for (std::size_t e = 0; e < f.events().size(); ++e) {
      const auto& ev = f.events()[e];
      if (ev.kind != EventKind::crossing) continue;
      const int du = e == 0 ? 0 : o.direction_after(e - 1, ev.level);
      const int dl = e == 0 ? 0 : o.direction_after(e - 1, ev.level + 1);
      w += (ev.over == Over::upper ? 1 : -1) * du * dl;
    }
    CHECK(writhe(o) == w);

    const auto rev = o.reversed();
    CHECK(thurston_bennequin(rev) == tb);
    CHECK(rotation_number(rev) == -r);

    const auto seg = oracle::random_segment(rng, f);
    const auto plus = classical(stabilize(f, StabilizationSign::plus, seg));
    const auto minus = classical(stabilize(f, StabilizationSign::minus, seg));
    CHECK(plus.tb == tb - 1);
    CHECK(minus.tb == tb - 1);
    CHECK(plus.r == r + 1);
    CHECK(minus.r == r - 1);
    CHECK(plus.sl == tb - r - 2);
    CHECK(minus.sl == tb - r);
  }
}

TEST_CASE("trace rendering") {
  const auto text = render_trace(fixture("trefoil"));
  CHECK_FALSE(text.empty());
  CHECK(render_trace(fixture("trefoil")) == text);
}
