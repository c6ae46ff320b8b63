// One line per acceptance criterion; exit status 0 iff all pass.
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "transknot/certificate.hpp"
#include "transknot/cli.hpp"
#include "transknot/contact.hpp"
#include "transknot/cover.hpp"
#include "transknot/front.hpp"
#include "transknot/transverse.hpp"

using namespace transknot;

namespace {

const std::string kFixtures = TRANSKNOT_FIXTURES;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

Outcome gamma_checkpoint() {
  Outcome o;
  const auto front = parse_front(read_file(kFixtures + "/gamma.front"));
  const int tb = thurston_bennequin(orient(front));
  if (front.cusp_count() != 4 || front.crossing_count() != 0) o.fail("fixture is not 4 cusps, 0 crossings");
  if (tb != -2) o.fail("tb = " + std::to_string(tb));
  o.detail = o.ok ? "tb = -2" : o.detail;
  return o;
}

Outcome calibration() {
  Outcome o;
  const auto f = orient(parse_front(read_file(kFixtures + "/unknot.front")));
  const int tb = thurston_bennequin(f), r = rotation_number(f), sl_front = self_linking_of_pushoff(f);
  const long long sl_braid = self_linking(BraidWord());
  if (tb != -1 || r != 0 || sl_front != -1) o.fail("front gives tb, r, sl = " + std::to_string(tb) + ", " +
                                                   std::to_string(r) + ", " + std::to_string(sl_front));
  if (sl_braid != -1) o.fail("braid unknot sl = " + std::to_string(sl_braid));
  if (sl_braid != sl_front) o.fail("front and braid sl disagree");
  if (o.ok) o.detail = "tb = -1, r = 0, sl = -1 (front and braid)";
  return o;
}

Outcome stabilization_laws() {
  Outcome o;
  std::mt19937_64 rng(1001);
  for (int i = 0; i < 1000 && o.ok; ++i) {
    const auto f = oracle::random_knot_front(rng);
    const auto base = orient(f);
    const int tb = thurston_bennequin(base), r = rotation_number(base), sl = self_linking_of_pushoff(base);
    const auto seg = oracle::random_segment(rng, f);
    const auto p = orient(stabilize(f, StabilizationSign::plus, seg));
    const auto m = orient(stabilize(f, StabilizationSign::minus, seg));
    if (thurston_bennequin(p) != tb - 1 || thurston_bennequin(m) != tb - 1) o.fail("tb law broken on " + serialize(f));
    if (rotation_number(p) != r + 1 || rotation_number(m) != r - 1) o.fail("r law broken on " + serialize(f));
    if (self_linking_of_pushoff(m) != sl || self_linking_of_pushoff(p) != sl - 2) o.fail("sl law broken on " + serialize(f));
  }
  if (o.ok) o.detail = "1000 random fronts";
  return o;
}

Outcome markov_invariance() {
  Outcome o;
  std::mt19937_64 rng(1002);
  for (int i = 0; i < 1000 && o.ok; ++i) {
    const auto b = oracle::random_braid(rng, 5, 12);
    const long long sl = self_linking(b);
    const int c = closure_components(b);
    std::vector<BraidWord> same{cyclic_shift(b), free_reduce(b), positive_markov_stabilize(b)};
    if (b.strands() > 1) {
      const int g = std::uniform_int_distribution<int>(1, b.strands() - 1)(rng);
      same.push_back(conjugate(b, g));
      same.push_back(conjugate(b, -g));
    }
    for (const auto& s : same) {
      if (self_linking(s) != sl || closure_components(s) != c) o.fail("invariance broken: " + serialize(b) + " vs " + serialize(s));
    }
    const auto neg = negative_braid_stabilize(b);
    if (self_linking(neg) != sl - 2 || closure_components(neg) != c) o.fail("negative stabilization of " + serialize(b));
  }
  if (o.ok) o.detail = "1000 random braids";
  return o;
}

Outcome certifier() {
  Outcome o;
  std::mt19937_64 rng(1003);
  int certified = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto beta = oracle::random_braid(rng, 5, 12);
    const auto cert = certify_overtwisted({negative_braid_stabilize(beta), std::nullopt});
    if (!cert) {
      o.fail("no certificate for the stabilization of " + serialize(beta));
      continue;
    }
    const auto replay = verify_certificate(*cert);
    if (!replay.ok) {
      o.fail("replay rejected: " + replay.message);
      continue;
    }
    ++certified;
  }
  if (certify_overtwisted({BraidWord(2, {1, 1, 1}), std::nullopt})) o.fail("trefoil braid was certified");
  if (o.ok) o.detail = std::to_string(certified) + "/1000 certified and replayed; trefoil: none";
  return o;
}

Outcome cover_orders() {
  Outcome o;
  // Oracle side first: Goeritz determinants and Smith forms of the cyclic
  // presentation, from Seifert matrices.
  const auto trefoil = oracle::seifert_alexander({{-1, 1}, {0, -1}});
  const auto fig8 = oracle::seifert_alexander({{1, 1}, {0, -1}});
  const long long goeritz_trefoil = std::llabs(oracle::leibniz_det(oracle::IntMatrix{{2, -1}, {-1, 2}}));
  const long long goeritz_fig8 = std::llabs(oracle::leibniz_det(oracle::IntMatrix{{2, -1}, {-1, 3}}));
  const auto snf = [](const std::map<int, long long>& d, int n) {
    return oracle::order_from_invariants(oracle::smith_invariants(oracle::cyclic_presentation(d, n)));
  };
  struct Case {
    const char* name;
    BraidWord braid;
    int n;
    long long expected, oracle;
  };
  const Case cases[] = {
      {"trefoil n=2", BraidWord(2, {1, 1, 1}), 2, 3, snf(trefoil, 2)},
      {"figure-eight n=2", BraidWord(3, {1, -2, 1, -2}), 2, 5, snf(fig8, 2)},
      {"trefoil n=3", BraidWord(2, {1, 1, 1}), 3, 4, snf(trefoil, 3)},
      {"unknot n=2", BraidWord(), 2, 1, snf({{0, 1}}, 2)},
      {"unknot n=5", BraidWord(), 5, 1, snf({{0, 1}}, 5)},
  };
  if (goeritz_trefoil != 3 || goeritz_fig8 != 5) o.fail("Goeritz oracle disagrees with the expected constants");
  std::string detail;
  for (const auto& c : cases) {
    if (c.oracle != c.expected) o.fail(std::string(c.name) + ": oracle gives " + std::to_string(c.oracle));
    const auto got = cyclic_cover_homology_order(c.braid, c.n);
    if (static_cast<long long>(got) != c.expected) o.fail(std::string(c.name) + ": got " + std::to_string(got));
    detail += (detail.empty() ? "" : ", ") + std::string(c.name) + " -> " + std::to_string(got);
  }
  if (o.ok) o.detail = detail;
  return o;
}

Outcome contact_condition() {
  Outcome o;
  const auto grid = default_grid(ModelForm::standard);
  for (int i = 0; i < 21; ++i)
    for (int j = 0; j < 21; ++j)
      for (int k = 0; k < 21; ++k) {
        const Point3 p{grid.axes[0].at(i), grid.axes[1].at(j), grid.axes[2].at(k)};
        if (std::abs(contact_density(ModelForm::standard, p) - 1) > 1e-6) o.fail("standard density off at a grid point");
      }
  for (auto form : {ModelForm::standard, ModelForm::symmetric, ModelForm::overtwisted_radial}) {
    const auto report = is_contact_on_grid(form, default_grid(form));
    if (!report.passed) o.fail(std::string(name(form)) + " has a vanishing sample");
  }
  // convergence against the closed form r + sin r cos r
  const auto exact = [](double r) { return r + std::sin(r) * std::cos(r); };
  double worst_lo = 10, worst_hi = 0;
  for (double r : {0.7, 1.3, 2.4, 4.0}) {
    const Point3 p{r, 0.5, 0.1};
    double previous = 0;
    for (double h : {0.04, 0.02, 0.01}) {
      const double err = std::abs(contact_density(ModelForm::overtwisted_radial, p, h) - exact(r));
      if (previous > 0) {
        worst_lo = std::min(worst_lo, previous / err);
        worst_hi = std::max(worst_hi, previous / err);
      }
      previous = err;
    }
  }
  if (worst_lo < 3.5 || worst_hi > 4.5) o.fail("convergence ratio outside [3.5, 4.5]");
  char buf[96];
  std::snprintf(buf, sizeof buf, "convergence ratios in [%.3f, %.3f]", worst_lo, worst_hi);
  if (o.ok) o.detail = std::string("9261 standard samples, 3 forms nonvanishing, ") + buf;
  return o;
}

Outcome round_trip() {
  Outcome o;
  for (const char* f : {"unknot.front", "gamma.front", "trefoil.front", "kinked_unknot.front"}) {
    const auto front = parse_front(read_file(kFixtures + "/" + f));
    if (!(parse_front(serialize(front)) == front)) o.fail(std::string(f) + " does not round-trip");
  }
  for (const auto& b : parse_braid_list(read_file(kFixtures + "/braids.txt"))) {
    if (!(parse_braid(serialize(b)) == b)) o.fail(serialize(b) + " does not round-trip");
    if (auto cert = certify_overtwisted({b, std::nullopt})) {
      if (!(parse_certificate(serialize(*cert)) == *cert)) o.fail("certificate does not round-trip");
    }
  }
  const std::vector<std::vector<std::string>> commands = {
      {"invariants", kFixtures + "/braids.txt"},
      {"certify", "B3: 1 1 1 -2", "--n", "3"},
      {"--format", "json", "equiv", "B2: 1 1 1", "B3: 2 1 1 1"},
      {"front-invariants", kFixtures + "/gamma.front", "--trace"},
      {"cover", "B3: 1 -2 1 -2", "--n", "2"},
      {"contact-check", "--form", "ot"},
  };
  for (const auto& c : commands) {
    std::ostringstream o1, e1, o2, e2;
    const int c1 = cli::run(c, o1, e1), c2 = cli::run(c, o2, e2);
    if (c1 != 0 || c1 != c2 || o1.str() != o2.str() || e1.str() != e2.str()) o.fail("CLI output differs for " + c[0]);
  }
  if (o.ok) o.detail = "4 fronts, fixture braids and certificates; 6 CLI commands byte-identical";
  return o;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"gamma checkpoint", gamma_checkpoint},
      {"formula calibration", calibration},
      {"stabilization laws", stabilization_laws},
      {"transverse Markov invariance", markov_invariance},
      {"overtwisted certifier", certifier},
      {"cover identification", cover_orders},
      {"contact condition", contact_condition},
      {"round trip and determinism", round_trip},
  };
  int failures = 0, index = 0;
  for (const auto& [title, check] : criteria) {
    ++index;
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    failures += !o.ok;
    std::printf("%s %d %s: %s\n", o.ok ? "PASS" : "FAIL", index, title, o.detail.c_str());
  }
  return failures == 0 ? 0 : 1;
}
