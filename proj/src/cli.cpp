#include "transknot/cli.hpp"

#include <CLI11.hpp>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <stdexcept>

#include "transknot/braid.hpp"
#include "transknot/certificate.hpp"
#include "transknot/contact.hpp"
#include "transknot/cover.hpp"
#include "transknot/front.hpp"
#include "transknot/transverse.hpp"

namespace transknot::cli {

namespace {

using Json = nlohmann::ordered_json;

// Thrown for bad option values discovered after CLI11 parsing.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { text, json };

// An argument naming an existing file is read; anything else is taken as
// inline text.
std::string load(const std::string& arg) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(arg, ec)) return arg;
  std::ifstream in(arg, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + arg);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string join_moves(const std::vector<Move>& steps) {
  if (steps.empty()) return "(none)";
  std::string out;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (i) out += "; ";
    out += to_string(steps[i]);
  }
  return out;
}

Json moves_json(const std::vector<Move>& steps) {
  Json a = Json::array();
  for (const Move& m : steps) a.push_back(to_string(m));
  return a;
}

std::string permutation_text(const Permutation& p) {
  std::string out;
  for (std::size_t i = 0; i < p.images.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(p.images[i] + 1);
  }
  return out;
}

struct BudgetOptions {
  int depth = SearchBudget{}.max_depth;
  std::size_t states = SearchBudget{}.max_states;
  bool braid_relations = false;

  void attach(CLI::App* app) {
    app->add_option("--budget-depth", depth, "Maximum number of moves per search branch")
        ->check(CLI::Range(0, 1000))
        ->capture_default_str();
    app->add_option("--budget-states", states, "Maximum number of stored search states")
        ->check(CLI::Range(std::size_t{1}, std::size_t{50'000'000}))
        ->capture_default_str();
    app->add_flag("--braid-relations", braid_relations, "Also search with braid relations");
  }
  SearchBudget budget() const { return {depth, states, braid_relations}; }
};

// ---------------------------------------------------------------------------
// Subcommands

void run_sl(const std::string& input, Format format, std::ostream& out) {
  for (const BraidWord& b : parse_braid_list(load(input))) {
    const long long sl = self_linking(b);
    if (format == Format::json) {
      out << Json{{"braid", serialize(b)}, {"sl", sl}, {"components", closure_components(b)}}.dump() << '\n';
    } else {
      out << "sl = " << sl << '\n';
    }
  }
}

void run_invariants(const std::string& input, Format format, std::ostream& out) {
  const auto words = parse_braid_list(load(input));
  for (std::size_t i = 0; i < words.size(); ++i) {
    const BraidWord& b = words[i];
    const int components = closure_components(b);
    const std::string alexander = components == 1 ? to_string(alexander_polynomial(b)) : "";
    if (format == Format::json) {
      Json j{{"braid", serialize(b)},
             {"strands", b.strands()},
             {"length", b.size()},
             {"exponent_sum", exponent_sum(b)},
             {"components", components},
             {"permutation", permutation_text(permutation(b))},
             {"sl", self_linking(b)}};
      j["alexander"] = components == 1 ? Json(alexander) : Json(nullptr);
      out << j.dump() << '\n';
      continue;
    }
    if (i) out << '\n';
    out << "braid: " << serialize(b) << '\n'
        << "strands: " << b.strands() << '\n'
        << "length: " << b.size() << '\n'
        << "exponent-sum: " << exponent_sum(b) << '\n'
        << "components: " << components << '\n'
        << "permutation: " << permutation_text(permutation(b)) << '\n'
        << "sl = " << self_linking(b) << '\n';
    if (components == 1) {
      out << "alexander: " << alexander << '\n';
    } else {
      out << "alexander: n/a (closure is a link)\n";
    }
  }
}

std::optional<StabilizationSign> legendrian_sign(const std::string& s) {
  if (s == "+" || s == "plus" || s == "positive") return StabilizationSign::plus;
  if (s == "-" || s == "minus" || s == "negative") return StabilizationSign::minus;
  return std::nullopt;
}

SegmentRef parse_segment(const std::string& text) {
  const auto colon = text.find(':');
  try {
    if (colon == std::string::npos) throw std::invalid_argument("");
    std::size_t used = 0;
    const long event = std::stol(text.substr(0, colon), &used);
    if (used != colon || event < 1) throw std::invalid_argument("");
    const std::string rest = text.substr(colon + 1);
    const int level = std::stoi(rest, &used);
    if (used != rest.size()) throw std::invalid_argument("");
    return {static_cast<std::size_t>(event - 1), level};
  } catch (const std::logic_error&) {
    throw UsageError("--at expects EVENT:LEVEL with a 1-based event index, got '" + text + "'");
  }
}

void run_stabilize(const std::string& input, const std::string& sign_text, const std::string& at,
                   Format format, std::ostream& out) {
  const auto sign = legendrian_sign(sign_text);
  if (!sign) throw UsageError("--sign must be positive or negative");

  if (!at.empty()) {
    const FrontDiagram front = parse_front(load(input));
    const FrontDiagram result = stabilize(front, *sign, parse_segment(at));
    if (format == Format::json) {
      const OrientedFront of = orient(result);
      Json j{{"front", serialize(result)}, {"cusps", result.cusp_count()}, {"writhe", writhe(of)}};
      if (of.component_count() == 1) {
        j["tb"] = thurston_bennequin(of);
        j["r"] = rotation_number(of);
      }
      out << j.dump() << '\n';
    } else {
      out << serialize(result);
    }
    return;
  }

  for (const BraidWord& b : parse_braid_list(load(input))) {
    const BraidWord result =
        *sign == StabilizationSign::plus ? positive_markov_stabilize(b) : negative_braid_stabilize(b);
    if (format == Format::json) {
      out << Json{{"braid", serialize(result)}, {"sl", self_linking(result)}}.dump() << '\n';
    } else {
      out << serialize(result) << '\n';
    }
  }
}

void run_equiv(const std::string& a_text, const std::string& b_text, const BudgetOptions& opts,
               int extra_strands, Format format, std::ostream& out) {
  const TransverseBraid a{parse_braid(load(a_text)), std::nullopt};
  const TransverseBraid b{parse_braid(load(b_text)), std::nullopt};
  EquivalenceBudget budget{opts.budget(), extra_strands};
  const EquivalenceResult r = transversely_equivalent(a, b, budget);

  std::string result;
  switch (r.outcome) {
    case EquivalenceOutcome::equivalent: result = "equivalent"; break;
    case EquivalenceOutcome::distinct_self_linking:
      result = "inequivalent (self-linking " + std::to_string(self_linking(a)) + " vs " +
               std::to_string(self_linking(b)) + ")";
      break;
    case EquivalenceOutcome::distinct_components:
      result = "inequivalent (components " + std::to_string(closure_components(a.braid)) + " vs " +
               std::to_string(closure_components(b.braid)) + ")";
      break;
    case EquivalenceOutcome::budget_exhausted: result = "none (budget exhausted)"; break;
  }

  if (format == Format::json) {
    Json j{{"a", serialize(a.braid)}, {"b", serialize(b.braid)}, {"result", result}};
    if (r.witness) {
      j["common"] = serialize(r.witness->common);
      j["from_a"] = moves_json(r.witness->from_a);
      j["from_b"] = moves_json(r.witness->from_b);
    }
    j["budget"] = to_string(budget.search);
    j["strand_cap"] = r.strand_cap;
    j["states"] = r.states_explored;
    j["multi_component"] = r.multi_component;
    out << j.dump() << '\n';
    return;
  }
  out << "a: " << serialize(a.braid) << '\n' << "b: " << serialize(b.braid) << '\n';
  if (r.multi_component) out << "warning: closures are links; compared by total self-linking\n";
  out << "result: " << result << '\n';
  if (r.witness) {
    out << "common: " << serialize(r.witness->common) << '\n'
        << "from-a: " << join_moves(r.witness->from_a) << '\n'
        << "from-b: " << join_moves(r.witness->from_b) << '\n';
  }
  out << "budget: " << to_string(budget.search) << " strand-cap=" << r.strand_cap << '\n';
  out << "states: " << r.states_explored << '\n';
}

void run_certify(const std::string& input, const BudgetOptions& opts, int n, const std::string& label,
                 Format format, std::ostream& out) {
  TransverseBraid k{parse_braid(load(input)), std::nullopt};
  if (!label.empty()) {
    if (label.find('\n') != std::string::npos) throw UsageError("--label must be a single line");
    k.label = label;
  }
  const auto cert = certify_overtwisted(k, opts.budget());
  if (!cert) {
    if (format == Format::json) {
      out << Json{{"input", serialize(k.braid)}, {"result", "none (budget exhausted)"},
                  {"budget", to_string(opts.budget())}}
                 .dump()
          << '\n';
    } else {
      out << "input: " << serialize(k.braid) << '\n'
          << "result: none (budget exhausted)\n"
          << "budget: " << to_string(opts.budget()) << '\n'
          << "note: no negative destabilization was found; this does not show the covers are tight\n";
    }
    return;
  }
  if (format == Format::json) {
    out << to_json(*cert) << '\n';
    if (n >= 2) out << Json{{"n", n}, {"conclusion", OvertwistedCertificate::conclusion(n)}}.dump() << '\n';
    return;
  }
  out << serialize(*cert);
  if (n >= 2) out << "n = " << n << ": " << OvertwistedCertificate::conclusion(n) << '\n';
}

void run_cover(const std::string& input, int n, Format format, std::ostream& out) {
  const BraidWord b = parse_braid(load(input));
  const LaurentPolynomial delta = alexander_polynomial(b);
  const std::uint64_t order = cyclic_cover_homology_order(delta, n);
  if (format == Format::json) {
    Json j{{"braid", serialize(b)}, {"alexander", to_string(delta)}, {"n", n}};
    j["h1_order"] = order == 0 ? Json("infinite") : Json(order);
    out << j.dump() << '\n';
    return;
  }
  out << "braid: " << serialize(b) << '\n'
      << "alexander: " << to_string(delta) << '\n'
      << "n = " << n << '\n'
      << "|H1| = " << (order == 0 ? std::string("infinite") : std::to_string(order)) << '\n';
}

void run_contact(const std::string& form_text, const std::string& grid_text, double h, double tol,
                 Format format, std::ostream& out) {
  ModelForm form;
  GridSpec grid;
  try {
    form = parse_model_form(form_text);
    grid = grid_text.empty() ? default_grid(form) : parse_grid(grid_text);
  } catch (const ContactError& e) {
    throw UsageError(e.what());
  }
  const ContactReport r = is_contact_on_grid(form, grid, h, tol);
  const std::string at =
      "(" + fmt_double(r.argmin.a) + ", " + fmt_double(r.argmin.b) + ", " + fmt_double(r.argmin.c) + ")";
  if (format == Format::json) {
    out << Json{{"form", name(form)},
                {"grid", to_string(grid)},
                {"h", h},
                {"samples", r.samples},
                {"min_abs_density", r.min_abs_density},
                {"argmin", {r.argmin.a, r.argmin.b, r.argmin.c}},
                {"min_abs_coordinate_density", r.min_abs_coordinate_density},
                {"tolerance", r.tolerance},
                {"contact", r.passed}}
               .dump()
        << '\n';
    return;
  }
  out << "form: " << name(form) << '\n'
      << "grid: " << to_string(grid) << '\n'
      << "h: " << fmt_double(h) << '\n'
      << "samples: " << r.samples << '\n'
      << "min |density| (dx^dy^dz): " << fmt_double(r.min_abs_density) << " at " << at << '\n'
      << "min |density| (coordinate volume, off axis): " << fmt_double(r.min_abs_coordinate_density) << '\n'
      << "result: " << (r.passed ? "contact" : "not verified") << " (tolerance " << fmt_double(tol) << ")\n";
}

void run_front_invariants(const std::string& input, bool trace, bool reverse, Format format,
                          std::ostream& out) {
  const FrontDiagram front = parse_front(load(input));
  OrientedFront of = orient(front);
  if (reverse) of = of.reversed();
  const bool knot = of.component_count() == 1;

  if (format == Format::json) {
    Json j{{"events", front.events().size()},
           {"cusps", front.cusp_count()},
           {"crossings", front.crossing_count()},
           {"components", of.component_count()},
           {"writhe", writhe(of)},
           {"up_cusps", of.up_cusps()},
           {"down_cusps", of.down_cusps()},
           {"slope_rule", front.satisfies_slope_rule()}};
    if (knot) {
      j["tb"] = thurston_bennequin(of);
      j["r"] = rotation_number(of);
      j["sl"] = self_linking_of_pushoff(of);
    }
    out << j.dump() << '\n';
    return;
  }
  out << "events: " << front.events().size() << '\n'
      << "cusps: " << front.cusp_count() << '\n'
      << "crossings: " << front.crossing_count() << '\n'
      << "components: " << of.component_count() << '\n'
      << "writhe = " << writhe(of) << '\n'
      << "up cusps = " << of.up_cusps() << '\n'
      << "down cusps = " << of.down_cusps() << '\n';
  if (knot) {
    out << "tb = " << thurston_bennequin(of) << '\n'
        << "r = " << rotation_number(of) << '\n'
        << "sl = " << self_linking_of_pushoff(of) << '\n';
  } else {
    out << "tb, r: n/a (front is a link)\n";
  }
  if (!front.satisfies_slope_rule()) out << "warning: some crossing has the lower strand in front\n";
  if (trace) out << render_trace(front);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariants of Legendrian and transverse knots, braid moves, and overtwisted-cover certificates",
               "transknot"};
  app.require_subcommand(1);
  std::string format_text = "text";
  app.add_option("--format", format_text, "Output format")
      ->check(CLI::IsMember({"text", "json", "json-lines"}))
      ->capture_default_str();

  std::string input, input_b, sign, at, form = "std", grid, label;
  int n = 0, extra_strands = 3;
  double h = kDefaultStep, tol = kDefaultTolerance;
  bool trace = false, reverse = false;
  BudgetOptions budget;

  auto* inv = app.add_subcommand("invariants", "Braid invariants of a closure");
  inv->add_option("braid", input, "Braid word or file")->required();

  auto* sl = app.add_subcommand("sl", "Self-linking number of a braid closure");
  sl->add_option("braid", input, "Braid word or file")->required();

  auto* stab = app.add_subcommand("stabilize", "Markov stabilization of a braid, or S+/S- of a front");
  stab->add_option("input", input, "Braid word, front, or file")->required();
  stab->add_option("--sign", sign, "positive|negative (also +, -, plus, minus)")->required();
  stab->add_option("--at", at, "Front segment EVENT:LEVEL; selects front stabilization");

  auto* eq = app.add_subcommand("equiv", "Search for a transverse Markov equivalence");
  eq->add_option("a", input, "First braid")->required();
  eq->add_option("b", input_b, "Second braid")->required();
  budget.attach(eq);
  eq->add_option("--extra-strands", extra_strands, "Strands positive stabilization may add")
      ->check(CLI::Range(0, 16))
      ->capture_default_str();

  auto* cert = app.add_subcommand("certify", "Certify overtwisted cyclic branched covers");
  cert->add_option("braid", input, "Braid word or file")->required();
  budget.attach(cert);
  cert->add_option("--n", n, "Also state the conclusion for this cover degree")->check(CLI::Range(2, 1 << 20));
  cert->add_option("--label", label, "Name recorded in the certificate");

  auto* cover = app.add_subcommand("cover", "Order of H1 of the n-fold cyclic branched cover");
  cover->add_option("braid", input, "Braid word or file")->required();
  cover->add_option("--n", n, "Cover degree")->required()->check(CLI::Range(2, 4096));

  auto* contact = app.add_subcommand("contact-check", "Sample the contact condition of a model form");
  contact->add_option("--form", form, "std|sym|ot")->capture_default_str();
  contact->add_option("--grid", grid, "lo:hi:count,lo:hi:count,lo:hi:count in form coordinates");
  contact->add_option("--step", h, "Finite-difference step")->check(CLI::PositiveNumber)->capture_default_str();
  contact->add_option("--tolerance", tol, "Minimum |density| required")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();

  auto* fi = app.add_subcommand("front-invariants", "Classical invariants of a Legendrian front");
  fi->add_option("front", input, "Front text or file")->required();
  fi->add_flag("--trace", trace, "Print a strand trace");
  fi->add_flag("--reverse", reverse, "Reverse the canonical orientation");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  }

  const Format format = format_text == "text" ? Format::text : Format::json;
  try {
    if (inv->parsed()) run_invariants(input, format, out);
    if (sl->parsed()) run_sl(input, format, out);
    if (stab->parsed()) run_stabilize(input, sign, at, format, out);
    if (eq->parsed()) run_equiv(input, input_b, budget, extra_strands, format, out);
    if (cert->parsed()) run_certify(input, budget, n, label, format, out);
    if (cover->parsed()) run_cover(input, n, format, out);
    if (contact->parsed()) run_contact(form, grid, h, tol, format, out);
    if (fi->parsed()) run_front_invariants(input, trace, reverse, format, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }
  return kSuccess;
}

}  // namespace transknot::cli
