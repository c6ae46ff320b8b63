#include "transknot/certificate.hpp"

#include <charconv>
#include <json.hpp>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace transknot {

std::uint64_t OvertwistedCertificate::disk_count(int n) {
  if (n < 2) throw std::invalid_argument("cover degree must be at least 2");
  return static_cast<std::uint64_t>(n);
}

std::string OvertwistedCertificate::conclusion() {
  return "for every n >= 2 the n-fold cyclic branched cover along the closure of the input is "
         "overtwisted, with n overtwisted disks in the complement of the lifted branch locus";
}

std::string OvertwistedCertificate::conclusion(int n) {
  const std::string k = std::to_string(disk_count(n));
  return "the " + std::to_string(n) + "-fold cyclic branched cover along the closure of the input is "
         "overtwisted, with " + k + " overtwisted disks in the complement of the lifted branch locus";
}

std::optional<OvertwistedCertificate> certify_overtwisted(const TransverseBraid& k,
                                                          const SearchBudget& budget) {
  auto witness = find_destabilization(k.braid, budget);
  if (!witness) return std::nullopt;
  const ReplayResult replay = validate_witness(k.braid, *witness);
  if (!replay.ok) throw std::logic_error("destabilization search returned a bad witness: " + replay.message);
  return OvertwistedCertificate{k, std::move(*witness), budget, replay.destabilized};
}

ReplayResult verify_certificate(const OvertwistedCertificate& c) {
  ReplayResult r = validate_witness(c.input.braid, c.witness);
  if (!r.ok) return r;
  if (r.destabilized != c.destabilized) {
    r.ok = false;
    r.message = "recorded destabilization " + serialize(c.destabilized) + " differs from replay " +
                serialize(r.destabilized);
    return r;
  }
  if (self_linking(c.input.braid) != self_linking(c.destabilized) - 2) {
    r.ok = false;
    r.message = "self-linking of input is not two less than the destabilization";
  }
  return r;
}

// ---------------------------------------------------------------------------
// otw-cert v1
//
//   otw-cert v1
//   input: B3: 1 1 1 -2
//   label: <text>                  (optional)
//   budget: depth=6 states=50000 braid-relations=off
//   steps: <count>
//   step: <move>                   (count lines)
//   terminal: <position>
//   destabilized: B2: 1 1 1
//   self-linking: <input> <destabilized>
//   conclusion: <sentence>
//   disks: n
//   end

std::string serialize(const OvertwistedCertificate& c) {
  std::ostringstream out;
  out << kCertificateHeader << '\n';
  out << "input: " << serialize(c.input.braid) << '\n';
  if (c.input.label) out << "label: " << *c.input.label << '\n';
  out << "budget: " << to_string(c.budget) << '\n';
  out << "steps: " << c.witness.steps.size() << '\n';
  for (const Move& m : c.witness.steps) out << "step: " << to_string(m) << '\n';
  out << "terminal: " << c.witness.terminal << '\n';
  out << "destabilized: " << serialize(c.destabilized) << '\n';
  out << "self-linking: " << self_linking(c.input.braid) << ' ' << self_linking(c.destabilized) << '\n';
  out << "conclusion: " << OvertwistedCertificate::conclusion() << '\n';
  out << "disks: n\n";
  out << "end\n";
  return out.str();
}

namespace {

struct LineReader {
  std::vector<std::pair<std::string, std::size_t>> lines;  // text, byte offset
  std::size_t next = 0;

  explicit LineReader(std::string_view text) {
    std::size_t start = 0;
    while (start < text.size()) {
      std::size_t stop = text.find('\n', start);
      if (stop == std::string_view::npos) stop = text.size();
      std::string line(text.substr(start, stop - start));
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty()) lines.emplace_back(std::move(line), start);
      start = stop + 1;
    }
  }

  bool done() const { return next >= lines.size(); }
  std::size_t offset() const { return done() ? (lines.empty() ? 0 : lines.back().second) : lines[next].second; }
  bool peek_key(std::string_view key) const {
    return !done() && std::string_view(lines[next].first).starts_with(std::string(key) + ":");
  }
  std::string value(std::string_view key) {
    if (!peek_key(key)) throw ParseError("expected '" + std::string(key) + ":' line", offset());
    std::string v = lines[next].first.substr(key.size() + 1);
    if (!v.empty() && v.front() == ' ') v.erase(0, 1);
    ++next;
    return v;
  }
};

std::size_t parse_count(const std::string& text, std::size_t offset) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) throw ParseError("expected a count", offset);
  return v;
}

SearchBudget parse_budget(const std::string& text, std::size_t offset) {
  SearchBudget b;
  std::istringstream in(text);
  std::string field;
  int seen = 0;
  while (in >> field) {
    const auto eq = field.find('=');
    if (eq == std::string::npos) throw ParseError("bad budget field '" + field + "'", offset);
    const std::string key = field.substr(0, eq), val = field.substr(eq + 1);
    if (key == "depth") {
      b.max_depth = static_cast<int>(parse_count(val, offset));
    } else if (key == "states") {
      b.max_states = parse_count(val, offset);
    } else if (key == "braid-relations") {
      if (val != "on" && val != "off") throw ParseError("braid-relations must be on or off", offset);
      b.braid_relations = val == "on";
    } else {
      throw ParseError("unknown budget field '" + key + "'", offset);
    }
    ++seen;
  }
  if (seen != 3) throw ParseError("budget needs depth, states and braid-relations", offset);
  return b;
}

}  // namespace

OvertwistedCertificate parse_certificate(std::string_view text) {
  LineReader r(text);
  if (r.done() || r.lines[0].first != kCertificateHeader) {
    throw ParseError("missing '" + std::string(kCertificateHeader) + "' header", 0);
  }
  ++r.next;
  OvertwistedCertificate c;
  c.input.braid = parse_braid(r.value("input"));
  if (r.peek_key("label")) c.input.label = r.value("label");
  {
    const std::size_t at = r.offset();
    c.budget = parse_budget(r.value("budget"), at);
  }
  const std::size_t steps_at = r.offset();
  const std::size_t count = parse_count(r.value("steps"), steps_at);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t at = r.offset();
    try {
      c.witness.steps.push_back(parse_move(r.value("step")));
    } catch (const ParseError& e) {
      throw ParseError(std::string("bad step: ") + e.what(), at);
    }
  }
  {
    const std::size_t at = r.offset();
    c.witness.terminal = parse_count(r.value("terminal"), at);
  }
  c.destabilized = parse_braid(r.value("destabilized"));
  {
    const std::size_t at = r.offset();
    std::istringstream sl(r.value("self-linking"));
    long long a = 0, b = 0;
    if (!(sl >> a >> b) || a != self_linking(c.input.braid) || b != self_linking(c.destabilized)) {
      throw ParseError("self-linking line does not match the recorded braids", at);
    }
  }
  {
    const std::size_t at = r.offset();
    if (r.value("conclusion") != OvertwistedCertificate::conclusion()) {
      throw ParseError("unrecognized conclusion", at);
    }
  }
  {
    const std::size_t at = r.offset();
    if (r.value("disks") != "n") throw ParseError("expected 'disks: n'", at);
  }
  if (r.done() || r.lines[r.next].first != "end") throw ParseError("expected 'end'", r.offset());
  ++r.next;
  if (!r.done()) throw ParseError("trailing text after 'end'", r.offset());
  return c;
}

std::string to_json(const OvertwistedCertificate& c) {
  nlohmann::ordered_json j;
  j["format"] = kCertificateHeader;
  j["input"] = serialize(c.input.braid);
  if (c.input.label) j["label"] = *c.input.label;
  j["budget"] = {{"depth", c.budget.max_depth},
                 {"states", c.budget.max_states},
                 {"braid_relations", c.budget.braid_relations}};
  auto steps = nlohmann::ordered_json::array();
  for (const Move& m : c.witness.steps) steps.push_back(to_string(m));
  j["steps"] = std::move(steps);
  j["terminal"] = c.witness.terminal;
  j["destabilized"] = serialize(c.destabilized);
  j["self_linking"] = {self_linking(c.input.braid), self_linking(c.destabilized)};
  j["conclusion"] = OvertwistedCertificate::conclusion();
  j["disks"] = "n";
  return j.dump();
}

}  // namespace transknot
