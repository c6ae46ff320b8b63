#include "transknot/front.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <numeric>
#include <sstream>

namespace transknot {

namespace {

std::string event_label(std::size_t i) { return "event " + std::to_string(i + 1); }

std::string_view kind_letter(EventKind k) {
  switch (k) {
    case EventKind::birth: return "b";
    case EventKind::death: return "d";
    case EventKind::crossing: return "x";
  }
  return "?";
}

// Replays the stack of strand ids. Births create two fresh ids.
struct StackWalk {
  std::vector<int> stack;
  int next_id = 0;

  struct Cusp {
    int upper, lower;
  };

  // Returns the cusp (for births/deaths) or the (upper, lower) strands
  // entering a crossing. Assumes the event is valid.
  Cusp apply(const FrontEvent& e) {
    const auto at = static_cast<std::size_t>(e.level - 1);
    switch (e.kind) {
      case EventKind::birth: {
        const int u = next_id++, v = next_id++;
        stack.insert(stack.begin() + static_cast<std::ptrdiff_t>(at), {u, v});
        return {u, v};
      }
      case EventKind::death: {
        Cusp c{stack[at], stack[at + 1]};
        stack.erase(stack.begin() + static_cast<std::ptrdiff_t>(at),
                    stack.begin() + static_cast<std::ptrdiff_t>(at) + 2);
        return c;
      }
      case EventKind::crossing: {
        Cusp c{stack[at], stack[at + 1]};
        std::swap(stack[at], stack[at + 1]);
        return c;
      }
    }
    return {-1, -1};
  }
};

}  // namespace

std::string check_front(const std::vector<FrontEvent>& events) {
  long long width = 0;
  for (std::size_t i = 0; i < events.size(); ++i) {
    const auto& e = events[i];
    if (e.level < 1) return event_label(i) + ": level must be at least 1";
    switch (e.kind) {
      case EventKind::birth:
        if (e.level > width + 1) {
          return event_label(i) + ": birth at level " + std::to_string(e.level) + " above a stack of " +
                 std::to_string(width);
        }
        width += 2;
        break;
      case EventKind::death:
      case EventKind::crossing:
        if (e.level + 1 > width) {
          return event_label(i) + ": " + (e.kind == EventKind::death ? "death" : "crossing") +
                 " at level " + std::to_string(e.level) + " needs two strands but the stack has " +
                 std::to_string(width);
        }
        if (e.kind == EventKind::death) width -= 2;
        break;
    }
  }
  if (width != 0) return "front ends with " + std::to_string(width) + " open strands";
  return {};
}

FrontDiagram::FrontDiagram(std::vector<FrontEvent> events) : events_(std::move(events)) {
  if (const std::string err = check_front(events_); !err.empty()) throw FrontError(err);
}

std::size_t FrontDiagram::cusp_count() const {
  return static_cast<std::size_t>(std::count_if(events_.begin(), events_.end(), [](const FrontEvent& e) {
    return e.kind != EventKind::crossing;
  }));
}

std::size_t FrontDiagram::crossing_count() const { return events_.size() - cusp_count(); }

int FrontDiagram::width_after(std::size_t i) const {
  if (i >= events_.size()) throw FrontError("event index out of range");
  int width = 0;
  for (std::size_t j = 0; j <= i; ++j) {
    if (events_[j].kind == EventKind::birth) width += 2;
    if (events_[j].kind == EventKind::death) width -= 2;
  }
  return width;
}

bool FrontDiagram::satisfies_slope_rule() const {
  return std::all_of(events_.begin(), events_.end(), [](const FrontEvent& e) {
    return e.kind != EventKind::crossing || e.over == Over::upper;
  });
}

// ---------------------------------------------------------------------------
// Text format

FrontDiagram parse_front(std::string_view text) {
  std::vector<FrontEvent> events;
  std::size_t i = 0;
  const std::size_t n = text.size();

  auto is_blank = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
  auto skip_blank = [&] {
    while (i < n && is_blank(text[i])) ++i;
  };
  auto at_separator = [&] { return i >= n || text[i] == ';' || text[i] == '\n' || text[i] == '#'; };
  auto read_int = [&](const char* what) {
    skip_blank();
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + n, value);
    if (ec != std::errc() || ptr == text.data() + i) throw ParseError(std::string("expected ") + what, i);
    i = static_cast<std::size_t>(ptr - text.data());
    return value;
  };

  while (i < n) {
    skip_blank();
    if (i >= n) break;
    if (text[i] == '#') {
      while (i < n && text[i] != '\n') ++i;
      continue;
    }
    if (text[i] == ';' || text[i] == '\n') {
      ++i;
      continue;
    }
    const std::size_t start = i;
    const char tag = text[i++];
    if (i < n && !is_blank(text[i])) throw ParseError("expected event tag b, d or x", start);
    FrontEvent e{EventKind::birth, 0, Over::upper};
    switch (tag) {
      case 'b': e.kind = EventKind::birth; break;
      case 'd': e.kind = EventKind::death; break;
      case 'x': e.kind = EventKind::crossing; break;
      default: throw ParseError("expected event tag b, d or x", start);
    }
    e.level = read_int("level");
    skip_blank();
    if (e.kind == EventKind::crossing && !at_separator()) {
      const std::string_view rest = text.substr(i);
      if (rest.starts_with("over=upper")) {
        e.over = Over::upper;
        i += 10;
      } else if (rest.starts_with("over=lower")) {
        e.over = Over::lower;
        i += 10;
      } else {
        throw ParseError("expected over=upper or over=lower", i);
      }
      skip_blank();
    }
    if (!at_separator()) throw ParseError("unexpected text after event", i);
    events.push_back(e);
  }
  return FrontDiagram(std::move(events));
}

std::string serialize(const FrontDiagram& front) {
  std::string out;
  for (const auto& e : front.events()) {
    out += kind_letter(e.kind);
    out += ' ';
    out += std::to_string(e.level);
    if (e.kind == EventKind::crossing) out += e.over == Over::upper ? " over=upper" : " over=lower";
    out += '\n';
  }
  return out;
}

// ---------------------------------------------------------------------------
// Orientation

OrientedFront orient(const FrontDiagram& front) {
  OrientedFront of;
  of.diagram_ = front;
  const auto& events = front.events();

  StackWalk walk;
  std::vector<StackWalk::Cusp> touched(events.size());
  // partner across each strand end: neighbours[id] = {left cusp partner, right cusp partner}
  std::vector<std::array<int, 2>> partner;
  of.strands_after_.reserve(events.size());
  for (std::size_t i = 0; i < events.size(); ++i) {
    touched[i] = walk.apply(events[i]);
    if (static_cast<int>(partner.size()) < walk.next_id) partner.resize(walk.next_id, {-1, -1});
    const auto [u, v] = touched[i];
    if (events[i].kind == EventKind::birth) {
      partner[u][0] = v;
      partner[v][0] = u;
    } else if (events[i].kind == EventKind::death) {
      partner[u][1] = v;
      partner[v][1] = u;
    }
    of.strands_after_.push_back(walk.stack);
  }

  const int strand_count = walk.next_id;
  of.strand_component_.assign(strand_count, -1);
  of.strand_direction_.assign(strand_count, 0);
  for (std::size_t i = 0; i < events.size(); ++i) {
    if (events[i].kind != EventKind::birth) continue;
    const int start = touched[i].upper;
    if (of.strand_component_[start] >= 0) continue;
    const int component = of.components_++;
    // Walk the circle: leave `start` through its right cusp, alternate ends.
    int s = start, dir = +1, end = 1;
    do {
      of.strand_component_[s] = component;
      of.strand_direction_[s] = dir;
      s = partner[s][end];
      dir = -dir;
      end ^= 1;
    } while (s != start);
  }
  of.derive();
  return of;
}

void OrientedFront::derive() {
  const auto& events = diagram_.events();
  signs_.assign(events.size(), 0);
  cusps_.assign(events.size(), CuspDirection::up);
  event_component_.assign(events.size(), -1);

  StackWalk walk;
  for (std::size_t i = 0; i < events.size(); ++i) {
    const auto [u, v] = walk.apply(events[i]);
    const int du = strand_direction_[u];
    const int dl = strand_direction_[v];
    event_component_[i] = strand_component_[u];
    switch (events[i].kind) {
      case EventKind::birth:
        cusps_[i] = du > 0 ? CuspDirection::up : CuspDirection::down;
        break;
      case EventKind::death:
        cusps_[i] = du > 0 ? CuspDirection::down : CuspDirection::up;
        break;
      case EventKind::crossing:
        // Right-hand rule in the (x, z) plane with the upper-entering strand
        // descending and the lower-entering one ascending.
        signs_[i] = (events[i].over == Over::upper ? 1 : -1) * du * dl;
        break;
    }
  }
}

int OrientedFront::up_cusps() const {
  int count = 0;
  for (std::size_t i = 0; i < cusps_.size(); ++i) {
    if (diagram_.events()[i].kind != EventKind::crossing && cusps_[i] == CuspDirection::up) ++count;
  }
  return count;
}

int OrientedFront::down_cusps() const { return static_cast<int>(diagram_.cusp_count()) - up_cusps(); }

int OrientedFront::up_cusps(int component) const {
  int count = 0;
  for (std::size_t i = 0; i < cusps_.size(); ++i) {
    if (diagram_.events()[i].kind != EventKind::crossing && event_component_[i] == component &&
        cusps_[i] == CuspDirection::up) {
      ++count;
    }
  }
  return count;
}

int OrientedFront::down_cusps(int component) const {
  int count = 0;
  for (std::size_t i = 0; i < cusps_.size(); ++i) {
    if (diagram_.events()[i].kind != EventKind::crossing && event_component_[i] == component &&
        cusps_[i] == CuspDirection::down) {
      ++count;
    }
  }
  return count;
}

OrientedFront OrientedFront::reversed(int component) const {
  if (component < 0 || component >= components_) throw FrontError("component index out of range");
  OrientedFront out = *this;
  for (std::size_t s = 0; s < out.strand_direction_.size(); ++s) {
    if (out.strand_component_[s] == component) out.strand_direction_[s] = -out.strand_direction_[s];
  }
  out.derive();
  return out;
}

OrientedFront OrientedFront::reversed() const {
  OrientedFront out = *this;
  for (int& d : out.strand_direction_) d = -d;
  out.derive();
  return out;
}

int OrientedFront::direction_after(std::size_t event, int level) const {
  if (event >= strands_after_.size()) throw FrontError("event index out of range");
  const auto& stack = strands_after_[event];
  if (level < 1 || level > static_cast<int>(stack.size())) {
    throw FrontError("no strand at level " + std::to_string(level) + " after " + event_label(event));
  }
  return strand_direction_[stack[level - 1]];
}

// ---------------------------------------------------------------------------
// Invariants

namespace {

void require_knot(const OrientedFront& front, const char* what) {
  if (front.component_count() != 1) {
    throw FrontError(std::string(what) + " is defined for knots; front has " +
                     std::to_string(front.component_count()) + " components");
  }
}

}  // namespace

int writhe(const OrientedFront& front) {
  int total = 0;
  for (std::size_t i = 0; i < front.diagram().events().size(); ++i) total += front.crossing_sign(i);
  return total;
}

int thurston_bennequin(const OrientedFront& front) {
  require_knot(front, "thurston-bennequin number");
  return writhe(front) - static_cast<int>(front.diagram().cusp_count() / 2);
}

int rotation_number(const OrientedFront& front) {
  require_knot(front, "rotation number");
  const int diff = front.down_cusps() - front.up_cusps();
  if (diff % 2 != 0) throw FrontError("odd down/up cusp difference on a knot front");
  return diff / 2;
}

int self_linking_of_pushoff(const OrientedFront& front) {
  return thurston_bennequin(front) - rotation_number(front);
}

// ---------------------------------------------------------------------------
// Stabilization

FrontDiagram stabilize(const FrontDiagram& front, StabilizationSign sign, SegmentRef where) {
  if (front.events().empty() || where.event >= front.events().size()) {
    throw FrontError("segment reference: no " + event_label(where.event));
  }
  const OrientedFront oriented = orient(front);
  const int width = front.width_after(where.event);
  if (where.level < 1 || where.level > width) {
    throw FrontError("segment reference: no strand at level " + std::to_string(where.level) +
                     " after " + event_label(where.event));
  }
  const int direction = oriented.direction_after(where.event, where.level);

  // Descending zigzag (new pair below, then the old strand dies with the
  // upper new one): traversed rightward both cusps are down.
  const bool descending = (sign == StabilizationSign::plus) == (direction > 0);
  const int l = where.level;
  std::vector<FrontEvent> zigzag;
  if (descending) {
    zigzag = {{EventKind::birth, l + 1}, {EventKind::death, l}};
  } else {
    zigzag = {{EventKind::birth, l}, {EventKind::death, l + 1}};
  }

  std::vector<FrontEvent> events = front.events();
  events.insert(events.begin() + static_cast<std::ptrdiff_t>(where.event) + 1, zigzag.begin(), zigzag.end());
  return FrontDiagram(std::move(events));
}

std::string render_trace(const FrontDiagram& front) {
  const OrientedFront of = orient(front);
  std::ostringstream out;
  const auto& events = front.events();
  std::size_t tag_width = 0;
  for (const auto& e : events) {
    tag_width = std::max(tag_width, std::to_string(e.level).size() + 2 +
                                        (e.kind == EventKind::crossing ? 11 : 0));
  }
  for (std::size_t i = 0; i < events.size(); ++i) {
    const auto& e = events[i];
    std::string tag = std::string(kind_letter(e.kind)) + " " + std::to_string(e.level);
    if (e.kind == EventKind::crossing) tag += e.over == Over::upper ? " over=upper" : " over=lower";
    out << tag << std::string(tag_width - tag.size() + 2, ' ') << '|';
    const int width = front.width_after(i);
    for (int level = 1; level <= width; ++level) out << ' ' << (of.direction_after(i, level) > 0 ? '>' : '<');
    out << '\n';
  }
  return out.str();
}

}  // namespace transknot
