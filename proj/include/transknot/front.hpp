#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "transknot/errors.hpp"

namespace transknot {

// Front projections are encoded as a left-to-right sequence of Morse events
// over a stack of horizontal strands. Levels are 1-based and counted from
// the top of the stack, so in a pair (l, l+1) strand l is the upper one.
//
//   Birth(l)    left cusp: two new strands at l, l+1
//   Death(l)    right cusp: strands l, l+1 end
//   Crossing(l) strands l, l+1 swap; `over` names the strand that passes in
//               front, by its level before the crossing
//
// For a genuine Legendrian front the overstrand is the one of smaller slope,
// which is the strand entering from the upper level.

class FrontError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class EventKind : std::uint8_t { birth, death, crossing };
enum class Over : std::uint8_t { upper, lower };

struct FrontEvent {
  EventKind kind;
  int level;
  Over over = Over::upper;  // crossings only

  bool operator==(const FrontEvent&) const = default;
};

class FrontDiagram {
 public:
  FrontDiagram() = default;
  // Throws FrontError naming the offending event when the stack walk fails.
  explicit FrontDiagram(std::vector<FrontEvent> events);

  const std::vector<FrontEvent>& events() const noexcept { return events_; }
  std::size_t cusp_count() const;
  std::size_t crossing_count() const;
  // Number of strands present right after event i.
  int width_after(std::size_t i) const;
  // True when every crossing has the upper-entering strand in front.
  bool satisfies_slope_rule() const;

  bool operator==(const FrontDiagram&) const = default;

 private:
  std::vector<FrontEvent> events_;
};

// Empty string when the event list is a valid front, else the reason.
std::string check_front(const std::vector<FrontEvent>& events);

FrontDiagram parse_front(std::string_view text);
std::string serialize(const FrontDiagram& front);

enum class CuspDirection : std::int8_t { up, down };

// A front with every strand given a horizontal direction (+1 rightward,
// -1 leftward) consistent along its component.
class OrientedFront {
 public:
  const FrontDiagram& diagram() const noexcept { return diagram_; }
  int component_count() const noexcept { return components_; }

  // Per-event data; crossing_sign is 0 for cusps, cusp is meaningful only
  // for births and deaths.
  int crossing_sign(std::size_t event) const { return signs_.at(event); }
  CuspDirection cusp(std::size_t event) const { return cusps_.at(event); }
  // Component carrying event i (for crossings, the upper-entering strand's).
  int component_of_event(std::size_t event) const { return event_component_.at(event); }

  int up_cusps() const;
  int down_cusps() const;
  int up_cusps(int component) const;
  int down_cusps(int component) const;

  // The same front with one component traversed backwards.
  OrientedFront reversed(int component) const;
  OrientedFront reversed() const;

  // Direction of the strand at `level` just after event `event`.
  int direction_after(std::size_t event, int level) const;

 private:
  friend OrientedFront orient(const FrontDiagram&);
  void derive();

  FrontDiagram diagram_;
  int components_ = 0;
  std::vector<int> strand_component_;   // by strand id
  std::vector<int> strand_direction_;   // by strand id
  // strands_after_[i][l-1] = strand id at level l after event i
  std::vector<std::vector<int>> strands_after_;
  std::vector<int> signs_;
  std::vector<CuspDirection> cusps_;
  std::vector<int> event_component_;
};

// Canonical orientation: the upper strand of each component's first birth
// runs left to right.
OrientedFront orient(const FrontDiagram& front);

int writhe(const OrientedFront& front);
// writhe - cusps/2; knots only.
int thurston_bennequin(const OrientedFront& front);
// (down - up)/2; knots only. A cusp is down when the traversal passes
// through it from the upper branch to the lower one.
int rotation_number(const OrientedFront& front);
// Self-linking number of the transverse pushoff: tb - r.
int self_linking_of_pushoff(const OrientedFront& front);

enum class StabilizationSign : std::int8_t { plus, minus };

struct SegmentRef {
  std::size_t event;  // segment immediately following this event
  int level;
};

// Replaces the referenced segment by a zigzag (two new cusps, no crossings).
// The shape is chosen from the segment's canonical direction so that S+
// adds two down cusps and S- two up cusps.
FrontDiagram stabilize(const FrontDiagram& front, StabilizationSign sign, SegmentRef where);

// Plain-text strand trace, one column per event.
std::string render_trace(const FrontDiagram& front);

}  // namespace transknot
