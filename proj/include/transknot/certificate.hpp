#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "transknot/braid.hpp"
#include "transknot/transverse.hpp"

namespace transknot {

inline constexpr std::string_view kCertificateHeader = "otw-cert v1";

// States that every n-fold cyclic branched cover (n >= 2) along the closure
// of `input` is overtwisted, with n overtwisted disks in the complement of
// the lifted branch locus. The hypothesis, that `input` is a negative braid
// stabilization, is carried by `witness` and checked by replay.
struct OvertwistedCertificate {
  TransverseBraid input;
  MoveWitness witness;
  SearchBudget budget;
  BraidWord destabilized;  // the braid `input` stabilizes

  // Number of overtwisted disks found in the n-fold cover.
  static std::uint64_t disk_count(int n);
  static std::string conclusion();
  // The conclusion for one cover degree.
  static std::string conclusion(int n);

  bool operator==(const OvertwistedCertificate&) const = default;
};

// nullopt means no witness was found within the budget; it never means the
// covers are tight.
std::optional<OvertwistedCertificate> certify_overtwisted(const TransverseBraid& k,
                                                          const SearchBudget& budget = {});

// Replays the witness and checks the recorded destabilization and
// self-linking drop. Independent of the search.
ReplayResult verify_certificate(const OvertwistedCertificate& certificate);

std::string serialize(const OvertwistedCertificate& certificate);
OvertwistedCertificate parse_certificate(std::string_view text);
// Single-line JSON object.
std::string to_json(const OvertwistedCertificate& certificate);

}  // namespace transknot
