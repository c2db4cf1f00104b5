#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lognet/network.hpp"
#include "lognet/rules.hpp"

namespace lognet {

/// Recovers the stored rule base: one rule per excitatory link. Terminals
/// become body literals (Negative ones as `not`); an inhibitory link on the
/// rule becomes `not x` when it is a single thing under AsInhibitor (kept as
/// `unless (x)` when that thing already occurs in the rule's body or head),
/// an unless-clause otherwise. The result is canonical. Throws on networks
/// whose inhibitory links carry Negative terminals; the rule language has no
/// written form for those, and no rule ever builds one.
RuleBase readout(const Network& net, Policy policy = Policy::AsInhibitor);

struct EquivalenceResult {
  bool equal = true;
  /// First assignment (in enumeration order) on which the two disagree;
  /// things absent from the map were left Unknown.
  std::map<std::string, bool> witness;
};

/// Exhaustively compares the inferences of two rule bases over every
/// assignment in {True, False, absent}^things and reports the first
/// difference. Throws when things.size() exceeds the bound.
EquivalenceResult equivalent(const RuleBase& a, const RuleBase& b,
                             const std::vector<std::string>& things,
                             Policy policy = Policy::AsInhibitor, size_t bound = 12);

}  // namespace lognet
