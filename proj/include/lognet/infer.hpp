#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "lognet/network.hpp"

namespace lognet {

/// Input assignment: each listed thing is perceived True or False; every
/// other thing starts Unknown.
struct FactSet {
  std::map<std::string, bool> assignments;

  friend bool operator==(const FactSet&, const FactSet&) = default;
};

/// Text form: one `thing=true|false` per line, `#` comments. The split is on
/// the last '=' so value-bearing things like `gender=woman` work.
FactSet parse_facts(std::string_view text);
FactSet load_facts(const std::string& path);

struct InferOptions {
  /// Facts naming things absent from the network become isolated given
  /// values instead of an error. The network itself is never modified.
  bool auto_create = false;
};

/// One state-changing event: a link set a neuron's value, or (conflict) its
/// assertion disagreed with the neuron's value and flagged it.
struct TraceRow {
  int round = 0;
  ELinkId link = -1;
  std::string thing;
  Truth value = Truth::Unknown;  // the value the link asserted
  bool conflict = false;

  friend bool operator==(const TraceRow&, const TraceRow&) = default;
};

struct InferenceResult {
  std::map<std::string, NeuronState> states;
  std::set<ELinkId> fired;
  /// Links triggered in the final state that never fired, with the
  /// inhibitory links holding them back.
  std::map<ELinkId, std::set<ILinkId>> blocked;
  std::set<std::string> contradictions;
  /// Fired links whose inhibitors are triggered in the final state; their
  /// conclusions stand but arrived before the inhibition did.
  std::set<ELinkId> unstable;
  std::vector<TraceRow> trace;
  int rounds = 0;  // rounds that changed something

  friend bool operator==(const InferenceResult&, const InferenceResult&) = default;
};

/// Propagates activations in simultaneous rounds until a round changes
/// nothing. Each round evaluates every link against the pre-round states: a
/// terminal is satisfied by a matching, non-contradictory value; an
/// excitatory link fires when all terminals are satisfied and no satisfied
/// inhibitory link targets it. Firings assert heads in ascending link id
/// order: Unknown takes the value, agreement is a no-op, disagreement flags
/// the neuron contradictory (the standing value is kept). Facts are never
/// overwritten.
InferenceResult infer(const Network& net, const FactSet& facts, InferOptions opts = {});

/// Tab-separated trace rows: round, link id, neuron, value ("conflict" for
/// contradiction events).
std::string format_trace(const std::vector<TraceRow>& trace);

struct StratificationEntry {
  ILinkId ilink = -1;
  ELinkId target = -1;
  std::vector<std::string> derivable_terminals;  // sorted

  friend bool operator==(const StratificationEntry&, const StratificationEntry&) = default;
};

struct StratificationReport {
  std::vector<StratificationEntry> entries;  // by ilink id
  bool ok() const { return entries.empty(); }
};

/// Flags every inhibitory link with a terminal neuron reachable from its
/// target's head neuron along excitatory links (terminal neuron to head
/// neuron, head included). Such inhibitors can depend on what their target
/// concludes, making firings order-sensitive.
StratificationReport stratification_check(const Network& net);

/// Derivation tree for one thing: the link that set it, each terminal's own
/// justification, down to "(given)" facts. Unknown things list their
/// triggered-but-blocked links, if any.
std::string explain(const Network& net, const InferenceResult& result,
                    const std::string& thing);

}  // namespace lognet
