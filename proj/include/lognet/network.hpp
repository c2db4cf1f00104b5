#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace lognet {

/// Library-wide error type. Parse errors carry position info in the message.
class error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Truth value of a proposition neuron. Unknown means "not activated":
/// nothing has been perceived or derived about the thing yet.
enum class Truth : std::uint8_t { Unknown = 0, True = 1, False = 2 };

const char* to_string(Truth v);

struct NeuronState {
  Truth value = Truth::Unknown;
  /// Set when conflicting values were asserted. A contradictory neuron
  /// satisfies no terminal.
  bool contradictory = false;

  friend bool operator==(const NeuronState&, const NeuronState&) = default;
};

enum class Polarity : std::uint8_t { Positive, Negative };

using NeuronId = int;
using ELinkId = int;
using ILinkId = int;

/// A link endpoint: a neuron plus the polarity it is read (or written) with.
/// A Positive terminal is satisfied by True, a Negative one by False;
/// Unknown satisfies neither.
struct Terminal {
  NeuronId neuron = -1;
  Polarity polarity = Polarity::Positive;

  friend auto operator<=>(const Terminal&, const Terminal&) = default;
};

/// Conjunctive excitatory link: when every terminal is satisfied and no
/// triggered inhibitory link targets it, it asserts the head terminal's
/// value on the head neuron.
struct ExcitatoryLink {
  ELinkId id = -1;
  std::vector<Terminal> terminals;  // sorted by neuron id, neurons distinct
  Terminal head;

  friend bool operator==(const ExcitatoryLink&, const ExcitatoryLink&) = default;
};

/// Conjunctive inhibitory link: when every terminal is satisfied it blocks
/// the targeted excitatory link from firing.
struct InhibitoryLink {
  ILinkId id = -1;
  std::vector<Terminal> terminals;
  ELinkId target = -1;

  friend bool operator==(const InhibitoryLink&, const InhibitoryLink&) = default;
};

struct NetworkStats {
  int neurons = 0;
  int elinks = 0;
  int ilinks = 0;

  friend bool operator==(const NetworkStats&, const NetworkStats&) = default;
};

/// Thing names are single tokens: letters, digits, '_', '-', '='.
bool valid_thing_name(std::string_view name);

/// The network: one neuron per named thing, plus excitatory and inhibitory
/// links. Links are deduplicated by content; neurons are never removed.
/// Single writer; all read-only operations are safe to run concurrently on
/// an unchanging network.
class Network {
public:
  /// Idempotent: returns the existing id when the thing is already present.
  NeuronId add_neuron(std::string_view thing);
  std::optional<NeuronId> find_neuron(std::string_view thing) const;
  const std::string& thing(NeuronId id) const;
  int neuron_count() const { return static_cast<int>(things_.size()); }
  const std::vector<std::string>& things() const { return things_; }

  ELinkId add_excitatory_link(std::vector<Terminal> terminals, Terminal head);
  ILinkId add_inhibitory_link(std::vector<Terminal> terminals, ELinkId target);

  /// Removes the link and every inhibitory link targeting it; returns the
  /// removed inhibitory link ids in ascending order. Neurons stay.
  std::vector<ILinkId> remove_excitatory_link(ELinkId id);

  bool has_elink(ELinkId id) const { return elinks_.count(id) != 0; }
  bool has_ilink(ILinkId id) const { return ilinks_.count(id) != 0; }
  const ExcitatoryLink& elink(ELinkId id) const;
  const InhibitoryLink& ilink(ILinkId id) const;
  const std::map<ELinkId, ExcitatoryLink>& elinks() const { return elinks_; }
  const std::map<ILinkId, InhibitoryLink>& ilinks() const { return ilinks_; }

  /// Content lookup used by the rule builder; terminals need not be sorted.
  std::optional<ELinkId> find_excitatory_link(std::vector<Terminal> terminals,
                                              Terminal head) const;
  std::optional<ILinkId> find_inhibitory_link(std::vector<Terminal> terminals,
                                              ELinkId target) const;

  NetworkStats stats() const;

  /// Full-graph integrity check; throws lognet::error on a broken invariant.
  void audit() const;

  friend bool operator==(const Network& a, const Network& b);

  /// Used by deserialization to reproduce stored ids exactly.
  void restore_excitatory_link(ExcitatoryLink link);
  void restore_inhibitory_link(InhibitoryLink link);

private:
  std::vector<Terminal> check_terminals(std::vector<Terminal> terminals) const;

  std::vector<std::string> things_;  // neuron id -> name
  std::unordered_map<std::string, NeuronId> by_name_;
  std::map<ELinkId, ExcitatoryLink> elinks_;
  std::map<ILinkId, InhibitoryLink> ilinks_;
  std::map<std::pair<std::vector<Terminal>, Terminal>, ELinkId> elink_index_;
  std::map<std::pair<std::vector<Terminal>, ELinkId>, ILinkId> ilink_index_;
  ELinkId next_elink_ = 0;
  ILinkId next_ilink_ = 0;
};

/// Structural equality up to id renumbering.
bool isomorphic(const Network& a, const Network& b);

}  // namespace lognet
