#pragma once

#include <vector>

#include "lognet/network.hpp"
#include "lognet/rules.hpp"

namespace lognet {

/// The links one rule compiled to. When rules share an excitatory link the
/// handle points at the shared link.
struct RuleHandle {
  ELinkId elink = -1;
  std::vector<ILinkId> ilinks;  // ascending

  friend bool operator==(const RuleHandle&, const RuleHandle&) = default;
};

/// Wires one rule into the network: a neuron per thing, one excitatory link
/// for the body and head, and inhibitory links for unless-clauses (plus one
/// per negative body literal under AsInhibitor). Idempotent per rule.
RuleHandle add_rule(Network& net, const Rule& rule, Policy policy = Policy::AsInhibitor);

Network build(const RuleBase& rules, Policy policy = Policy::AsInhibitor);

/// Deletes the rule's excitatory link and, by cascade, every inhibitory
/// link targeting it. Neurons stay. Throws when the rule's link is absent.
void remove_rule(Network& net, const Rule& rule, Policy policy = Policy::AsInhibitor);

}  // namespace lognet
