#include "lognet/build.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace lognet {

namespace {

struct Wiring {
  std::vector<Terminal> terminals;
  Terminal head;
  std::vector<std::vector<Terminal>> inhibitors;
};

std::optional<Wiring> wire(Network& net, const Rule& rule, Policy policy, bool create) {
  rule.validate();
  auto neuron = [&](const std::string& thing) -> std::optional<NeuronId> {
    if (create) return net.add_neuron(thing);
    return net.find_neuron(thing);
  };
  Wiring w;
  std::vector<NeuronId> negatives;
  for (const Literal& l : rule.body) {
    auto n = neuron(l.thing);
    if (!n) return std::nullopt;
    if (!l.negated)
      w.terminals.push_back({*n, Polarity::Positive});
    else if (policy == Policy::AsTerminal)
      w.terminals.push_back({*n, Polarity::Negative});
    else
      negatives.push_back(*n);
  }
  for (const auto& clause : rule.unless_clauses) {
    std::set<NeuronId> seen;
    std::vector<Terminal> ts;
    for (const std::string& t : clause) {
      auto n = neuron(t);
      if (!n) return std::nullopt;
      if (seen.insert(*n).second) ts.push_back({*n, Polarity::Positive});
    }
    w.inhibitors.push_back(std::move(ts));
  }
  auto h = neuron(rule.head.thing);
  if (!h) return std::nullopt;
  w.head = {*h, rule.head.negated ? Polarity::Negative : Polarity::Positive};
  for (NeuronId n : negatives) w.inhibitors.push_back({{n, Polarity::Positive}});
  return w;
}

}  // namespace

RuleHandle add_rule(Network& net, const Rule& rule, Policy policy) {
  Wiring w = *wire(net, rule, policy, true);
  RuleHandle handle;
  handle.elink = net.add_excitatory_link(std::move(w.terminals), w.head);
  for (auto& ts : w.inhibitors)
    handle.ilinks.push_back(net.add_inhibitory_link(std::move(ts), handle.elink));
  std::sort(handle.ilinks.begin(), handle.ilinks.end());
  handle.ilinks.erase(std::unique(handle.ilinks.begin(), handle.ilinks.end()),
                      handle.ilinks.end());
  return handle;
}

Network build(const RuleBase& rules, Policy policy) {
  Network net;
  for (const Rule& r : rules.rules()) add_rule(net, r, policy);
  return net;
}

void remove_rule(Network& net, const Rule& rule, Policy policy) {
  auto w = wire(net, rule, policy, false);
  std::optional<ELinkId> found;
  if (w) found = net.find_excitatory_link(w->terminals, w->head);
  if (!found) throw error("no such rule in the network: " + format_rule(rule));
  net.remove_excitatory_link(*found);
}

}  // namespace lognet
