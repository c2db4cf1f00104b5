#include "lognet/readout.hpp"

#include <algorithm>
#include <set>

#include "lognet/build.hpp"
#include "lognet/infer.hpp"

namespace lognet {

RuleBase readout(const Network& net, Policy policy) {
  RuleBase out;
  for (const auto& [eid, el] : net.elinks()) {
    Rule rule;
    std::set<std::string> body_things;
    for (const Terminal& t : el.terminals) {
      rule.body.push_back({net.thing(t.neuron), t.polarity == Polarity::Negative});
      body_things.insert(net.thing(t.neuron));
    }
    rule.head = {net.thing(el.head.neuron), el.head.polarity == Polarity::Negative};

    for (const auto& [iid, il] : net.ilinks()) {
      if (il.target != eid) continue;
      std::vector<std::string> clause;
      for (const Terminal& t : il.terminals) {
        if (t.polarity == Polarity::Negative)
          throw error("inhibitory link " + std::to_string(iid) +
                      " has a negative terminal; not expressible as a rule");
        clause.push_back(net.thing(t.neuron));
      }
      if (policy == Policy::AsInhibitor && clause.size() == 1 &&
          clause.front() != rule.head.thing && !body_things.count(clause.front())) {
        body_things.insert(clause.front());
        rule.body.push_back({clause.front(), true});
      } else {
        rule.unless_clauses.push_back(std::move(clause));
      }
    }
    out.add(std::move(rule));
  }
  return canonicalize(out, policy);
}

EquivalenceResult equivalent(const RuleBase& a, const RuleBase& b,
                             const std::vector<std::string>& things,
                             Policy policy, size_t bound) {
  if (things.size() > bound)
    throw error("equivalence check over " + std::to_string(things.size()) +
                " things exceeds the bound of " + std::to_string(bound));
  std::vector<std::string> order(things);
  std::sort(order.begin(), order.end());
  order.erase(std::unique(order.begin(), order.end()), order.end());

  Network na = build(a, policy);
  Network nb = build(b, policy);
  InferOptions opts{.auto_create = true};

  // odometer over {absent, false, true} per thing, last thing fastest
  std::vector<int> digits(order.size(), 0);
  for (;;) {
    FactSet facts;
    for (size_t i = 0; i < order.size(); ++i)
      if (digits[i] != 0) facts.assignments.emplace(order[i], digits[i] == 2);

    InferenceResult ra = infer(na, facts, opts);
    InferenceResult rb = infer(nb, facts, opts);
    auto state_of = [](const InferenceResult& r, const std::string& thing) {
      auto it = r.states.find(thing);
      return it == r.states.end() ? NeuronState{} : it->second;
    };
    std::set<std::string> all;
    for (const auto& [thing, s] : ra.states) all.insert(thing);
    for (const auto& [thing, s] : rb.states) all.insert(thing);
    for (const std::string& thing : all)
      if (state_of(ra, thing) != state_of(rb, thing))
        return {false, facts.assignments};

    size_t i = order.size();
    while (i > 0 && digits[i - 1] == 2) digits[--i] = 0;
    if (i == 0) break;
    ++digits[i - 1];
  }
  return {true, {}};
}

}  // namespace lognet
