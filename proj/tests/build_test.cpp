#include <algorithm>
#include <set>
#include <string>

#include "doctest.h"
#include "lognet/build.hpp"
#include "lognet/serialize.hpp"

using namespace lognet;

namespace {

// independent size oracle: walk the rule text, no network involved
struct TokenWalk {
  std::set<std::string> things;
  std::set<std::pair<std::vector<Literal>, Literal>> elink_keys;
  std::set<std::pair<std::vector<std::string>, std::pair<std::vector<Literal>, Literal>>>
      ilink_keys;
};

TokenWalk walk(const RuleBase& rules, Policy policy) {
  TokenWalk tw;
  for (const Rule& r : rules.rules()) {
    std::vector<Literal> sig;
    std::vector<std::vector<std::string>> inhibitors;
    for (const Literal& l : r.body) {
      tw.things.insert(l.thing);
      if (!l.negated || policy == Policy::AsTerminal)
        sig.push_back(l);
      else
        inhibitors.push_back({l.thing});
    }
    for (const auto& clause : r.unless_clauses) {
      std::set<std::string> dedup(clause.begin(), clause.end());
      tw.things.insert(dedup.begin(), dedup.end());
      inhibitors.emplace_back(dedup.begin(), dedup.end());
    }
    tw.things.insert(r.head.thing);
    std::sort(sig.begin(), sig.end());
    auto key = std::make_pair(sig, r.head);
    tw.elink_keys.insert(key);
    for (auto& inh : inhibitors) tw.ilink_keys.insert({inh, key});
  }
  return tw;
}

const char* kBoneRules =
    "if antinflam-none, patient-21-35, continuous-pain, no-fever then primary-malignant\n"
    "if antinflam-none, patient-21-35, night-pain then primary-malignant\n"
    "if antinflam-none, patient-0-20, continuous-pain, no-fever then primary-malignant\n"
    "if antinflam-none, patient-0-20, night-pain, no-fever then primary-malignant\n";

}  // namespace

TEST_CASE("the four bone-tumor rules compile to one link each over 7 neurons") {
  RuleBase rules = parse_rules(kBoneRules);
  TokenWalk tw = walk(rules, Policy::AsInhibitor);
  CHECK(tw.things.size() == 7);
  CHECK(tw.elink_keys.size() == 4);
  CHECK(tw.ilink_keys.empty());

  Network net = build(rules);
  CHECK(net.stats() == NetworkStats{7, 4, 0});
  net.audit();
}

TEST_CASE("exclusive-or as two guarded rules") {
  RuleBase rules = parse_rules("if a, not b then c\nif b, not a then c\n");
  Network net = build(rules, Policy::AsInhibitor);
  CHECK(net.stats() == NetworkStats{3, 2, 2});

  // the stricter encoding puts the negations on the links themselves
  Network strict = build(rules, Policy::AsTerminal);
  CHECK(strict.stats() == NetworkStats{3, 2, 0});
}

TEST_CASE("empty rule base gives an empty network") {
  CHECK(build(RuleBase{}).stats() == NetworkStats{0, 0, 0});
}

TEST_CASE("build ignores duplication and ordering") {
  RuleBase rules = parse_rules(
      "if hair then mammal\n"
      "if mammal, hoof then ungulate\n"
      "if mammal, predator unless (toothless) then beast\n");
  RuleBase doubled;
  for (const Rule& r : rules.rules()) doubled.add(r);
  for (const Rule& r : rules.rules()) {
    Rule copy = r;  // same rules again; RuleBase::add drops them
    CHECK_FALSE(doubled.add(copy));
  }
  CHECK(build(doubled) == build(rules));

  RuleBase reversed;
  for (auto it = rules.rules().rbegin(); it != rules.rules().rend(); ++it) reversed.add(*it);
  Network a = build(rules);
  Network b = build(reversed);
  CHECK(isomorphic(a, b));
  CHECK(a.stats() == b.stats());

  // rebuilding the same rule into a network changes nothing
  Network net = build(rules);
  std::string before = serialize(net);
  for (const Rule& r : rules.rules()) add_rule(net, r);
  CHECK(serialize(net) == before);
}

TEST_CASE("policies agree on purely positive rule bases") {
  RuleBase rules = parse_rules(kBoneRules);
  CHECK(build(rules, Policy::AsInhibitor) == build(rules, Policy::AsTerminal));
}

TEST_CASE("adding then removing a rule leaves the links as they were") {
  RuleBase rules = parse_rules(
      "if hair then mammal\n"
      "if mammal, predator unless (toothless) then beast\n");
  Network net = build(rules);
  std::string before = serialize(net);

  Rule extra = parse_rule("if feathers, not airborne unless (mammal) then oddball");
  RuleHandle handle = add_rule(net, extra);
  CHECK(net.has_elink(handle.elink));
  CHECK(handle.ilinks.size() == 2);

  remove_rule(net, extra);
  CHECK_FALSE(net.has_elink(handle.elink));
  for (ILinkId iid : handle.ilinks) CHECK_FALSE(net.has_ilink(iid));
  // neurons stay; links are exactly the old ones
  Network reference = deserialize(before);
  for (const std::string& thing : reference.things()) CHECK(net.find_neuron(thing));
  CHECK(net.elinks() == reference.elinks());
  CHECK(net.ilinks() == reference.ilinks());
  CHECK(net.find_neuron("oddball"));
}

TEST_CASE("add then remove on an empty network keeps only neurons") {
  Network net;
  Rule r = parse_rule("if a, not b unless (d) then c");
  add_rule(net, r);
  remove_rule(net, r);
  CHECK(net.stats() == NetworkStats{4, 0, 0});
}

TEST_CASE("removing a rule that was never added fails") {
  Network net = build(parse_rules("if a then c\n"));
  CHECK_THROWS_WITH_AS(remove_rule(net, parse_rule("if b then c")),
                       "no such rule in the network: if b then c", error);
  // same body, wrong polarity on the head
  CHECK_THROWS_AS(remove_rule(net, parse_rule("if a then not c")), error);
  // same rule under the other policy differs once negatives are involved
  Network guarded = build(parse_rules("if a, not b then c\n"), Policy::AsInhibitor);
  CHECK_THROWS_AS(remove_rule(guarded, parse_rule("if a, not b then c"), Policy::AsTerminal),
                  error);
}

TEST_CASE("rules sharing body and head share the excitatory link") {
  Network net;
  RuleHandle h1 = add_rule(net, parse_rule("if a, not b then c"));
  RuleHandle h2 = add_rule(net, parse_rule("if a unless (d and e) then c"));
  CHECK(h1.elink == h2.elink);
  CHECK(net.stats() == NetworkStats{5, 1, 2});
  // removing "either rule" removes the shared link and every inhibitor
  remove_rule(net, parse_rule("if a, not b then c"));
  CHECK(net.stats() == NetworkStats{5, 0, 0});
}

TEST_CASE("all-negative bodies cannot form an excitatory link under the default policy") {
  RuleBase rules = parse_rules("if not a, not b then c\n");
  CHECK_THROWS_AS(build(rules, Policy::AsInhibitor), error);
  CHECK(build(rules, Policy::AsTerminal).stats() == NetworkStats{3, 1, 0});
}

TEST_CASE("the animal rule file sizes up as counted by hand") {
  RuleBase rules = load_rules(std::string(LOGNET_DATA_DIR) + "/animal.rules");
  CHECK(rules.size() == 14);
  TokenWalk tw = walk(rules, Policy::AsInhibitor);
  Network net = build(rules);
  CHECK(net.stats().neurons == static_cast<int>(tw.things.size()));
  CHECK(net.stats().elinks == static_cast<int>(tw.elink_keys.size()));
  CHECK(net.stats().ilinks == static_cast<int>(tw.ilink_keys.size()));
  CHECK(net.stats() == NetworkStats{27, 14, 2});
}
