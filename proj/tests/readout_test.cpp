#include <string>

#include "doctest.h"
#include "lognet/build.hpp"
#include "lognet/readout.hpp"

using namespace lognet;

namespace {

void check_round_trip(const RuleBase& rules, Policy policy) {
  Network net = build(rules, policy);
  RuleBase back = readout(net, policy);
  CHECK(format_rules(back) == format_rules(canonicalize(rules, policy)));
  CHECK(isomorphic(build(back, policy), net));
}

}  // namespace

TEST_CASE("readout recovers the stored rules") {
  for (Policy policy : {Policy::AsInhibitor, Policy::AsTerminal}) {
    CAPTURE(to_string(policy));
    check_round_trip(load_rules(std::string(LOGNET_DATA_DIR) + "/animal.rules"), policy);
    check_round_trip(load_rules(std::string(LOGNET_DATA_DIR) + "/bone.rules"), policy);
    check_round_trip(load_rules(std::string(LOGNET_DATA_DIR) + "/patient.rules"), policy);
    check_round_trip(load_rules(std::string(LOGNET_DATA_DIR) + "/xor.rules"), policy);
    check_round_trip(parse_rules("if b unless (c) then c\n"), policy);
    check_round_trip(parse_rules("if a unless (a) then c\n"), policy);
    check_round_trip(parse_rules("if a, not b unless (x and y) then not c\n"
                                 "if a unless (w) then not c\n"
                                 "if w, x, y, not a then c\n"),
                     policy);
  }
}

TEST_CASE("readout of nothing is nothing") {
  CHECK(readout(Network{}).empty());
}

TEST_CASE("rules that share a link read back as one rule") {
  RuleBase rules = parse_rules("if a, not b then c\nif a unless (d and e) then c\n");
  Network net = build(rules, Policy::AsInhibitor);
  RuleBase back = readout(net, Policy::AsInhibitor);
  CHECK(format_rules(back) == "if a, not b unless (d and e) then c\n");
  CHECK(format_rules(back) == format_rules(canonicalize(rules, Policy::AsInhibitor)));
}

TEST_CASE("single inhibitors print as clauses when the body already has the thing") {
  Network net;
  NeuronId a = net.add_neuron("a");
  NeuronId c = net.add_neuron("c");
  ELinkId e = net.add_excitatory_link({{a, Polarity::Positive}}, {c, Polarity::Positive});
  net.add_inhibitory_link({{a, Polarity::Positive}}, e);
  net.add_inhibitory_link({{c, Polarity::Positive}}, e);
  CHECK(format_rules(readout(net, Policy::AsInhibitor)) ==
        "if a unless (a) unless (c) then c\n");
}

TEST_CASE("a network nothing can write down is rejected") {
  Network net;
  NeuronId a = net.add_neuron("a");
  NeuronId b = net.add_neuron("b");
  NeuronId c = net.add_neuron("c");
  ELinkId e = net.add_excitatory_link({{a, Polarity::Positive}}, {c, Polarity::Positive});
  net.add_inhibitory_link({{b, Polarity::Negative}}, e);
  CHECK_THROWS_AS(readout(net, Policy::AsInhibitor), error);
  CHECK_THROWS_AS(readout(net, Policy::AsTerminal), error);
}

TEST_CASE("distinct rule sets build distinct networks") {
  RuleBase s1 = parse_rules("if a, b then c\n");
  RuleBase s2 = parse_rules("if a then c\nif b then c\n");
  RuleBase s3 = parse_rules("if a, not b then c\nif b, not a then c\n");
  Network n1 = build(s1), n2 = build(s2), n3 = build(s3);
  CHECK_FALSE(isomorphic(n1, n2));
  CHECK_FALSE(isomorphic(n2, n3));
  CHECK_FALSE(isomorphic(n1, n3));
  CHECK(format_rules(readout(n1)) != format_rules(readout(n2)));
  CHECK(format_rules(readout(n2)) != format_rules(readout(n3)));
}

TEST_CASE("bounded equivalence search") {
  RuleBase guarded = parse_rules("if a, not b then c\n");
  RuleBase plain = parse_rules("if a then c\n");

  EquivalenceResult r = equivalent(guarded, plain, {"a", "b"});
  CHECK_FALSE(r.equal);
  CHECK(r.witness == std::map<std::string, bool>{{"a", true}, {"b", true}});

  // canonicalization preserves meaning
  RuleBase messy = parse_rules(
      "if b, a unless (q) then c\n"
      "if a, b, not q then c\n"
      "if z then not c\n");
  for (Policy policy : {Policy::AsInhibitor, Policy::AsTerminal}) {
    EquivalenceResult same =
        equivalent(messy, canonicalize(messy, policy), {"a", "b", "q", "z"}, policy);
    CHECK(same.equal);
  }

  // under the stricter policy the guard only bites on a known-false b
  EquivalenceResult strict = equivalent(guarded, plain, {"a", "b"}, Policy::AsTerminal);
  CHECK_FALSE(strict.equal);
  CHECK(strict.witness == std::map<std::string, bool>{{"a", true}});

  RuleBase two = parse_rules("if a then x\nif b then y\n");
  RuleBase one = parse_rules("if a then x\n");
  CHECK_FALSE(equivalent(two, one, {"a", "b"}).equal);

  CHECK_THROWS_AS(equivalent(plain, plain, std::vector<std::string>(13, "t")), error);
}
