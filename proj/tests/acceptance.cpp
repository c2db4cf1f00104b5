// Acceptance gate: each numbered check prints one PASS or FAIL line with its
// pinned tolerance or bound. The final check reruns everything and compares
// the collected reports and serialized networks byte for byte. Exit status
// is the number of failing checks.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "lognet/build.hpp"
#include "lognet/dataset.hpp"
#include "lognet/gates.hpp"
#include "lognet/infer.hpp"
#include "lognet/neurule.hpp"
#include "lognet/readout.hpp"
#include "lognet/rules.hpp"
#include "lognet/serialize.hpp"
#include "support/generators.hpp"
#include "support/oracle.hpp"

using namespace lognet;
using namespace lognet::testsupport;

namespace {

constexpr double kTol = 1e-9;
const std::string kData = LOGNET_DATA_DIR;

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;      // first failure reason
  std::string transcript;  // everything the run printed or serialized

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
  void require(bool ok, const std::string& why) {
    if (!ok) fail(why);
  }
};

std::uint64_t fnv1a(std::string_view s, std::uint64_t h = 1469598103934665603ull) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string state_text(const std::map<std::string, NeuronState>& states) {
  std::string out;
  for (const auto& [thing, s] : states) {
    out += thing;
    out += '=';
    out += to_string(s.value);
    if (s.contradictory) out += " contradictory";
    out += '\n';
  }
  return out;
}

Truth value_of(const InferenceResult& r, const std::string& thing) {
  auto it = r.states.find(thing);
  return it == r.states.end() ? Truth::Unknown : it->second.value;
}

FactSet body_facts(const Rule& rule) {
  FactSet f;
  for (const Literal& l : rule.body) f.assignments.emplace(l.thing, !l.negated);
  return f;
}

// 1. every gate truth table exact, and quickly
Outcome check_gates() {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  for (Gate g : all_gates()) {
    GateCheck check = truth_table_check(g);
    if (!check.pass) {
      std::string row = check.failing
                            ? std::string(check.failing->a ? "T" : "F") +
                                  (check.failing->b ? "T" : "F")
                            : "?";
      o.fail(std::string(gate_name(g)) + " wrong at row " + row);
    }
    o.transcript += gate_table(g);
    o.transcript += serialize(gate_network(g));
  }
  double dt = seconds_since(t0);
  o.require(dt < 1.0, "took " + std::to_string(dt) + "s");
  return o;
}

// 2. three neurons per gate against the seven of a layered model
Outcome check_gate_size() {
  Outcome o;
  for (Gate g : all_gates()) {
    int n = gate_network(g).neuron_count();
    o.require(n == 3, std::string(gate_name(g)) + " has " + std::to_string(n) + " neurons");
    o.transcript += std::string(gate_name(g)) + ": " + std::to_string(n) + " vs " +
                    std::to_string(layered_gate_neurons) + "\n";
  }
  o.require(layered_gate_neurons == 7, "layered count is not 7");
  return o;
}

// 3. threshold-unit sums and the two single-parameter adjustments
Outcome check_neurule() {
  Outcome o;
  AdjustmentReport report = adjustment_experiment(bone_neurule());
  o.require(report.variants.size() == 3, "expected three variants");
  if (!o.pass) return o;

  const auto& original = report.variants[0];
  const auto& bias17 = report.variants[1];
  const auto& night = report.variants[2];
  const double want_original[] = {7.2, 3.5, 6.4, 7.2};
  const bool want_night_ok[] = {false, true, false, true};
  for (size_t i = 0; i < 4; ++i) {
    o.require(std::abs(original.outputs[i].sum - want_original[i]) < kTol,
              "original sum " + std::to_string(i + 1));
    o.require(original.outputs[i].output, "original misses case " + std::to_string(i + 1));
    o.require(night.outputs[i].output == want_night_ok[i],
              "night-pain-19.6 wrong on case " + std::to_string(i + 1));
  }
  o.require(std::abs(bias17.outputs[0].sum - -0.1) < kTol, "bias-17 sum 1");
  o.require(std::abs(bias17.outputs[2].sum - -0.9) < kTol, "bias-17 sum 3");
  o.require(std::abs(bias17.outputs[3].sum - -0.1) < kTol, "bias-17 sum 4");
  o.require(!bias17.outputs[0].output && !bias17.outputs[2].output && !bias17.outputs[3].output,
            "bias-17 still represents a dropped case");
  o.transcript += format_adjustment(report);
  return o;
}

// 4. removing one rule leaves the other three intact and readable
Outcome check_removal() {
  Outcome o;
  RuleBase rules = load_rules(kData + "/bone.rules");
  o.require(rules.size() == 4, "fixture should hold 4 rules");
  if (!o.pass) return o;

  Network net = build(rules);
  remove_rule(net, rules.rules()[0]);
  for (size_t i = 1; i < 4; ++i) {
    InferenceResult r = infer(net, body_facts(rules.rules()[i]));
    o.require(value_of(r, "primary-malignant") == Truth::True,
              "rule " + std::to_string(i + 1) + " no longer concludes");
    o.transcript += state_text(r.states);
  }

  RuleBase rest;
  for (size_t i = 1; i < 4; ++i) rest.add(rules.rules()[i]);
  std::string got = format_rules(readout(net));
  std::string want = format_rules(canonicalize(rest, Policy::AsInhibitor));
  o.require(got == want, "readout differs from the remaining rules");
  o.transcript += got;
  o.transcript += serialize(net);
  return o;
}

// 5. readout inverts build, on the fixtures and at random
Outcome check_round_trip() {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  for (const char* name : {"animal", "patient", "bone"}) {
    RuleBase rules = load_rules(kData + "/" + name + ".rules");
    for (Policy policy : {Policy::AsInhibitor, Policy::AsTerminal}) {
      std::string got = format_rules(readout(build(rules, policy), policy));
      std::string want = format_rules(canonicalize(rules, policy));
      o.require(got == want, std::string(name) + " round trip under " + to_string(policy));
      o.transcript += got;
      o.transcript += serialize(build(rules, policy));
    }
  }
  Rng rng(505);
  for (int i = 0; i < 1000; ++i) {
    RuleBase rules = random_rule_base(rng);
    for (Policy policy : {Policy::AsInhibitor, Policy::AsTerminal}) {
      std::string got = format_rules(readout(build(rules, policy), policy));
      std::string want = format_rules(canonicalize(rules, policy));
      if (got != want) o.fail("random base " + std::to_string(i) + " under " + to_string(policy));
      o.transcript += got;
    }
  }
  double dt = seconds_since(t0);
  o.require(dt < 10.0, "took " + std::to_string(dt) + "s");
  return o;
}

// 6. the worked classification example: direct step and full chain
Outcome check_animal() {
  Outcome o;
  Network net = build(load_rules(kData + "/animal.rules"));

  InferenceResult direct = infer(net, parse_facts("mammal=true\npredator=true\n"));
  o.require(value_of(direct, "beast") == Truth::True, "beast not derived");
  o.require(value_of(direct, "ungulate") == Truth::Unknown, "ungulate should stay unknown");
  o.transcript += state_text(direct.states);

  InferenceResult chain = infer(
      net, parse_facts("hair=true\npredator=true\nyellow=true\nspots=true\n"));
  o.require(value_of(chain, "leopard") == Truth::True, "leopard not derived");
  o.require(chain.rounds <= 4, "took " + std::to_string(chain.rounds) + " rounds");
  o.transcript += state_text(chain.states);
  o.transcript += serialize(net);
  return o;
}

// 7. network inference equals rule-level forward chaining, exhaustively
Outcome check_oracle() {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  Rng rng(707);
  for (int i = 0; i < 500; ++i) {
    RuleBase base = random_stratified_rule_base(rng);
    std::vector<std::string> things = things_of(base);
    std::vector<FactSet> inputs = all_assignments(things);
    o.transcript += format_rules(base);
    for (Policy policy : {Policy::AsInhibitor, Policy::AsTerminal}) {
      Network net = build(base, policy);
      std::uint64_t digest = 1469598103934665603ull;
      for (const FactSet& facts : inputs) {
        InferenceResult got = infer(net, facts);
        OracleState want = chain(base, facts, policy);
        if (got.states != want.states)
          o.fail("base " + std::to_string(i) + " diverges under " + to_string(policy));
        digest = fnv1a(state_text(got.states), digest);
      }
      char line[64];
      std::snprintf(line, sizeof line, "%s digest %016llx\n", to_string(policy),
                    static_cast<unsigned long long>(digest));
      o.transcript += line;
    }
  }
  double dt = seconds_since(t0);
  o.require(dt < 60.0, "took " + std::to_string(dt) + "s");
  return o;
}

// records that share an attribute vector but not a class, by position
std::set<size_t> conflicting_records(const std::vector<Record>& records) {
  std::map<std::vector<std::pair<std::string, std::string>>, std::vector<size_t>> by_attrs;
  for (size_t i = 0; i < records.size(); ++i) {
    auto key = records[i].attributes;
    std::sort(key.begin(), key.end());
    by_attrs[std::move(key)].push_back(i);
  }
  std::set<size_t> out;
  for (const auto& [key, group] : by_attrs) {
    std::set<std::string> classes;
    for (size_t i : group) classes.insert(records[i].class_thing());
    if (classes.size() > 1) out.insert(group.begin(), group.end());
  }
  return out;
}

// 8. incremental storage keeps every consistent record recallable
Outcome check_memorization() {
  Outcome o;
  struct Slice {
    std::string name;
    std::vector<Record> records;
  };
  std::vector<Slice> slices;
  slices.push_back({"mushroom 10x25",
                    select_slice(load_mushroom(kData + "/mushroom.csv", 10), 25, 1)});
  slices.push_back({"mushroom 15x50",
                    select_slice(load_mushroom(kData + "/mushroom.csv", 15), 50, 2)});
  slices.push_back({"mushroom 20x75",
                    select_slice(load_mushroom(kData + "/mushroom.csv", 20), 75, 3)});
  slices.push_back({"spect", load_spect(kData + "/spect.csv").records});

  for (const Slice& slice : slices) {
    auto t0 = std::chrono::steady_clock::now();
    MemorizationReport report = memorize(slice.records);
    double dt = seconds_since(t0);
    o.require(dt < 30.0, slice.name + " took " + std::to_string(dt) + "s");
    o.require(!report.steps.empty(), slice.name + " produced no steps");
    if (report.steps.empty()) continue;

    std::set<size_t> conflicted = conflicting_records(slice.records);
    const MemorizeStep& last = report.steps.back();
    int consistent = last.total - static_cast<int>(conflicted.size());
    o.require(last.recalled == consistent,
              slice.name + " recalled " + std::to_string(last.recalled) + " of " +
                  std::to_string(consistent) + " consistent records");
    if (conflicted.empty()) {
      o.require(report.final_recall == 1.0, slice.name + " recall below 1.0");
      o.require(last.contradictions == 0, slice.name + " flagged contradictions");
      o.require(report.conflicts.empty(), slice.name + " reported phantom conflicts");
    } else {
      o.require(!report.conflicts.empty(), slice.name + " hid its conflicts");
    }
    o.transcript += slice.name + "\n" + report.csv() + report.text();
  }
  return o;
}

struct Check {
  int id;
  const char* label;
  Outcome (*run)();
};

const Check kChecks[] = {
    {1, "gate truth tables, 24 rows exact, under 1s", check_gates},
    {2, "gate networks use 3 neurons, layered uses 7", check_gate_size},
    {3, "threshold sums and adjustments within 1e-9", check_neurule},
    {4, "rule removal leaves the rest intact", check_removal},
    {5, "readout inverts build, 1000 random bases, under 10s", check_round_trip},
    {6, "animal facts chain in at most 4 rounds", check_animal},
    {7, "matches forward chaining on 500 bases, under 60s", check_oracle},
    {8, "dataset slices fully recalled, under 30s each", check_memorization},
};

}  // namespace

int main() {
  int failures = 0;
  std::vector<std::string> transcripts;
  for (const Check& c : kChecks) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o = c.run();
    double dt = seconds_since(t0);
    std::printf("criterion %d: %s  %s (%.2fs)%s%s\n", c.id, o.pass ? "PASS" : "FAIL",
                c.label, dt, o.pass ? "" : "  [", o.pass ? "" : (o.detail + "]").c_str());
    if (!o.pass) ++failures;
    transcripts.push_back(std::move(o.transcript));
  }

  bool identical = true;
  std::string which;
  for (size_t i = 0; i < std::size(kChecks); ++i) {
    Outcome again = kChecks[i].run();
    if (again.transcript != transcripts[i]) {
      identical = false;
      which = std::string("criterion ") + std::to_string(kChecks[i].id) + " differs";
      break;
    }
  }
  std::printf("criterion 9: %s  repeated runs byte-identical%s%s%s\n",
              identical ? "PASS" : "FAIL", identical ? "" : "  [",
              identical ? "" : which.c_str(), identical ? "" : "]");
  if (!identical) ++failures;
  return failures;
}
