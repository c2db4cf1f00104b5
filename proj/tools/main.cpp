// lognet command line: compile rule files to networks, run queries against
// them, read the rules back out, and drive the dataset and demo harnesses.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "lognet/build.hpp"
#include "lognet/dataset.hpp"
#include "lognet/dot.hpp"
#include "lognet/gates.hpp"
#include "lognet/infer.hpp"
#include "lognet/neurule.hpp"
#include "lognet/readout.hpp"
#include "lognet/rules.hpp"
#include "lognet/serialize.hpp"

namespace {

using namespace lognet;

Policy parse_policy(const std::string& name) {
  if (name == "inhibitor") return Policy::AsInhibitor;
  if (name == "terminal") return Policy::AsTerminal;
  throw error("unknown policy '" + name + "' (use inhibitor or terminal)");
}

std::string slurp(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Network read_network(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error("cannot open network file: " + path);
  return deserialize(slurp(in));
}

void write_file(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw error("cannot write file: " + path);
  out << text;
}

int run_build(const std::string& rules_path, const std::string& policy,
              const std::string& out_path) {
  Network net = build(load_rules(rules_path), parse_policy(policy));
  write_file(out_path, serialize(net));
  return 0;
}

int run_infer(const std::string& net_path, const std::string& facts_path,
              bool trace, bool strict, bool isolate) {
  Network net = read_network(net_path);
  FactSet facts = facts_path == "-" ? parse_facts(slurp(std::cin))
                                    : load_facts(facts_path);
  InferenceResult r = infer(net, facts, {.auto_create = isolate});

  for (const auto& [thing, state] : r.states)
    std::cout << thing << "=" << to_string(state.value) << "\n";
  if (!r.contradictions.empty()) {
    std::cout << "# contradictory:";
    for (const std::string& thing : r.contradictions) std::cout << " " << thing;
    std::cout << "\n";
  }
  if (!r.unstable.empty()) {
    std::cout << "# unstable:";
    for (ELinkId id : r.unstable) std::cout << " e" << id;
    std::cout << "\n";
  }
  if (trace) {
    std::cout << "# trace (round, link, thing, value)\n";
    std::cout << format_trace(r.trace);
  }
  if (strict && (!r.contradictions.empty() || !r.unstable.empty())) return 2;
  return 0;
}

int run_memorize(const std::string& dataset, const std::string& file, int attrs,
                 bool attrs_given, int records, std::uint64_t seed, bool no_filter,
                 const std::string& report_path, const std::string& csv_path) {
  std::vector<Record> all;
  if (dataset == "mushroom") {
    all = load_mushroom(file, attrs);
  } else if (dataset == "spect") {
    if (attrs_given) throw error("--attrs only applies to the mushroom dataset");
    all = load_spect(file, !no_filter).records;
  } else {
    throw error("unknown dataset '" + dataset + "' (use mushroom or spect)");
  }
  std::vector<Record> slice =
      records >= 0 ? select_slice(all, static_cast<size_t>(records), seed)
                   : std::move(all);
  MemorizationReport report = memorize(slice);
  write_file(report_path, report.text());
  if (!csv_path.empty()) write_file(csv_path, report.csv());
  return 0;
}

int run_gates(const std::string& only) {
  std::optional<Gate> filter;
  if (!only.empty()) {
    filter = parse_gate(only);
    if (!filter) throw error("unknown gate '" + only + "'");
  }
  bool all_pass = true;
  for (Gate g : all_gates()) {
    if (filter && *filter != g) continue;
    std::cout << gate_table(g);
    all_pass = all_pass && truth_table_check(g).pass;
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"logical neural networks: rule compiler, inference engine, readout"};
  app.set_version_flag("--version", "lognet 0.1.0");
  app.require_subcommand(1);

  std::string rules_path, net_path, out_path, facts_path, rule_text;
  std::string policy = "inhibitor";
  bool trace = false, strict = false, isolate = false;

  CLI::App* cbuild = app.add_subcommand("build", "compile a rule file into a network");
  cbuild->add_option("--rules", rules_path, "rule file")->required();
  cbuild->add_option("--policy", policy, "negative body literals: inhibitor|terminal");
  cbuild->add_option("--out", out_path, "network file to write ('-' for stdout)")->required();

  CLI::App* cinfer = app.add_subcommand("infer", "propagate facts through a network");
  cinfer->add_option("--net", net_path, "network file")->required();
  cinfer->add_option("--facts", facts_path, "facts file ('-' for stdin)")->required();
  cinfer->add_flag("--trace", trace, "append the propagation trace");
  cinfer->add_flag("--strict", strict, "exit 2 on contradiction or instability");
  cinfer->add_flag("--auto-create", isolate, "treat unknown fact things as isolated");

  CLI::App* creadout = app.add_subcommand("readout", "print the stored rules");
  creadout->add_option("--net", net_path, "network file")->required();
  creadout->add_option("--policy", policy, "how to word inhibitors: inhibitor|terminal");

  CLI::App* cremove = app.add_subcommand("remove-rule", "delete one rule's links");
  cremove->add_option("--net", net_path, "network file")->required();
  cremove->add_option("--rule", rule_text, "rule text, e.g. 'if a then c'")->required();
  cremove->add_option("--policy", policy, "encoding the rule was built under");
  cremove->add_option("--out", out_path, "network file to write ('-' for stdout)")->required();

  std::string dataset, data_file, report_path = "-", csv_path;
  int attrs = 22, records = -1;
  std::uint64_t seed = 0;
  bool no_filter = false;
  CLI::App* cmem = app.add_subcommand("memorize", "incremental store-and-replay harness");
  cmem->add_option("--dataset", dataset, "mushroom|spect")->required();
  cmem->add_option("--file", data_file, "dataset CSV")->required();
  cmem->add_option("--attrs", attrs, "keep the first N attributes (mushroom)");
  cmem->add_option("--records", records, "slice size after the seeded shuffle");
  cmem->add_option("--seed", seed, "shuffle seed");
  cmem->add_flag("--no-filter", no_filter, "keep indecisive records (spect)");
  cmem->add_option("--report", report_path, "report file ('-' for stdout)");
  cmem->add_option("--csv", csv_path, "also write the per-step table here");

  std::string only_gate;
  CLI::App* cgates = app.add_subcommand("gates", "truth tables for the six gates");
  cgates->add_option("--gate", only_gate, "show one gate only");

  app.add_subcommand("neurule-demo", "threshold-unit evaluation and adjustments");

  CLI::App* cdot = app.add_subcommand("export-dot", "write the network as graphviz");
  cdot->add_option("--net", net_path, "network file")->required();
  cdot->add_option("--out", out_path, "dot file to write ('-' for stdout)")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (cbuild->parsed()) return run_build(rules_path, policy, out_path);
    if (cinfer->parsed()) return run_infer(net_path, facts_path, trace, strict, isolate);
    if (creadout->parsed()) {
      std::cout << format_rules(readout(read_network(net_path), parse_policy(policy)));
      return 0;
    }
    if (cremove->parsed()) {
      Network net = read_network(net_path);
      remove_rule(net, parse_rule(rule_text), parse_policy(policy));
      write_file(out_path, serialize(net));
      return 0;
    }
    if (cmem->parsed())
      return run_memorize(dataset, data_file, attrs, cmem->count("--attrs") > 0,
                          records, seed, no_filter, report_path, csv_path);
    if (cgates->parsed()) return run_gates(only_gate);
    if (app.get_subcommand("neurule-demo")->parsed()) {
      AdjustmentReport report = adjustment_experiment(bone_neurule());
      std::cout << format_neurule(bone_neurule()) << "\n" << format_adjustment(report);
      return 0;
    }
    if (cdot->parsed()) {
      write_file(out_path, to_dot(read_network(net_path)));
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "lognet: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
