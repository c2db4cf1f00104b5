#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <limits>
#include <map>
#include <string>
#include <vector>

#include "lognet/build.hpp"
#include "lognet/dataset.hpp"
#include "lognet/dot.hpp"
#include "lognet/gates.hpp"
#include "lognet/infer.hpp"
#include "lognet/neurule.hpp"
#include "lognet/readout.hpp"
#include "lognet/rules.hpp"
#include "lognet/serialize.hpp"

namespace py = pybind11;
using namespace lognet;

namespace {

FactSet facts_from(const std::map<std::string, bool>& m) {
  FactSet f;
  f.assignments = m;
  return f;
}

Gate gate_from(const std::string& name) {
  auto g = parse_gate(name);
  if (!g) throw error("unknown gate '" + name + "'");
  return *g;
}

}  // namespace

PYBIND11_MODULE(_lognet, m) {
  m.doc() = "Logical neural networks: rule compiler, activation inference, readout";

  py::register_exception<error>(m, "LognetError");

  py::enum_<Truth>(m, "Truth")
      .value("UNKNOWN", Truth::Unknown)
      .value("TRUE", Truth::True)
      .value("FALSE", Truth::False);

  py::enum_<Policy>(m, "Policy")
      .value("AS_INHIBITOR", Policy::AsInhibitor)
      .value("AS_TERMINAL", Policy::AsTerminal);

  py::class_<NeuronState>(m, "NeuronState")
      .def_readonly("value", &NeuronState::value)
      .def_readonly("contradictory", &NeuronState::contradictory)
      .def("__repr__", [](const NeuronState& s) {
        return std::string("NeuronState(") + to_string(s.value) +
               (s.contradictory ? ", contradictory)" : ")");
      });

  py::class_<NetworkStats>(m, "NetworkStats")
      .def_readonly("neurons", &NetworkStats::neurons)
      .def_readonly("elinks", &NetworkStats::elinks)
      .def_readonly("ilinks", &NetworkStats::ilinks)
      .def("__repr__", [](const NetworkStats& s) {
        return "NetworkStats(neurons=" + std::to_string(s.neurons) +
               ", elinks=" + std::to_string(s.elinks) +
               ", ilinks=" + std::to_string(s.ilinks) + ")";
      });

  py::class_<Rule>(m, "Rule")
      .def_static("parse", [](const std::string& text) { return parse_rule(text); },
                  py::arg("text"))
      .def("__str__", [](const Rule& r) { return format_rule(r); })
      .def("__repr__", [](const Rule& r) { return "Rule('" + format_rule(r) + "')"; })
      .def("__eq__", [](const Rule& a, const Rule& b) { return a == b; });

  py::class_<RuleBase>(m, "RuleBase")
      .def(py::init<>())
      .def_static("parse", [](const std::string& text) { return parse_rules(text); },
                  py::arg("text"))
      .def_static("load", &load_rules, py::arg("path"))
      .def("add", &RuleBase::add, py::arg("rule"))
      .def("rules", &RuleBase::rules)
      .def("__len__", &RuleBase::size)
      .def("__str__", [](const RuleBase& b) { return format_rules(b); })
      .def("__eq__", [](const RuleBase& a, const RuleBase& b) { return a == b; });

  m.def(
      "canonicalize",
      [](const RuleBase& rules, Policy policy) { return canonicalize(rules, policy); },
      py::arg("rules"), py::arg("policy") = Policy::AsInhibitor);

  py::class_<Network>(m, "Network")
      .def(py::init<>())
      .def("neuron_count", &Network::neuron_count)
      .def("things", &Network::things)
      .def("stats", &Network::stats)
      .def("__repr__", [](const Network& n) {
        NetworkStats s = n.stats();
        return "Network(" + std::to_string(s.neurons) + " neurons, " +
               std::to_string(s.elinks) + " excitatory, " +
               std::to_string(s.ilinks) + " inhibitory)";
      });

  py::class_<RuleHandle>(m, "RuleHandle")
      .def_readonly("elink", &RuleHandle::elink)
      .def_readonly("ilinks", &RuleHandle::ilinks);

  m.def("build", &build, py::arg("rules"), py::arg("policy") = Policy::AsInhibitor);
  m.def("add_rule", &add_rule, py::arg("net"), py::arg("rule"),
        py::arg("policy") = Policy::AsInhibitor);
  m.def("remove_rule", &remove_rule, py::arg("net"), py::arg("rule"),
        py::arg("policy") = Policy::AsInhibitor);
  m.def("readout", &readout, py::arg("net"), py::arg("policy") = Policy::AsInhibitor);

  py::class_<TraceRow>(m, "TraceRow")
      .def_readonly("round", &TraceRow::round)
      .def_readonly("link", &TraceRow::link)
      .def_readonly("thing", &TraceRow::thing)
      .def_readonly("value", &TraceRow::value)
      .def_readonly("conflict", &TraceRow::conflict);

  py::class_<InferenceResult>(m, "InferenceResult")
      .def_readonly("states", &InferenceResult::states)
      .def_readonly("fired", &InferenceResult::fired)
      .def_readonly("blocked", &InferenceResult::blocked)
      .def_readonly("contradictions", &InferenceResult::contradictions)
      .def_readonly("unstable", &InferenceResult::unstable)
      .def_readonly("trace", &InferenceResult::trace)
      .def_readonly("rounds", &InferenceResult::rounds);

  m.def(
      "infer",
      [](const Network& net, const std::map<std::string, bool>& facts, bool auto_create) {
        return infer(net, facts_from(facts), {.auto_create = auto_create});
      },
      py::arg("net"), py::arg("facts"), py::arg("auto_create") = false);
  m.def("format_trace", &format_trace, py::arg("trace"));
  m.def("explain", &explain, py::arg("net"), py::arg("result"), py::arg("thing"));

  py::class_<StratificationEntry>(m, "StratificationEntry")
      .def_readonly("ilink", &StratificationEntry::ilink)
      .def_readonly("target", &StratificationEntry::target)
      .def_readonly("derivable_terminals", &StratificationEntry::derivable_terminals);

  py::class_<StratificationReport>(m, "StratificationReport")
      .def_readonly("entries", &StratificationReport::entries)
      .def("ok", &StratificationReport::ok);

  m.def("stratification_check", &stratification_check, py::arg("net"));

  py::class_<EquivalenceResult>(m, "EquivalenceResult")
      .def_readonly("equal", &EquivalenceResult::equal)
      .def_readonly("witness", &EquivalenceResult::witness);

  m.def("equivalent", &equivalent, py::arg("a"), py::arg("b"), py::arg("things"),
        py::arg("policy") = Policy::AsInhibitor, py::arg("bound") = 12);

  m.def("serialize", &serialize, py::arg("net"));
  m.def("deserialize", &deserialize, py::arg("text"));
  m.def("to_dot", &to_dot, py::arg("net"));

  m.def("gate_names", [] {
    std::vector<std::string> out;
    for (Gate g : all_gates()) out.push_back(gate_name(g));
    return out;
  });
  m.def("gate_network", [](const std::string& name) { return gate_network(gate_from(name)); },
        py::arg("gate"));
  m.def("gate_table", [](const std::string& name) { return gate_table(gate_from(name)); },
        py::arg("gate"));
  m.def("gate_check", [](const std::string& name) { return truth_table_check(gate_from(name)).pass; },
        py::arg("gate"));

  py::class_<Neurule>(m, "Neurule")
      .def_static("parse", [](const std::string& text) { return parse_neurule(text); },
                  py::arg("text"))
      .def_readonly("conclusion", &Neurule::conclusion)
      .def_readonly("bias", &Neurule::bias)
      .def_readonly("conditions", &Neurule::conditions)
      .def("__str__", [](const Neurule& nr) { return format_neurule(nr); });

  m.def(
      "evaluate",
      [](const Neurule& nr, const std::vector<int>& in) {
        NeuruleOutput o = evaluate(nr, in);
        return py::make_tuple(o.sum, o.output);
      },
      py::arg("neurule"), py::arg("inputs"));
  m.def("bone_neurule", &bone_neurule);
  m.def("neurule_demo", [] {
    return format_neurule(bone_neurule()) + "\n" +
           format_adjustment(adjustment_experiment(bone_neurule()));
  });

  py::class_<Record>(m, "Record")
      .def_readonly("attributes", &Record::attributes)
      .def_readonly("class_name", &Record::class_name)
      .def_readonly("class_label", &Record::class_label)
      .def("class_thing", &Record::class_thing);

  m.def("load_mushroom", &load_mushroom, py::arg("path"), py::arg("n_attrs") = 22,
        py::arg("n_records") = std::numeric_limits<int>::max());
  m.def(
      "load_spect",
      [](const std::string& path, bool remove_indecisive) {
        SpectLoad r = load_spect(path, remove_indecisive);
        return py::make_tuple(r.records, r.removed);
      },
      py::arg("path"), py::arg("remove_indecisive") = true);
  m.def("record_to_rule", &record_to_rule, py::arg("record"));
  m.def("select_slice", &select_slice, py::arg("records"), py::arg("n"), py::arg("seed"));

  py::class_<MemorizeStep>(m, "MemorizeStep")
      .def_readonly("step", &MemorizeStep::step)
      .def_readonly("recalled", &MemorizeStep::recalled)
      .def_readonly("total", &MemorizeStep::total)
      .def_readonly("contradictions", &MemorizeStep::contradictions)
      .def_readonly("net", &MemorizeStep::net);

  py::class_<MemorizationReport>(m, "MemorizationReport")
      .def_readonly("steps", &MemorizationReport::steps)
      .def_readonly("conflicts", &MemorizationReport::conflicts)
      .def_readonly("final_recall", &MemorizationReport::final_recall)
      .def("csv", &MemorizationReport::csv)
      .def("text", &MemorizationReport::text);

  m.def("memorize", &memorize, py::arg("records"));
}
