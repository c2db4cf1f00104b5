#include "lognet/gates.hpp"

#include <cctype>

#include "lognet/infer.hpp"

namespace lognet {

std::vector<Gate> all_gates() {
  return {Gate::And, Gate::Or, Gate::Xor, Gate::Nand, Gate::Nor, Gate::Xnor};
}

const char* gate_name(Gate g) {
  switch (g) {
    case Gate::And: return "AND";
    case Gate::Or: return "OR";
    case Gate::Xor: return "XOR";
    case Gate::Nand: return "NAND";
    case Gate::Nor: return "NOR";
    case Gate::Xnor: return "XNOR";
  }
  return "?";
}

std::optional<Gate> parse_gate(std::string_view name) {
  std::string up;
  for (char c : name) up += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  for (Gate g : all_gates())
    if (up == gate_name(g)) return g;
  return std::nullopt;
}

Network gate_network(Gate g) {
  Network net;
  NeuronId a = net.add_neuron("A");
  NeuronId b = net.add_neuron("B");
  NeuronId c = net.add_neuron("C");
  Terminal ap{a, Polarity::Positive}, an{a, Polarity::Negative};
  Terminal bp{b, Polarity::Positive}, bn{b, Polarity::Negative};
  Terminal cp{c, Polarity::Positive};
  switch (g) {
    case Gate::And:
      net.add_excitatory_link({ap, bp}, cp);
      break;
    case Gate::Or:
      net.add_excitatory_link({ap}, cp);
      net.add_excitatory_link({bp}, cp);
      break;
    case Gate::Xor: {
      ELinkId ea = net.add_excitatory_link({ap}, cp);
      ELinkId eb = net.add_excitatory_link({bp}, cp);
      net.add_inhibitory_link({bp}, ea);
      net.add_inhibitory_link({ap}, eb);
      break;
    }
    case Gate::Nand:
      net.add_excitatory_link({an}, cp);
      net.add_excitatory_link({bn}, cp);
      break;
    case Gate::Nor:
      net.add_excitatory_link({an, bn}, cp);
      break;
    case Gate::Xnor:
      net.add_excitatory_link({ap, bp}, cp);
      net.add_excitatory_link({an, bn}, cp);
      break;
  }
  return net;
}

namespace {

bool boolean_gate(Gate g, bool a, bool b) {
  switch (g) {
    case Gate::And: return a && b;
    case Gate::Or: return a || b;
    case Gate::Xor: return a != b;
    case Gate::Nand: return !(a && b);
    case Gate::Nor: return !(a || b);
    case Gate::Xnor: return a == b;
  }
  return false;
}

}  // namespace

GateCheck truth_table_check(Gate g) {
  Network net = gate_network(g);
  for (bool a : {false, true})
    for (bool b : {false, true}) {
      FactSet facts;
      facts.assignments["A"] = a;
      facts.assignments["B"] = b;
      InferenceResult r = infer(net, facts);
      const NeuronState& c = r.states.at("C");
      Truth expect = boolean_gate(g, a, b) ? Truth::True : Truth::Unknown;
      if (c.value != expect || c.contradictory)
        return {false, GateRow{a, b, c.value}};
    }
  return {true, std::nullopt};
}

std::string gate_table(Gate g) {
  Network net = gate_network(g);
  std::string out = gate_name(g);
  out += " (neurons: " + std::to_string(net.stats().neurons) +
         ", layered model would use " + std::to_string(layered_gate_neurons) + ")\n";
  out += "  A      B      C\n";
  for (bool a : {false, true})
    for (bool b : {false, true}) {
      FactSet facts;
      facts.assignments["A"] = a;
      facts.assignments["B"] = b;
      InferenceResult r = infer(net, facts);
      auto cell = [](const char* s) {
        std::string c = s;
        c.resize(7, ' ');
        return c;
      };
      out += "  " + cell(a ? "true" : "false") + cell(b ? "true" : "false") +
             to_string(r.states.at("C").value) + "\n";
    }
  GateCheck check = truth_table_check(g);
  out += check.pass ? "  PASS\n" : "  FAIL\n";
  return out;
}

}  // namespace lognet
