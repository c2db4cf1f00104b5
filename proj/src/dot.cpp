#include "lognet/dot.hpp"

#include <sstream>

namespace lognet {

namespace {

void edge_attrs(std::ostringstream& out, const Terminal& t, bool dashed) {
  bool neg = t.polarity == Polarity::Negative;
  if (!neg && !dashed) return;
  out << " [";
  if (neg) out << "label=\"-\"";
  if (neg && dashed) out << ", ";
  if (dashed) out << "style=dashed, arrowhead=tee";
  out << "]";
}

}  // namespace

std::string to_dot(const Network& net) {
  std::ostringstream out;
  out << "digraph network {\n";
  out << "  rankdir=LR;\n";
  out << "  node [shape=ellipse];\n";
  for (NeuronId id = 0; id < net.neuron_count(); ++id)
    out << "  n" << id << " [label=\"" << net.thing(id) << "\"];\n";
  for (const auto& [id, el] : net.elinks()) {
    out << "  e" << id << " [shape=point, width=0.08];\n";
    for (const Terminal& t : el.terminals) {
      out << "  n" << t.neuron << " -> e" << id;
      edge_attrs(out, t, false);
      out << ";\n";
    }
    out << "  e" << id << " -> n" << el.head.neuron;
    if (el.head.polarity == Polarity::Negative) out << " [label=\"-\"]";
    out << ";\n";
  }
  for (const auto& [id, il] : net.ilinks()) {
    if (il.terminals.size() == 1) {
      out << "  n" << il.terminals[0].neuron << " -> e" << il.target;
      edge_attrs(out, il.terminals[0], true);
      out << ";\n";
    } else {
      out << "  i" << id << " [shape=point, width=0.08];\n";
      for (const Terminal& t : il.terminals) {
        out << "  n" << t.neuron << " -> i" << id;
        edge_attrs(out, t, false);
        out << ";\n";
      }
      out << "  i" << id << " -> e" << il.target << " [style=dashed, arrowhead=tee];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace lognet
