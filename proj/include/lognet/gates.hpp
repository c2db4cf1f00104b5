#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lognet/network.hpp"

namespace lognet {

enum class Gate { And, Or, Xor, Nand, Nor, Xnor };

std::vector<Gate> all_gates();
const char* gate_name(Gate g);
std::optional<Gate> parse_gate(std::string_view name);  // case-insensitive

/// Three neurons (A, B, C) and links only; no hidden layer. Truth is
/// signalled by activation: C comes out True on gate-true inputs and stays
/// Unknown otherwise.
Network gate_network(Gate g);

/// A layered feed-forward encoding of one binary gate needs this many
/// neurons (2 inputs, 4 hidden, 1 output); kept for the size comparison.
inline constexpr int layered_gate_neurons = 7;

struct GateRow {
  bool a = false;
  bool b = false;
  Truth c = Truth::Unknown;

  friend bool operator==(const GateRow&, const GateRow&) = default;
};

struct GateCheck {
  bool pass = true;
  std::optional<GateRow> failing;  // first failing row with the observed c
};

/// Runs all four full assignments of A and B through the gate's network and
/// checks C against the Boolean table (True where the gate is true, Unknown
/// elsewhere, never contradictory).
GateCheck truth_table_check(Gate g);

/// Printable four-row table plus a PASS/FAIL verdict line.
std::string gate_table(Gate g);

}  // namespace lognet
