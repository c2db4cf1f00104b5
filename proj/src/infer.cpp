#include "lognet/infer.hpp"

#include <algorithm>
#include <fstream>
#include <queue>
#include <sstream>

namespace lognet {

FactSet parse_facts(std::string_view text) {
  FactSet out;
  int line_no = 0;
  size_t start = 0;
  while (start <= text.size()) {
    size_t nl = text.find('\n', start);
    std::string_view line = text.substr(
        start, nl == std::string_view::npos ? text.size() - start : nl - start);
    ++line_no;
    size_t hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    while (!line.empty() && (line.back() == ' ' || line.back() == '\t' || line.back() == '\r'))
      line.remove_suffix(1);
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t'))
      line.remove_prefix(1);
    if (!line.empty()) {
      size_t eq = line.rfind('=');
      if (eq == std::string_view::npos)
        throw error("line " + std::to_string(line_no) + ": expected thing=true|false");
      std::string thing(line.substr(0, eq));
      std::string_view value = line.substr(eq + 1);
      if (!valid_thing_name(thing))
        throw error("line " + std::to_string(line_no) + ": invalid thing name '" + thing + "'");
      bool truth;
      if (value == "true")
        truth = true;
      else if (value == "false")
        truth = false;
      else
        throw error("line " + std::to_string(line_no) + ": value must be true or false, got '" +
                    std::string(value) + "'");
      if (out.assignments.count(thing))
        throw error("line " + std::to_string(line_no) + ": thing '" + thing +
                    "' assigned twice");
      out.assignments.emplace(std::move(thing), truth);
    }
    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }
  return out;
}

FactSet load_facts(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error("cannot open facts file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_facts(buf.str());
}

namespace {

bool satisfied(const Terminal& t, const std::vector<NeuronState>& states) {
  const NeuronState& s = states[static_cast<size_t>(t.neuron)];
  if (s.contradictory) return false;
  return s.value == (t.polarity == Polarity::Positive ? Truth::True : Truth::False);
}

bool all_satisfied(const std::vector<Terminal>& ts, const std::vector<NeuronState>& states) {
  return std::all_of(ts.begin(), ts.end(),
                     [&](const Terminal& t) { return satisfied(t, states); });
}

}  // namespace

InferenceResult infer(const Network& net, const FactSet& facts, InferOptions opts) {
  InferenceResult result;
  std::vector<NeuronState> states(static_cast<size_t>(net.neuron_count()));
  std::map<std::string, NeuronState> isolated;
  for (const auto& [thing, value] : facts.assignments) {
    auto id = net.find_neuron(thing);
    if (id)
      states[static_cast<size_t>(*id)].value = value ? Truth::True : Truth::False;
    else if (opts.auto_create)
      isolated[thing].value = value ? Truth::True : Truth::False;
    else
      throw error("facts mention unknown thing '" + thing + "'");
  }

  // with two one-way transitions per neuron (Unknown to a value, clean to
  // contradictory) no run can have more productive rounds than this
  int max_rounds = 2 * net.neuron_count() + 2;
  for (int round = 1; round <= max_rounds; ++round) {
    const std::vector<NeuronState> snapshot = states;
    std::set<ELinkId> inhibited;
    for (const auto& [iid, il] : net.ilinks())
      if (all_satisfied(il.terminals, snapshot)) inhibited.insert(il.target);

    bool changed = false;
    for (const auto& [eid, el] : net.elinks()) {
      if (inhibited.count(eid) || !all_satisfied(el.terminals, snapshot)) continue;
      result.fired.insert(eid);
      Truth asserted =
          el.head.polarity == Polarity::Positive ? Truth::True : Truth::False;
      NeuronState& s = states[static_cast<size_t>(el.head.neuron)];
      if (s.value == Truth::Unknown) {
        s.value = asserted;
        result.trace.push_back({round, eid, net.thing(el.head.neuron), asserted, false});
        changed = true;
      } else if (s.value != asserted && !s.contradictory) {
        s.contradictory = true;
        result.contradictions.insert(net.thing(el.head.neuron));
        result.trace.push_back({round, eid, net.thing(el.head.neuron), asserted, true});
        changed = true;
      }
    }
    if (!changed) break;
    result.rounds = round;
  }

  std::set<ELinkId> inhibited_final;
  for (const auto& [iid, il] : net.ilinks())
    if (all_satisfied(il.terminals, states)) inhibited_final.insert(il.target);
  for (const auto& [eid, el] : net.elinks()) {
    if (result.fired.count(eid)) {
      if (inhibited_final.count(eid)) result.unstable.insert(eid);
    } else if (all_satisfied(el.terminals, states) && inhibited_final.count(eid)) {
      std::set<ILinkId>& holders = result.blocked[eid];
      for (const auto& [iid, il] : net.ilinks())
        if (il.target == eid && all_satisfied(il.terminals, states)) holders.insert(iid);
    }
  }

  for (NeuronId id = 0; id < net.neuron_count(); ++id)
    result.states.emplace(net.thing(id), states[static_cast<size_t>(id)]);
  for (const auto& [thing, state] : isolated) result.states.emplace(thing, state);
  return result;
}

std::string format_trace(const std::vector<TraceRow>& trace) {
  std::string out;
  for (const TraceRow& row : trace) {
    out += std::to_string(row.round);
    out += '\t';
    out += std::to_string(row.link);
    out += '\t';
    out += row.thing;
    out += '\t';
    out += row.conflict ? "conflict" : to_string(row.value);
    out += '\n';
  }
  return out;
}

StratificationReport stratification_check(const Network& net) {
  // influence edges: a value at a terminal neuron can change its head neuron
  std::vector<std::vector<NeuronId>> feeds(static_cast<size_t>(net.neuron_count()));
  for (const auto& [eid, el] : net.elinks())
    for (const Terminal& t : el.terminals)
      feeds[static_cast<size_t>(t.neuron)].push_back(el.head.neuron);

  StratificationReport report;
  for (const auto& [iid, il] : net.ilinks()) {
    NeuronId start = net.elink(il.target).head.neuron;
    std::vector<char> reachable(static_cast<size_t>(net.neuron_count()), 0);
    std::queue<NeuronId> queue;
    reachable[static_cast<size_t>(start)] = 1;
    queue.push(start);
    while (!queue.empty()) {
      NeuronId n = queue.front();
      queue.pop();
      for (NeuronId next : feeds[static_cast<size_t>(n)])
        if (!reachable[static_cast<size_t>(next)]) {
          reachable[static_cast<size_t>(next)] = 1;
          queue.push(next);
        }
    }
    StratificationEntry entry{iid, il.target, {}};
    for (const Terminal& t : il.terminals)
      if (reachable[static_cast<size_t>(t.neuron)])
        entry.derivable_terminals.push_back(net.thing(t.neuron));
    if (!entry.derivable_terminals.empty()) {
      std::sort(entry.derivable_terminals.begin(), entry.derivable_terminals.end());
      report.entries.push_back(std::move(entry));
    }
  }
  return report;
}

namespace {

void explain_thing(const Network& net, const InferenceResult& result,
                   const std::string& thing, int depth, std::string& out) {
  out.append(static_cast<size_t>(depth) * 2, ' ');
  auto it = result.states.find(thing);
  const NeuronState& s = it->second;
  out += thing;
  out += '=';
  out += to_string(s.value);
  if (s.contradictory) out += " (contradictory)";

  const TraceRow* setter = nullptr;
  for (const TraceRow& row : result.trace)
    if (!row.conflict && row.thing == thing) {
      setter = &row;
      break;
    }

  if (setter) {
    out += " by e" + std::to_string(setter->link) + ":\n";
    for (const Terminal& t : net.elink(setter->link).terminals)
      explain_thing(net, result, net.thing(t.neuron), depth + 1, out);
    return;
  }
  if (s.value != Truth::Unknown) {
    out += " (given)\n";
    return;
  }
  std::vector<std::pair<ELinkId, const std::set<ILinkId>*>> held;
  auto nid = net.find_neuron(thing);
  if (nid)
    for (const auto& [eid, holders] : result.blocked)
      if (net.elink(eid).head.neuron == *nid) held.push_back({eid, &holders});
  if (held.empty()) {
    out += "; no triggered links\n";
    return;
  }
  out += "; triggered but blocked:\n";
  for (const auto& [eid, holders] : held) {
    out.append(static_cast<size_t>(depth + 1) * 2, ' ');
    out += "e" + std::to_string(eid) + " blocked by";
    for (ILinkId iid : *holders) out += " i" + std::to_string(iid);
    out += '\n';
  }
}

}  // namespace

std::string explain(const Network& net, const InferenceResult& result,
                    const std::string& thing) {
  if (!result.states.count(thing)) throw error("unknown thing '" + thing + "'");
  std::string out;
  explain_thing(net, result, thing, 0, out);
  return out;
}

}  // namespace lognet
