#include "lognet/network.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace lognet {

const char* to_string(Truth v) {
  switch (v) {
    case Truth::True: return "true";
    case Truth::False: return "false";
    default: return "unknown";
  }
}

bool valid_thing_name(std::string_view name) {
  if (name.empty()) return false;
  for (char c : name) {
    bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
              (c >= '0' && c <= '9') || c == '_' || c == '-' || c == '=';
    if (!ok) return false;
  }
  return true;
}

NeuronId Network::add_neuron(std::string_view thing) {
  if (!valid_thing_name(thing))
    throw error("invalid thing name: '" + std::string(thing) + "'");
  auto it = by_name_.find(std::string(thing));
  if (it != by_name_.end()) return it->second;
  NeuronId id = static_cast<NeuronId>(things_.size());
  things_.emplace_back(thing);
  by_name_.emplace(things_.back(), id);
  return id;
}

std::optional<NeuronId> Network::find_neuron(std::string_view thing) const {
  auto it = by_name_.find(std::string(thing));
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

const std::string& Network::thing(NeuronId id) const {
  if (id < 0 || id >= static_cast<NeuronId>(things_.size()))
    throw error("no neuron with id " + std::to_string(id));
  return things_[static_cast<size_t>(id)];
}

std::vector<Terminal> Network::check_terminals(std::vector<Terminal> terminals) const {
  if (terminals.empty()) throw error("link needs at least one terminal");
  std::sort(terminals.begin(), terminals.end());
  for (size_t i = 0; i < terminals.size(); ++i) {
    const Terminal& t = terminals[i];
    if (t.neuron < 0 || t.neuron >= static_cast<NeuronId>(things_.size()))
      throw error("terminal references missing neuron " + std::to_string(t.neuron));
    if (i > 0 && terminals[i - 1].neuron == t.neuron)
      throw error("duplicate terminal neuron '" + things_[static_cast<size_t>(t.neuron)] + "'");
  }
  return terminals;
}

ELinkId Network::add_excitatory_link(std::vector<Terminal> terminals, Terminal head) {
  terminals = check_terminals(std::move(terminals));
  if (head.neuron < 0 || head.neuron >= static_cast<NeuronId>(things_.size()))
    throw error("head references missing neuron " + std::to_string(head.neuron));
  for (const Terminal& t : terminals)
    if (t.neuron == head.neuron)
      throw error("head neuron '" + things_[static_cast<size_t>(head.neuron)] +
                  "' may not be one of the link's terminals");
  auto key = std::make_pair(terminals, head);
  auto it = elink_index_.find(key);
  if (it != elink_index_.end()) return it->second;
  ELinkId id = next_elink_++;
  elinks_.emplace(id, ExcitatoryLink{id, std::move(key.first), head});
  elink_index_.emplace(std::make_pair(elinks_.at(id).terminals, head), id);
  return id;
}

ILinkId Network::add_inhibitory_link(std::vector<Terminal> terminals, ELinkId target) {
  terminals = check_terminals(std::move(terminals));
  if (!has_elink(target))
    throw error("inhibitory link targets missing excitatory link " + std::to_string(target));
  auto key = std::make_pair(terminals, target);
  auto it = ilink_index_.find(key);
  if (it != ilink_index_.end()) return it->second;
  ILinkId id = next_ilink_++;
  ilinks_.emplace(id, InhibitoryLink{id, std::move(key.first), target});
  ilink_index_.emplace(std::make_pair(ilinks_.at(id).terminals, target), id);
  return id;
}

std::vector<ILinkId> Network::remove_excitatory_link(ELinkId id) {
  auto it = elinks_.find(id);
  if (it == elinks_.end())
    throw error("no excitatory link with id " + std::to_string(id));
  std::vector<ILinkId> removed;
  for (const auto& [iid, il] : ilinks_)
    if (il.target == id) removed.push_back(iid);
  for (ILinkId iid : removed) {
    const InhibitoryLink& il = ilinks_.at(iid);
    ilink_index_.erase(std::make_pair(il.terminals, il.target));
    ilinks_.erase(iid);
  }
  elink_index_.erase(std::make_pair(it->second.terminals, it->second.head));
  elinks_.erase(it);
  return removed;
}

const ExcitatoryLink& Network::elink(ELinkId id) const {
  auto it = elinks_.find(id);
  if (it == elinks_.end())
    throw error("no excitatory link with id " + std::to_string(id));
  return it->second;
}

const InhibitoryLink& Network::ilink(ILinkId id) const {
  auto it = ilinks_.find(id);
  if (it == ilinks_.end())
    throw error("no inhibitory link with id " + std::to_string(id));
  return it->second;
}

std::optional<ELinkId> Network::find_excitatory_link(std::vector<Terminal> terminals,
                                                     Terminal head) const {
  std::sort(terminals.begin(), terminals.end());
  auto it = elink_index_.find(std::make_pair(std::move(terminals), head));
  if (it == elink_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<ILinkId> Network::find_inhibitory_link(std::vector<Terminal> terminals,
                                                     ELinkId target) const {
  std::sort(terminals.begin(), terminals.end());
  auto it = ilink_index_.find(std::make_pair(std::move(terminals), target));
  if (it == ilink_index_.end()) return std::nullopt;
  return it->second;
}

NetworkStats Network::stats() const {
  return {static_cast<int>(things_.size()), static_cast<int>(elinks_.size()),
          static_cast<int>(ilinks_.size())};
}

void Network::restore_excitatory_link(ExcitatoryLink link) {
  if (link.id < 0) throw error("excitatory link id must be non-negative");
  if (elinks_.count(link.id))
    throw error("duplicate excitatory link id " + std::to_string(link.id));
  link.terminals = check_terminals(std::move(link.terminals));
  if (link.head.neuron < 0 || link.head.neuron >= static_cast<NeuronId>(things_.size()))
    throw error("head references missing neuron " + std::to_string(link.head.neuron));
  for (const Terminal& t : link.terminals)
    if (t.neuron == link.head.neuron)
      throw error("head neuron '" + things_[static_cast<size_t>(link.head.neuron)] +
                  "' may not be one of the link's terminals");
  auto key = std::make_pair(link.terminals, link.head);
  if (elink_index_.count(key))
    throw error("excitatory link " + std::to_string(link.id) +
                " duplicates link " + std::to_string(elink_index_.at(key)));
  next_elink_ = std::max(next_elink_, link.id + 1);
  ELinkId id = link.id;
  elinks_.emplace(id, std::move(link));
  elink_index_.emplace(std::move(key), id);
}

void Network::restore_inhibitory_link(InhibitoryLink link) {
  if (link.id < 0) throw error("inhibitory link id must be non-negative");
  if (ilinks_.count(link.id))
    throw error("duplicate inhibitory link id " + std::to_string(link.id));
  link.terminals = check_terminals(std::move(link.terminals));
  if (!has_elink(link.target))
    throw error("inhibitory link targets missing excitatory link " +
                std::to_string(link.target));
  auto key = std::make_pair(link.terminals, link.target);
  if (ilink_index_.count(key))
    throw error("inhibitory link " + std::to_string(link.id) +
                " duplicates link " + std::to_string(ilink_index_.at(key)));
  next_ilink_ = std::max(next_ilink_, link.id + 1);
  ILinkId id = link.id;
  ilinks_.emplace(id, std::move(link));
  ilink_index_.emplace(std::move(key), id);
}

void Network::audit() const {
  if (by_name_.size() != things_.size()) throw error("audit: name index out of sync");
  for (size_t i = 0; i < things_.size(); ++i) {
    if (!valid_thing_name(things_[i]))
      throw error("audit: invalid thing name '" + things_[i] + "'");
    auto it = by_name_.find(things_[i]);
    if (it == by_name_.end() || it->second != static_cast<NeuronId>(i))
      throw error("audit: name index mismatch for '" + things_[i] + "'");
  }
  auto check_link_terminals = [&](const std::vector<Terminal>& ts, const std::string& what) {
    if (ts.empty()) throw error("audit: " + what + " has no terminals");
    for (size_t i = 0; i < ts.size(); ++i) {
      if (ts[i].neuron < 0 || ts[i].neuron >= static_cast<NeuronId>(things_.size()))
        throw error("audit: " + what + " references missing neuron");
      if (i > 0 && ts[i - 1].neuron >= ts[i].neuron)
        throw error("audit: " + what + " terminals not sorted and distinct");
    }
  };
  for (const auto& [id, el] : elinks_) {
    if (el.id != id) throw error("audit: excitatory link id field mismatch");
    check_link_terminals(el.terminals, "excitatory link " + std::to_string(id));
    if (el.head.neuron < 0 || el.head.neuron >= static_cast<NeuronId>(things_.size()))
      throw error("audit: excitatory link " + std::to_string(id) + " head missing");
    for (const Terminal& t : el.terminals)
      if (t.neuron == el.head.neuron)
        throw error("audit: excitatory link " + std::to_string(id) + " is a self-loop");
    auto it = elink_index_.find(std::make_pair(el.terminals, el.head));
    if (it == elink_index_.end() || it->second != id)
      throw error("audit: excitatory link index out of sync");
  }
  if (elink_index_.size() != elinks_.size())
    throw error("audit: excitatory link index has stale entries");
  for (const auto& [id, il] : ilinks_) {
    if (il.id != id) throw error("audit: inhibitory link id field mismatch");
    check_link_terminals(il.terminals, "inhibitory link " + std::to_string(id));
    if (!elinks_.count(il.target))
      throw error("audit: inhibitory link " + std::to_string(id) + " targets missing link");
    auto it = ilink_index_.find(std::make_pair(il.terminals, il.target));
    if (it == ilink_index_.end() || it->second != id)
      throw error("audit: inhibitory link index out of sync");
  }
  if (ilink_index_.size() != ilinks_.size())
    throw error("audit: inhibitory link index has stale entries");
}

bool operator==(const Network& a, const Network& b) {
  return a.things_ == b.things_ && a.elinks_ == b.elinks_ && a.ilinks_ == b.ilinks_;
}

namespace {

using NamedTerminal = std::pair<std::string, Polarity>;
using NamedELink = std::pair<std::vector<NamedTerminal>, NamedTerminal>;
using NamedILink = std::pair<std::vector<NamedTerminal>, NamedELink>;

NamedTerminal name_terminal(const Network& n, const Terminal& t) {
  return {n.thing(t.neuron), t.polarity};
}

NamedELink name_elink(const Network& n, const ExcitatoryLink& el) {
  std::vector<NamedTerminal> ts;
  for (const Terminal& t : el.terminals) ts.push_back(name_terminal(n, t));
  std::sort(ts.begin(), ts.end());
  return {std::move(ts), name_terminal(n, el.head)};
}

}  // namespace

bool isomorphic(const Network& a, const Network& b) {
  std::set<std::string> an(a.things().begin(), a.things().end());
  std::set<std::string> bn(b.things().begin(), b.things().end());
  if (an != bn) return false;

  auto collect = [](const Network& n, std::set<NamedELink>& els, std::set<NamedILink>& ils) {
    for (const auto& [id, el] : n.elinks()) els.insert(name_elink(n, el));
    for (const auto& [id, il] : n.ilinks()) {
      std::vector<NamedTerminal> ts;
      for (const Terminal& t : il.terminals) ts.push_back(name_terminal(n, t));
      std::sort(ts.begin(), ts.end());
      ils.insert({std::move(ts), name_elink(n, n.elink(il.target))});
    }
  };
  std::set<NamedELink> ae, be;
  std::set<NamedILink> ai, bi;
  collect(a, ae, ai);
  collect(b, be, bi);
  return ae == be && ai == bi;
}

}  // namespace lognet
