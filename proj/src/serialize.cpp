#include "lognet/serialize.hpp"

#include <nlohmann/json.hpp>

namespace lognet {

using json = nlohmann::ordered_json;

namespace {

json terminal_json(const Terminal& t) {
  return {{"neuron", t.neuron},
          {"polarity", t.polarity == Polarity::Positive ? "pos" : "neg"}};
}

Terminal parse_terminal(const json& j, const char* where) {
  if (!j.is_object() || !j.contains("neuron") || !j.contains("polarity"))
    throw error(std::string("bad terminal in ") + where);
  if (!j.at("neuron").is_number_integer())
    throw error(std::string("terminal neuron must be an integer in ") + where);
  std::string pol = j.at("polarity").is_string() ? j.at("polarity").get<std::string>() : "";
  if (pol != "pos" && pol != "neg")
    throw error(std::string("terminal polarity must be \"pos\" or \"neg\" in ") + where);
  return {j.at("neuron").get<NeuronId>(),
          pol == "pos" ? Polarity::Positive : Polarity::Negative};
}

std::vector<Terminal> parse_terminals(const json& j, const std::string& where) {
  if (!j.is_array()) throw error("terminals must be an array in " + where);
  std::vector<Terminal> out;
  for (const json& t : j) out.push_back(parse_terminal(t, where.c_str()));
  return out;
}

}  // namespace

std::string serialize(const Network& net) {
  json doc;
  doc["version"] = 1;
  doc["neurons"] = json::array();
  for (NeuronId id = 0; id < net.neuron_count(); ++id)
    doc["neurons"].push_back({{"id", id}, {"thing", net.thing(id)}});
  doc["elinks"] = json::array();
  for (const auto& [id, el] : net.elinks()) {
    json terms = json::array();
    for (const Terminal& t : el.terminals) terms.push_back(terminal_json(t));
    doc["elinks"].push_back(
        {{"id", id}, {"terminals", std::move(terms)}, {"head", terminal_json(el.head)}});
  }
  doc["ilinks"] = json::array();
  for (const auto& [id, il] : net.ilinks()) {
    json terms = json::array();
    for (const Terminal& t : il.terminals) terms.push_back(terminal_json(t));
    doc["ilinks"].push_back(
        {{"id", id}, {"terminals", std::move(terms)}, {"target", il.target}});
  }
  return doc.dump(2) + "\n";
}

Network deserialize(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw error(std::string("not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw error("top level must be an object");
  if (!doc.contains("version") || doc.at("version") != 1)
    throw error("missing or unsupported version (expected 1)");
  for (const char* key : {"neurons", "elinks", "ilinks"})
    if (!doc.contains(key) || !doc.at(key).is_array())
      throw error(std::string("missing array \"") + key + "\"");

  Network net;
  NeuronId expect = 0;
  for (const json& n : doc.at("neurons")) {
    if (!n.is_object() || !n.contains("id") || !n.contains("thing") ||
        !n.at("id").is_number_integer() || !n.at("thing").is_string())
      throw error("bad neuron entry");
    NeuronId id = n.at("id").get<NeuronId>();
    if (id != expect)
      throw error("neuron ids must be 0,1,2,... without gaps; saw " + std::to_string(id));
    std::string thing = n.at("thing").get<std::string>();
    if (net.find_neuron(thing))
      throw error("duplicate thing '" + thing + "'");
    net.add_neuron(thing);
    ++expect;
  }

  ELinkId last_el = -1;
  for (const json& e : doc.at("elinks")) {
    if (!e.is_object() || !e.contains("id") || !e.contains("terminals") || !e.contains("head") ||
        !e.at("id").is_number_integer())
      throw error("bad elink entry");
    ELinkId id = e.at("id").get<ELinkId>();
    if (id <= last_el) throw error("elink ids must be strictly increasing");
    last_el = id;
    std::string where = "elink " + std::to_string(id);
    try {
      net.restore_excitatory_link({id, parse_terminals(e.at("terminals"), where),
                                   parse_terminal(e.at("head"), where.c_str())});
    } catch (const error& err) {
      throw error(where + ": " + err.what());
    }
  }

  ILinkId last_il = -1;
  for (const json& i : doc.at("ilinks")) {
    if (!i.is_object() || !i.contains("id") || !i.contains("terminals") ||
        !i.contains("target") || !i.at("id").is_number_integer() ||
        !i.at("target").is_number_integer())
      throw error("bad ilink entry");
    ILinkId id = i.at("id").get<ILinkId>();
    if (id <= last_il) throw error("ilink ids must be strictly increasing");
    last_il = id;
    std::string where = "ilink " + std::to_string(id);
    try {
      net.restore_inhibitory_link(
          {id, parse_terminals(i.at("terminals"), where), i.at("target").get<ELinkId>()});
    } catch (const error& err) {
      throw error(where + ": " + err.what());
    }
  }
  net.audit();
  return net;
}

}  // namespace lognet
