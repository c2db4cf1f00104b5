#include "lognet/dataset.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <random>
#include <set>

#include "lognet/build.hpp"
#include "lognet/infer.hpp"

namespace lognet {

namespace {

std::vector<std::string> split_csv_row(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  for (char c : line) {
    if (c == ',') {
      out.push_back(field);
      field.clear();
    } else if (c != '\r') {
      field += c;
    }
  }
  out.push_back(field);
  return out;
}

std::vector<std::vector<std::string>> load_csv(const std::string& path, size_t columns) {
  std::ifstream in(path);
  if (!in) throw error("cannot open dataset file: " + path);
  std::vector<std::vector<std::string>> rows;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    std::vector<std::string> row = split_csv_row(line);
    if (row.size() != columns)
      throw error("row " + std::to_string(line_no) + ": expected " +
                  std::to_string(columns) + " columns, got " + std::to_string(row.size()));
    rows.push_back(std::move(row));
  }
  return rows;
}

const std::vector<std::string>& mushroom_attributes() {
  static const std::vector<std::string> names = {
      "cap-shape", "cap-surface", "cap-color", "bruises", "odor",
      "gill-attachment", "gill-spacing", "gill-size", "gill-color", "stalk-shape",
      "stalk-root", "stalk-surface-above-ring", "stalk-surface-below-ring",
      "stalk-color-above-ring", "stalk-color-below-ring", "veil-type", "veil-color",
      "ring-number", "ring-type", "spore-print-color", "population", "habitat"};
  return names;
}

}  // namespace

std::vector<Record> load_mushroom(const std::string& path, int n_attrs, int n_records) {
  const auto& names = mushroom_attributes();
  if (n_attrs < 1 || n_attrs > static_cast<int>(names.size()))
    throw error("n_attrs must be between 1 and " + std::to_string(names.size()));
  if (n_records < 0) throw error("n_records must not be negative");
  std::vector<Record> out;
  int row_no = 0;
  for (const auto& row : load_csv(path, names.size() + 1)) {
    ++row_no;
    if (static_cast<int>(out.size()) >= n_records) break;
    Record rec;
    rec.class_name = "class";
    if (row[0] == "e")
      rec.class_label = "edible";
    else if (row[0] == "p")
      rec.class_label = "poisonous";
    else
      throw error("row " + std::to_string(row_no) + ": class must be e or p, got '" +
                  row[0] + "'");
    for (int i = 0; i < n_attrs; ++i) {
      const std::string& value = row[static_cast<size_t>(i) + 1];
      if (!valid_thing_name(value))
        throw error("row " + std::to_string(row_no) + ": bad value '" + value +
                    "' for " + names[static_cast<size_t>(i)]);
      rec.attributes.emplace_back(names[static_cast<size_t>(i)], value);
    }
    out.push_back(std::move(rec));
  }
  return out;
}

SpectLoad load_spect(const std::string& path, bool remove_indecisive) {
  std::vector<Record> all;
  int row_no = 0;
  for (const auto& row : load_csv(path, 23)) {
    ++row_no;
    Record rec;
    rec.class_name = "heart";
    if (row[0] == "1")
      rec.class_label = "abnormal";
    else if (row[0] == "0")
      rec.class_label = "normal";
    else
      throw error("row " + std::to_string(row_no) + ": class must be 0 or 1, got '" +
                  row[0] + "'");
    for (size_t i = 1; i < row.size(); ++i) {
      if (row[i] != "0" && row[i] != "1")
        throw error("row " + std::to_string(row_no) + ": feature F" + std::to_string(i) +
                    " must be 0 or 1, got '" + row[i] + "'");
      rec.attributes.emplace_back("F" + std::to_string(i), row[i]);
    }
    all.push_back(std::move(rec));
  }
  SpectLoad out;
  if (!remove_indecisive) {
    out.records = std::move(all);
    return out;
  }
  std::map<std::vector<std::pair<std::string, std::string>>, std::set<std::string>> labels;
  for (const Record& rec : all) labels[rec.attributes].insert(rec.class_label);
  for (Record& rec : all) {
    if (labels.at(rec.attributes).size() > 1)
      ++out.removed;
    else
      out.records.push_back(std::move(rec));
  }
  return out;
}

Rule record_to_rule(const Record& rec) {
  Rule rule;
  for (const auto& [name, value] : rec.attributes)
    rule.body.push_back({name + "=" + value, false});
  rule.head = {rec.class_thing(), false};
  return rule;
}

std::vector<Record> select_slice(const std::vector<Record>& records, size_t n,
                                 std::uint64_t seed) {
  std::vector<Record> out = records;
  std::mt19937_64 gen(seed);
  for (size_t i = out.size(); i > 1; --i)
    std::swap(out[i - 1], out[gen() % i]);
  if (n < out.size()) out.resize(n);
  return out;
}

MemorizationReport memorize(const std::vector<Record>& records) {
  MemorizationReport report;

  std::map<std::vector<std::pair<std::string, std::string>>, std::vector<size_t>> bodies;
  for (size_t i = 0; i < records.size(); ++i) bodies[records[i].attributes].push_back(i);
  for (const auto& [body, indices] : bodies) {
    std::set<std::string> labels;
    for (size_t i : indices) labels.insert(records[i].class_thing());
    if (labels.size() > 1) {
      std::string who = "records";
      for (size_t i : indices) who += " " + std::to_string(i + 1);
      who += " share attributes but conclude differently:";
      for (const std::string& l : labels) who += " " + l;
      report.conflicts.push_back(std::move(who));
    }
  }

  Network net;
  std::vector<std::string> class_things;
  for (size_t i = 0; i < records.size(); ++i) {
    add_rule(net, record_to_rule(records[i]));
    class_things.push_back(records[i].class_thing());

    int recalled = 0;
    std::set<std::string> flagged;
    for (size_t j = 0; j <= i; ++j) {
      FactSet facts;
      for (const auto& [name, value] : records[j].attributes)
        facts.assignments[name + "=" + value] = true;
      InferenceResult result = infer(net, facts);
      flagged.insert(result.contradictions.begin(), result.contradictions.end());

      bool right = false;
      auto it = result.states.find(records[j].class_thing());
      if (it != result.states.end() && it->second.value == Truth::True &&
          !it->second.contradictory) {
        right = true;
        for (const std::string& other : class_things)
          if (other != records[j].class_thing()) {
            auto ot = result.states.find(other);
            if (ot != result.states.end() && ot->second.value == Truth::True) right = false;
          }
      }
      if (right) ++recalled;
    }
    report.steps.push_back({static_cast<int>(i) + 1, recalled, static_cast<int>(i) + 1,
                            static_cast<int>(flagged.size()), net.stats()});
  }
  if (!report.steps.empty())
    report.final_recall =
        static_cast<double>(report.steps.back().recalled) / report.steps.back().total;
  return report;
}

std::string MemorizationReport::csv() const {
  std::string out = "step,recalled,total,contradictions\n";
  for (const MemorizeStep& s : steps)
    out += std::to_string(s.step) + "," + std::to_string(s.recalled) + "," +
           std::to_string(s.total) + "," + std::to_string(s.contradictions) + "\n";
  return out;
}

std::string MemorizationReport::text() const {
  std::string out;
  if (steps.empty()) {
    out += "records: 0\nfinal recall: nothing to store\n";
    return out;
  }
  const MemorizeStep& last = steps.back();
  char frac[32];
  std::snprintf(frac, sizeof(frac), "%.3f", final_recall);
  out += "records: " + std::to_string(last.total) + "\n";
  out += "final recall: " + std::to_string(last.recalled) + "/" +
         std::to_string(last.total) + " (" + frac + ")\n";
  out += "contradictions in final replay: " + std::to_string(last.contradictions) + "\n";
  out += "network: " + std::to_string(last.net.neurons) + " neurons, " +
         std::to_string(last.net.elinks) + " excitatory links, " +
         std::to_string(last.net.ilinks) + " inhibitory links\n";
  if (conflicts.empty()) {
    out += "conflicts: none\n";
  } else {
    out += "conflicts:\n";
    for (const std::string& c : conflicts) out += "  " + c + "\n";
  }
  return out;
}

}  // namespace lognet
