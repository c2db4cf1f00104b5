#include "lognet/neurule.hpp"

#include <cstdio>
#include <set>
#include <sstream>

#include "lognet/network.hpp"

namespace lognet {

NeuruleOutput evaluate(const Neurule& nr, const NeuruleInput& in) {
  if (in.size() != nr.conditions.size())
    throw error("expected " + std::to_string(nr.conditions.size()) + " input values, got " +
                std::to_string(in.size()));
  double sum = nr.bias;
  for (size_t i = 0; i < in.size(); ++i) {
    if (in[i] < -1 || in[i] > 1)
      throw error("input values must be -1, 0 or 1");
    sum += nr.conditions[i].second * in[i];
  }
  return {sum, sum > 0.0};
}

namespace {

std::string format_factor(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

}  // namespace

Neurule parse_neurule(std::string_view text) {
  Neurule nr;
  bool saw_conclusion = false, saw_bias = false;
  std::set<std::string> labels;
  int line_no = 0;
  size_t start = 0;
  while (start <= text.size()) {
    size_t nl = text.find('\n', start);
    std::string line(text.substr(
        start, nl == std::string_view::npos ? text.size() - start : nl - start));
    ++line_no;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream in(line);
    std::string kind;
    if (in >> kind) {
      auto fail = [&](const std::string& msg) {
        throw error("line " + std::to_string(line_no) + ": " + msg);
      };
      if (kind == "conclusion") {
        std::string name, extra;
        if (!(in >> name) || (in >> extra)) fail("expected: conclusion NAME");
        if (!valid_thing_name(name)) fail("invalid conclusion name '" + name + "'");
        if (saw_conclusion) fail("duplicate conclusion line");
        nr.conclusion = name;
        saw_conclusion = true;
      } else if (kind == "bias") {
        std::string extra;
        if (!(in >> nr.bias) || (in >> extra)) fail("expected: bias VALUE");
        if (saw_bias) fail("duplicate bias line");
        saw_bias = true;
      } else if (kind == "condition") {
        std::string label, extra;
        double factor;
        if (!(in >> label >> factor) || (in >> extra))
          fail("expected: condition LABEL FACTOR");
        if (!valid_thing_name(label)) fail("invalid condition label '" + label + "'");
        if (!labels.insert(label).second) fail("duplicate condition '" + label + "'");
        nr.conditions.emplace_back(label, factor);
      } else {
        fail("unknown line kind '" + kind + "'");
      }
    }
    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }
  if (!saw_conclusion) throw error("missing conclusion line");
  if (!saw_bias) throw error("missing bias line");
  return nr;
}

std::string format_neurule(const Neurule& nr) {
  std::string out = "conclusion " + nr.conclusion + "\n";
  out += "bias " + format_factor(nr.bias) + "\n";
  for (const auto& [label, factor] : nr.conditions)
    out += "condition " + label + " " + format_factor(factor) + "\n";
  return out;
}

Neurule bone_neurule() {
  return {"primary-malignant",
          -9.7,
          {{"antinflam-none", 12.4},
           {"night-pain", 12.3},
           {"continuous-pain", 11.9},
           {"patient-21-35", 8.8},
           {"patient-0-20", 8.4},
           {"no-fever", 4.5}}};
}

std::vector<BoneCase> bone_cases() {
  return {
      {"case-1", {1, -1, 1, 1, -1, 1}},
      {"case-2", {1, 1, -1, 1, -1, 0}},
      {"case-3", {1, -1, 1, -1, 1, 1}},
      {"case-4", {1, 1, -1, -1, 1, 1}},
  };
}

AdjustmentReport adjustment_experiment(const Neurule& nr) {
  Neurule heavier_bias = nr;
  heavier_bias.bias = -17.0;
  Neurule heavier_night_pain = nr;
  for (auto& [label, factor] : heavier_night_pain.conditions)
    if (label == "night-pain") factor = 19.6;

  AdjustmentReport report;
  for (auto& [name, unit] : std::initializer_list<std::pair<std::string, Neurule>>{
           {"original", nr},
           {"bias-17", heavier_bias},
           {"night-pain-19.6", heavier_night_pain}}) {
    AdjustmentVariant variant{name, unit, {}, {}};
    for (const BoneCase& bc : bone_cases()) {
      variant.outputs.push_back(evaluate(unit, bc.input));
      if (variant.outputs.back().output) variant.represents.push_back(bc.name);
    }
    report.variants.push_back(std::move(variant));
  }
  return report;
}

std::string format_adjustment(const AdjustmentReport& report) {
  std::string out;
  std::vector<BoneCase> cases = bone_cases();
  for (const AdjustmentVariant& v : report.variants) {
    out += v.name + ":\n";
    for (size_t i = 0; i < v.outputs.size(); ++i) {
      char buf[64];
      std::snprintf(buf, sizeof(buf), "%.1f", v.outputs[i].sum);
      out += "  " + cases[i].name + ": sum " + buf + " -> " +
             (v.outputs[i].output ? "represented" : "lost") + "\n";
    }
    out += "  represents:";
    if (v.represents.empty()) out += " none";
    for (const std::string& name : v.represents) out += " " + name;
    out += "\n";
  }
  return out;
}

}  // namespace lognet
