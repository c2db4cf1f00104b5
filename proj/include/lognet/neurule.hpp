#pragma once

#include <string>
#include <utility>
#include <vector>

namespace lognet {

/// Adaline-style comparison unit: one weighted threshold cell per
/// conclusion. Weights are significance factors over tri-valued inputs.
struct Neurule {
  std::string conclusion;
  double bias = 0.0;
  std::vector<std::pair<std::string, double>> conditions;  // (label, factor)
};

/// Per-condition input: 1 = True, -1 = False, 0 = Unknown.
using NeuruleInput = std::vector<int>;

struct NeuruleOutput {
  double sum = 0.0;
  bool output = false;  // strictly positive sum
};

/// sum = bias + sum of factor_i * x_i. Throws on arity mismatch or an input
/// value outside {-1, 0, 1}.
NeuruleOutput evaluate(const Neurule& nr, const NeuruleInput& in);

/// Definition file: `conclusion NAME`, `bias VALUE`, then one
/// `condition LABEL FACTOR` per line; `#` comments.
Neurule parse_neurule(std::string_view text);
std::string format_neurule(const Neurule& nr);

/// The bone-tumor unit: concludes primary-malignant from six symptom
/// conditions with factors 12.4 down to 4.5 and bias -9.7.
Neurule bone_neurule();

/// The four symptom patterns the unit is supposed to stand for, as inputs
/// aligned with bone_neurule's condition order.
struct BoneCase {
  std::string name;
  NeuruleInput input;
};
std::vector<BoneCase> bone_cases();

/// What happens when single parameters are nudged to disable the first
/// pattern: the original weights pass all four, while each adjustment also
/// knocks out patterns it should have kept.
struct AdjustmentVariant {
  std::string name;
  Neurule neurule;
  std::vector<NeuruleOutput> outputs;  // one per bone case
  std::vector<std::string> represents;  // case names with output true
};
struct AdjustmentReport {
  std::vector<AdjustmentVariant> variants;  // original, bias-17, night-pain-19.6
};
AdjustmentReport adjustment_experiment(const Neurule& nr);
std::string format_adjustment(const AdjustmentReport& report);

}  // namespace lognet
