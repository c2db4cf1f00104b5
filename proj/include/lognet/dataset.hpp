#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "lognet/network.hpp"
#include "lognet/rules.hpp"

namespace lognet {

struct Record {
  std::vector<std::pair<std::string, std::string>> attributes;  // (name, value)
  std::string class_name;
  std::string class_label;

  std::string class_thing() const { return class_name + "=" + class_label; }

  friend bool operator==(const Record&, const Record&) = default;
};

/// UCI mushroom CSV: class (`e`/`p`) then 22 single-letter attributes. Keeps
/// the first n_records rows and the first n_attrs attribute columns; class
/// becomes `class=edible|poisonous`, attributes `cap-shape=x` style things.
std::vector<Record> load_mushroom(const std::string& path, int n_attrs = 22,
                                  int n_records = std::numeric_limits<int>::max());

struct SpectLoad {
  std::vector<Record> records;
  int removed = 0;  // rows dropped for appearing under both labels
};

/// UCI SPECT CSV: class (0/1) then 22 binary features. Features become
/// `F<i>=0|1`, class `heart=normal|abnormal` (1 is abnormal). With
/// remove_indecisive, any feature vector that occurs under both labels is
/// dropped entirely (all copies, both labels).
SpectLoad load_spect(const std::string& path, bool remove_indecisive = true);

/// Every attribute as a positive condition, the class thing as conclusion.
Rule record_to_rule(const Record& rec);

/// The first n records of a seeded shuffle (plain Fisher-Yates over a
/// fixed-width generator, so slices are identical across platforms).
std::vector<Record> select_slice(const std::vector<Record>& records, size_t n,
                                 std::uint64_t seed);

struct MemorizeStep {
  int step = 0;         // records stored so far
  int recalled = 0;     // stored records still answered correctly
  int total = 0;
  int contradictions = 0;  // distinct things flagged during this step's replays
  NetworkStats net;

  friend bool operator==(const MemorizeStep&, const MemorizeStep&) = default;
};

struct MemorizationReport {
  std::vector<MemorizeStep> steps;
  /// Same attributes, different class: the records that can never all be
  /// recalled, named by their 1-based positions.
  std::vector<std::string> conflicts;
  double final_recall = 1.0;

  std::string csv() const;   // step,recalled,total,contradictions
  std::string text() const;  // human summary
};

/// Stores records one at a time as rules and, after each insertion, replays
/// every stored record: facts = its attribute things True, recalled when its
/// class thing comes out True and no competing class thing does.
MemorizationReport memorize(const std::vector<Record>& records);

}  // namespace lognet
