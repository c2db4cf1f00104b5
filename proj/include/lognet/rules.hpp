#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lognet/network.hpp"

namespace lognet {

struct Literal {
  std::string thing;
  bool negated = false;

  friend auto operator<=>(const Literal&, const Literal&) = default;
};

/// One if-then rule. Body literals are a conjunction; each unless-clause is
/// a conjunction of plain things that, when all true, suppresses the rule.
struct Rule {
  std::vector<Literal> body;
  std::vector<std::vector<std::string>> unless_clauses;
  Literal head;

  /// Throws on: empty body, invalid names, a thing appearing twice in the
  /// body, the head thing appearing in the body, or an empty unless-clause.
  /// The head thing MAY appear inside an unless-clause.
  void validate() const;

  friend auto operator<=>(const Rule&, const Rule&) = default;
};

/// Ordered rule collection; insertion drops rules that are syntactically
/// equal up to literal and clause order.
class RuleBase {
public:
  /// Returns false when an equal rule was already present.
  bool add(Rule rule);
  const std::vector<Rule>& rules() const { return rules_; }
  bool empty() const { return rules_.empty(); }
  size_t size() const { return rules_.size(); }

  friend bool operator==(const RuleBase&, const RuleBase&) = default;

private:
  std::vector<Rule> rules_;
};

/// How a negative body literal `not b` is wired into the network.
/// AsInhibitor (default): a simple inhibitory link on b blocks the rule when
/// b is known True; b left Unknown does not block. AsTerminal: a Negative
/// terminal on b, so the rule needs b known False to fire.
enum class Policy { AsInhibitor, AsTerminal };

const char* to_string(Policy p);

class ParseError : public error {
public:
  ParseError(const std::string& what, int line, int column)
      : error(what + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line(line),
        column(column) {}
  int line;
  int column;
};

/// Grammar, one rule per line:
///   rule := "if" lit ("," lit | "and" lit)* ("unless" "(" plit ("and" plit)* ")")* "then" lit
///   lit  := ["not"] TOKEN        plit := TOKEN
/// TOKEN is a thing name; the five keywords are reserved. `#` starts a
/// comment. Literal order is preserved as written.
Rule parse_rule(std::string_view text);
RuleBase parse_rules(std::string_view text);
RuleBase load_rules(const std::string& path);

std::string format_rule(const Rule& rule);
/// One rule per line, trailing newline (empty string for an empty base).
std::string format_rules(const RuleBase& rules);

/// Normal form: within each rule the body is sorted by thing name, clauses
/// are deduplicated and sorted, and under AsInhibitor a single-thing
/// unless-clause (x) becomes the body literal `not x` (kept as a clause when
/// x is the head thing or already a body thing). Rules that compile to the
/// same excitatory link are merged, pooling their inhibitors. Rules are
/// sorted by (head, body, clauses).
RuleBase canonicalize(const RuleBase& rules, Policy policy);

}  // namespace lognet
