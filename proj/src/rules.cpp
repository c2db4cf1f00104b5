#include "lognet/rules.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace lognet {

const char* to_string(Policy p) {
  return p == Policy::AsInhibitor ? "inhibitor" : "terminal";
}

void Rule::validate() const {
  if (body.empty()) throw error("rule body must not be empty");
  std::set<std::string> seen;
  for (const Literal& l : body) {
    if (!valid_thing_name(l.thing))
      throw error("invalid thing name: '" + l.thing + "'");
    if (!seen.insert(l.thing).second)
      throw error("thing '" + l.thing + "' appears twice in the body");
  }
  if (!valid_thing_name(head.thing))
    throw error("invalid thing name: '" + head.thing + "'");
  if (seen.count(head.thing))
    throw error("head thing '" + head.thing + "' also appears in the body");
  for (const auto& clause : unless_clauses) {
    if (clause.empty()) throw error("unless-clause must not be empty");
    for (const std::string& t : clause)
      if (!valid_thing_name(t))
        throw error("invalid thing name: '" + t + "'");
  }
}

namespace {

Rule sorted_key(const Rule& r) {
  Rule k = r;
  std::sort(k.body.begin(), k.body.end());
  for (auto& clause : k.unless_clauses) {
    std::sort(clause.begin(), clause.end());
    clause.erase(std::unique(clause.begin(), clause.end()), clause.end());
  }
  std::sort(k.unless_clauses.begin(), k.unless_clauses.end());
  k.unless_clauses.erase(std::unique(k.unless_clauses.begin(), k.unless_clauses.end()),
                         k.unless_clauses.end());
  return k;
}

}  // namespace

bool RuleBase::add(Rule rule) {
  Rule key = sorted_key(rule);
  for (const Rule& r : rules_)
    if (sorted_key(r) == key) return false;
  rules_.push_back(std::move(rule));
  return true;
}

namespace {

enum class Tok { Word, Comma, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  int column;
};

bool is_name_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9') || c == '_' || c == '-' || c == '=';
}

bool is_keyword(std::string_view w) {
  return w == "if" || w == "and" || w == "not" || w == "then" || w == "unless";
}

std::vector<Token> tokenize(std::string_view line, int line_no) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < line.size()) {
    char c = line[i];
    int col = static_cast<int>(i) + 1;
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
    } else if (c == '#') {
      break;
    } else if (c == ',') {
      out.push_back({Tok::Comma, ",", col});
      ++i;
    } else if (c == '(') {
      out.push_back({Tok::LParen, "(", col});
      ++i;
    } else if (c == ')') {
      out.push_back({Tok::RParen, ")", col});
      ++i;
    } else if (is_name_char(c)) {
      size_t j = i;
      while (j < line.size() && is_name_char(line[j])) ++j;
      out.push_back({Tok::Word, std::string(line.substr(i, j - i)), col});
      i = j;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", line_no, col);
    }
  }
  out.push_back({Tok::End, "", static_cast<int>(line.size()) + 1});
  return out;
}

class LineParser {
public:
  LineParser(std::string_view line, int line_no)
      : toks_(tokenize(line, line_no)), line_(line_no) {}

  Rule parse() {
    expect_keyword("if");
    std::set<std::string> body_things;
    Rule rule;
    parse_body_literal(rule, body_things);
    while (peek().kind == Tok::Comma || is_word("and")) {
      next();
      parse_body_literal(rule, body_things);
    }
    while (is_word("unless")) {
      next();
      if (peek().kind != Tok::LParen)
        throw ParseError("expected '(' after 'unless'", line_, peek().column);
      next();
      std::vector<std::string> clause;
      clause.push_back(parse_thing());
      while (is_word("and")) {
        next();
        clause.push_back(parse_thing());
      }
      if (peek().kind != Tok::RParen)
        throw ParseError("expected ')' to close the unless-clause", line_, peek().column);
      next();
      rule.unless_clauses.push_back(std::move(clause));
    }
    expect_keyword("then");
    int head_col = peek().column;
    rule.head = parse_literal();
    if (body_things.count(rule.head.thing))
      throw ParseError("head thing '" + rule.head.thing + "' also appears in the body",
                       line_, head_col);
    if (peek().kind != Tok::End)
      throw ParseError("unexpected trailing input '" + peek().text + "'", line_,
                       peek().column);
    return rule;
  }

private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }
  bool is_word(std::string_view w) const {
    return peek().kind == Tok::Word && peek().text == w;
  }

  void expect_keyword(const std::string& kw) {
    if (!is_word(kw))
      throw ParseError("expected '" + kw + "'" +
                           (peek().kind == Tok::End ? "" : ", got '" + peek().text + "'"),
                       line_, peek().column);
    next();
  }

  std::string parse_thing() {
    if (peek().kind != Tok::Word)
      throw ParseError("expected a thing name" +
                           (peek().kind == Tok::End ? "" : ", got '" + peek().text + "'"),
                       line_, peek().column);
    if (is_keyword(peek().text))
      throw ParseError("expected a thing name, got keyword '" + peek().text + "'",
                       line_, peek().column);
    return next().text;
  }

  Literal parse_literal() {
    Literal lit;
    if (is_word("not")) {
      next();
      lit.negated = true;
    }
    lit.thing = parse_thing();
    return lit;
  }

  void parse_body_literal(Rule& rule, std::set<std::string>& body_things) {
    int col = peek().column;
    Literal lit = parse_literal();
    if (!body_things.insert(lit.thing).second)
      throw ParseError("thing '" + lit.thing + "' appears twice in the body", line_, col);
    rule.body.push_back(std::move(lit));
  }

  std::vector<Token> toks_;
  int line_;
  size_t pos_ = 0;
};

bool blank_line(std::string_view line) {
  for (char c : line) {
    if (c == '#') return true;
    if (c != ' ' && c != '\t' && c != '\r') return false;
  }
  return true;
}

}  // namespace

Rule parse_rule(std::string_view text) {
  size_t nl = text.find('\n');
  if (nl != std::string_view::npos && !blank_line(text.substr(nl + 1)))
    throw ParseError("expected a single rule", 2, 1);
  return LineParser(text.substr(0, nl), 1).parse();
}

RuleBase parse_rules(std::string_view text) {
  RuleBase out;
  int line_no = 0;
  size_t start = 0;
  while (start <= text.size()) {
    size_t nl = text.find('\n', start);
    std::string_view line = text.substr(
        start, nl == std::string_view::npos ? text.size() - start : nl - start);
    ++line_no;
    if (!blank_line(line)) out.add(LineParser(line, line_no).parse());
    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }
  return out;
}

RuleBase load_rules(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error("cannot open rule file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_rules(buf.str());
}

std::string format_rule(const Rule& rule) {
  std::string out = "if ";
  for (size_t i = 0; i < rule.body.size(); ++i) {
    if (i) out += ", ";
    if (rule.body[i].negated) out += "not ";
    out += rule.body[i].thing;
  }
  for (const auto& clause : rule.unless_clauses) {
    out += " unless (";
    for (size_t i = 0; i < clause.size(); ++i) {
      if (i) out += " and ";
      out += clause[i];
    }
    out += ")";
  }
  out += " then ";
  if (rule.head.negated) out += "not ";
  out += rule.head.thing;
  return out;
}

std::string format_rules(const RuleBase& rules) {
  std::string out;
  for (const Rule& r : rules.rules()) {
    out += format_rule(r);
    out += '\n';
  }
  return out;
}

RuleBase canonicalize(const RuleBase& rules, Policy policy) {
  struct Group {
    std::set<std::string> negatives;
    std::set<std::vector<std::string>> clauses;
  };
  // signature: the body part that determines the rule's excitatory link,
  // plus the head; rules sharing it share that link and pool inhibitors
  std::map<std::pair<Literal, std::vector<Literal>>, Group> groups;

  for (const Rule& r : rules.rules()) {
    r.validate();
    std::set<std::string> pos;
    std::set<std::string> neg;
    for (const Literal& l : r.body) (l.negated ? neg : pos).insert(l.thing);
    std::set<std::vector<std::string>> clauses;
    for (std::vector<std::string> c : r.unless_clauses) {
      std::sort(c.begin(), c.end());
      c.erase(std::unique(c.begin(), c.end()), c.end());
      clauses.insert(std::move(c));
    }

    std::vector<Literal> signature;
    if (policy == Policy::AsInhibitor) {
      // a one-thing clause is the same inhibitor `not x` builds, so fold it
      // into the body unless that would put the thing in the body twice
      for (auto it = clauses.begin(); it != clauses.end();) {
        if (it->size() == 1 && it->front() != r.head.thing && !pos.count(it->front())) {
          neg.insert(it->front());
          it = clauses.erase(it);
        } else {
          ++it;
        }
      }
      for (const std::string& t : pos) signature.push_back({t, false});
    } else {
      for (const std::string& t : pos) signature.push_back({t, false});
      for (const std::string& t : neg) signature.push_back({t, true});
      std::sort(signature.begin(), signature.end(),
                [](const Literal& a, const Literal& b) { return a.thing < b.thing; });
      neg.clear();
    }

    Group& g = groups[{r.head, std::move(signature)}];
    g.negatives.insert(neg.begin(), neg.end());
    g.clauses.insert(clauses.begin(), clauses.end());
  }

  std::vector<Rule> out;
  for (const auto& [key, g] : groups) {
    Rule r;
    r.head = key.first;
    r.body = key.second;
    for (const std::string& t : g.negatives) r.body.push_back({t, true});
    std::sort(r.body.begin(), r.body.end(),
              [](const Literal& a, const Literal& b) { return a.thing < b.thing; });
    r.unless_clauses.assign(g.clauses.begin(), g.clauses.end());
    out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end(), [](const Rule& a, const Rule& b) {
    if (auto c = a.head <=> b.head; c != 0) return c < 0;
    if (auto c = a.body <=> b.body; c != 0) return c < 0;
    return a.unless_clauses < b.unless_clauses;
  });

  RuleBase rb;
  for (Rule& r : out) rb.add(std::move(r));
  return rb;
}

}  // namespace lognet
