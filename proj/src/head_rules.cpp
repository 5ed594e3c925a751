#include "discourse/head_rules.hpp"

#include <fstream>
#include <sstream>

#include "discourse/errors.hpp"
#include "discourse/syntax.hpp"
#include "embedded_data.hpp"

namespace discourse {
namespace {

HeadDirection parse_direction(const std::string& s, int line) {
  if (s == "left") return HeadDirection::left;
  if (s == "right") return HeadDirection::right;
  if (s == "leftdis") return HeadDirection::leftdis;
  if (s == "rightdis") return HeadDirection::rightdis;
  throw ParseError("unknown head direction '" + s + "'", line, 1);
}

bool from_left(HeadDirection d) {
  return d == HeadDirection::left || d == HeadDirection::leftdis;
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string field;
  while (in >> field) out.push_back(field);
  return out;
}

}  // namespace

HeadRuleTable HeadRuleTable::parse(std::string_view text) {
  HeadRuleTable table;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto fields = split_fields(line);
    if (fields.empty()) continue;
    if (fields.size() < 2) throw ParseError("head rule needs a label and a direction", line_no, 1);
    HeadRule rule{parse_direction(fields[1], line_no), {fields.begin() + 2, fields.end()}};
    if (fields[0] == "*default*") {
      table.default_direction_ = rule.direction;
    } else {
      table.rules_[fields[0]].push_back(std::move(rule));
    }
  }
  return table;
}

HeadRuleTable HeadRuleTable::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open head rule file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

const HeadRuleTable& HeadRuleTable::standard() {
  static const HeadRuleTable table = parse(embedded::head_rules);
  return table;
}

const std::vector<HeadRule>* HeadRuleTable::rules_for(const std::string& label) const {
  auto it = rules_.find(label);
  return it == rules_.end() ? nullptr : &it->second;
}

int HeadRuleTable::head_child(const SyntaxTree& tree, int node) const {
  const auto& children = tree.node(node).children;
  const int n = static_cast<int>(children.size());
  if (n == 1) return 0;
  auto label_of = [&](int k) -> const std::string& { return tree.node(children[k]).label; };
  auto scan = [&](bool left_first, auto&& match) {
    for (int step = 0; step < n; ++step) {
      int k = left_first ? step : n - 1 - step;
      if (match(label_of(k))) return k;
    }
    return -1;
  };

  const auto* rules = rules_for(tree.node(node).label);
  if (rules == nullptr || rules->empty()) return from_left(default_direction_) ? 0 : n - 1;

  for (const auto& rule : *rules) {
    const bool left_first = from_left(rule.direction);
    if (rule.priorities.empty()) return left_first ? 0 : n - 1;
    int found = -1;
    if (rule.direction == HeadDirection::left || rule.direction == HeadDirection::right) {
      for (const auto& wanted : rule.priorities) {
        found = scan(left_first, [&](const std::string& l) { return l == wanted; });
        if (found >= 0) break;
      }
    } else {
      found = scan(left_first, [&](const std::string& l) {
        for (const auto& wanted : rule.priorities)
          if (l == wanted) return true;
        return false;
      });
    }
    if (found >= 0) return found;
  }
  return from_left(rules->front().direction) ? 0 : n - 1;
}

}  // namespace discourse
