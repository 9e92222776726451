#include "caperiod/rule_io.hpp"

#include <fstream>
#include <sstream>

#include "caperiod/errors.hpp"

namespace caperiod {

nlohmann::json rule_to_json(const RuleTable& rule) {
  return {
      {"n", rule.n},
      {"orientation", rule.orientation == Orientation::Left ? "left" : "right"},
      {"table", rule.table},
  };
}

RuleTable rule_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw UsageError("rule JSON: expected an object");
  for (const auto& [key, value] : j.items())
    if (key != "n" && key != "orientation" && key != "table") throw UsageError("rule JSON: unknown key '" + key + "'");
  if (!j.contains("n") || !j.at("n").is_number_integer()) throw UsageError("rule JSON: 'n' must be an integer");
  if (!j.contains("orientation") || !j.at("orientation").is_string())
    throw UsageError("rule JSON: 'orientation' must be \"left\" or \"right\"");
  if (!j.contains("table") || !j.at("table").is_array()) throw UsageError("rule JSON: 'table' must be an array");

  RuleTable rule;
  rule.n = j.at("n").get<Int>();
  const auto orientation = j.at("orientation").get<std::string>();
  if (orientation == "left")
    rule.orientation = Orientation::Left;
  else if (orientation == "right")
    rule.orientation = Orientation::Right;
  else
    throw UsageError("rule JSON: orientation must be \"left\" or \"right\", got \"" + orientation + "\"");
  for (const auto& v : j.at("table")) {
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<Int>() >= 0))
      throw UsageError("rule JSON: table entries must be non-negative integers");
    rule.table.push_back(v.get<State>());
  }
  rule.validate();
  return rule;
}

std::string dump_rule(const RuleTable& rule) { return rule_to_json(rule).dump(); }

RuleTable parse_rule(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError(std::string("rule JSON: ") + e.what());
  }
  return rule_from_json(j);
}

RuleTable read_rule_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open rule file " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_rule(buffer.str());
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path.string());
  out << text;
  if (!text.empty() && text.back() != '\n') out << '\n';
}

}  // namespace caperiod
