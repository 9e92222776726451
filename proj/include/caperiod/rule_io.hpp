#pragma once

// Rule JSON: {"n": int, "orientation": "left"|"right", "table": [int; n^2]},
// table index c0 * n + c1. Serialisation is compact and key-ordered, so
// parse(dump(rule)) == rule and dump(parse(text)) == text for canonical text.

#include <filesystem>
#include <string>

#include <json.hpp>

#include "caperiod/engine.hpp"

namespace caperiod {

nlohmann::json rule_to_json(const RuleTable& rule);
RuleTable rule_from_json(const nlohmann::json& j);

std::string dump_rule(const RuleTable& rule);
RuleTable parse_rule(const std::string& text);

RuleTable read_rule_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace caperiod
