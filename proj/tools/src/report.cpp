#include "pluricalc_cli/report.hpp"

#include <algorithm>

namespace pluricalc::cli {

void Report::check(std::string name, bool pass, std::optional<std::string> value, std::optional<std::string> expected,
                   std::optional<std::string> note) {
  checks.push_back(Check{std::move(name), pass, std::move(value), std::move(expected), std::move(note)});
}

void Report::expect_eq(std::string name, const std::string& value, const std::string& expected) {
  check(std::move(name), value == expected, value, expected);
}

bool Report::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

json Report::to_json() const {
  json cs = json::array();
  for (const auto& c : checks) {
    json o{{"name", c.name}, {"pass", c.pass}};
    if (c.value) o["value"] = *c.value;
    if (c.expected) o["expected"] = *c.expected;
    if (c.note) o["note"] = *c.note;
    cs.push_back(std::move(o));
  }
  return json{{"schema", kSchemaId}, {"command", command}, {"inputs", inputs},
              {"outputs", outputs},  {"checks", cs},       {"pass", pass()}};
}

}  // namespace pluricalc::cli
