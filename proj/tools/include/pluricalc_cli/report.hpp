#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pluricalc/json_io.hpp"

namespace pluricalc::cli {

inline constexpr const char* kSchemaId = "pluricalc.report/1";

struct Check {
  std::string name;
  bool pass = false;
  std::optional<std::string> value;
  std::optional<std::string> expected;
  std::optional<std::string> note;
};

struct Report {
  std::string command;
  json inputs = json::object();
  json outputs = json::object();
  std::vector<Check> checks;

  void check(std::string name, bool pass, std::optional<std::string> value = std::nullopt,
             std::optional<std::string> expected = std::nullopt, std::optional<std::string> note = std::nullopt);
  // value == expected as strings.
  void expect_eq(std::string name, const std::string& value, const std::string& expected);
  bool pass() const;
  json to_json() const;
};

}  // namespace pluricalc::cli
