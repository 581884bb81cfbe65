#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace tkklab {

// Outcome of one named check. `detail` carries a witness on failure.
struct Check {
  std::string name;
  bool ok = true;
  std::string detail;
  nlohmann::json data = nlohmann::json::object();
};

struct Report {
  std::vector<Check> checks;

  void add(std::string name, bool ok, std::string detail = {}, nlohmann::json data = nlohmann::json::object()) {
    checks.push_back({std::move(name), ok, std::move(detail), std::move(data)});
  }
  void append(const Report& other) { checks.insert(checks.end(), other.checks.begin(), other.checks.end()); }
  bool ok() const {
    for (const auto& c : checks)
      if (!c.ok) return false;
    return true;
  }
  const Check* first_failure() const {
    for (const auto& c : checks)
      if (!c.ok) return &c;
    return nullptr;
  }
};

inline nlohmann::json to_json(const Check& c) {
  nlohmann::json j = {{"identity", c.name}, {"status", c.ok ? "pass" : "fail"}};
  if (!c.detail.empty()) j["witness"] = c.detail;
  if (!c.data.empty()) j["data"] = c.data;
  return j;
}

}  // namespace tkklab
