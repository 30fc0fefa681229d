#include "arr/report.hpp"

#include <json.hpp>

namespace arr {

std::string RunReport::to_text(long long timing_ms, bool with_timing) const {
  std::string out = "command: " + command + "\n";
  if (!fingerprint.empty()) out += "arrangement: " + fingerprint + "\n";
  for (const auto& [k, v] : results) out += k + ": " + v + "\n";
  if (with_timing) out += "timing_ms: " + std::to_string(timing_ms) + "\n";
  return out;
}

std::string RunReport::to_json(long long timing_ms, bool with_timing) const {
  nlohmann::ordered_json j;
  j["command"] = command;
  if (!fingerprint.empty()) j["arrangement"] = fingerprint;
  nlohmann::ordered_json res = nlohmann::ordered_json::array();
  for (const auto& [k, v] : results) res.push_back({{"key", k}, {"value", v}});
  j["results"] = res;
  if (with_timing) j["timing_ms"] = timing_ms;
  return j.dump(2) + "\n";
}

}  // namespace arr
