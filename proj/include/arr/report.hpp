#pragma once

#include <string>
#include <utility>
#include <vector>

namespace arr {

// Structured run report.  Identical inputs produce byte-identical text apart
// from the timing line, which is emitted last and can be suppressed.
struct RunReport {
  std::string command;
  std::string fingerprint;
  std::vector<std::pair<std::string, std::string>> results;

  void add(const std::string& key, const std::string& value) { results.emplace_back(key, value); }

  std::string to_text(long long timing_ms, bool with_timing) const;
  std::string to_json(long long timing_ms, bool with_timing) const;
};

}  // namespace arr
