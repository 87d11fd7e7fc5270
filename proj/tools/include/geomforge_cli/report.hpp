#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace geomforge::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

struct Verdict {
  std::string id;
  bool pass = false;
  Json expected;
  Json actual;
  std::optional<Json> witness;
};

/// Result of one CLI command. Keys are emitted in insertion order so that the
/// JSON text is a pure function of the inputs.
struct Report {
  std::string command;
  Json parameters = Json::object();
  std::vector<Verdict> verdicts;
  Json counts = Json::object();
  /// Wall-clock time; emitted only when timing output is requested.
  std::optional<long long> elapsed_ms;

  bool passed() const;
  /// Appends a verdict comparing two JSON values for equality.
  Verdict& expect(std::string id, const Json& expected, const Json& actual);
  Verdict& check(std::string id, bool pass, const Json& expected, const Json& actual);
};

Json to_json(const Report& r);
std::string to_json_text(const Report& r);
std::string to_table(const Report& r);

}  // namespace geomforge::cli
