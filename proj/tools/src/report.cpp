#include "geomforge_cli/report.hpp"

#include <sstream>

namespace geomforge::cli {

bool Report::passed() const {
  for (const auto& v : verdicts) {
    if (!v.pass) return false;
  }
  return true;
}

Verdict& Report::expect(std::string id, const Json& expected, const Json& actual) {
  return check(std::move(id), expected == actual, expected, actual);
}

Verdict& Report::check(std::string id, bool pass, const Json& expected, const Json& actual) {
  verdicts.push_back(Verdict{std::move(id), pass, expected, actual, std::nullopt});
  return verdicts.back();
}

Json to_json(const Report& r) {
  Json out = Json::object();
  out["schema_version"] = kSchemaVersion;
  out["command"] = r.command;
  out["parameters"] = r.parameters;
  Json verdicts = Json::array();
  for (const auto& v : r.verdicts) {
    Json j = Json::object();
    j["id"] = v.id;
    j["pass"] = v.pass;
    j["expected"] = v.expected;
    j["actual"] = v.actual;
    if (v.witness) j["witness"] = *v.witness;
    verdicts.push_back(std::move(j));
  }
  out["verdicts"] = std::move(verdicts);
  out["counts"] = r.counts;
  out["pass"] = r.passed();
  if (r.elapsed_ms) out["elapsed_ms"] = *r.elapsed_ms;
  return out;
}

std::string to_json_text(const Report& r) { return to_json(r).dump(2) + "\n"; }

std::string to_table(const Report& r) {
  std::ostringstream os;
  os << "geomforge " << r.command;
  for (const auto& [k, v] : r.parameters.items()) os << "  " << k << "=" << (v.is_string() ? v.get<std::string>() : v.dump());
  os << "\n";
  for (const auto& v : r.verdicts) {
    os << "  [" << (v.pass ? "PASS" : "FAIL") << "] " << v.id << "  expected=" << v.expected.dump()
       << "  actual=" << v.actual.dump();
    if (v.witness) os << "  witness=" << v.witness->dump();
    os << "\n";
  }
  if (!r.counts.empty()) {
    os << "counts:\n";
    for (const auto& [k, v] : r.counts.items()) os << "  " << k << ": " << v.dump() << "\n";
  }
  if (r.elapsed_ms) os << "elapsed: " << *r.elapsed_ms << " ms\n";
  os << (r.passed() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

}  // namespace geomforge::cli
