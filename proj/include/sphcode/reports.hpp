#pragma once

// JSON serialization of the analysis and search results.  Exact scalars are
// rendered as canonical strings so reports are stable and lossless.

#include "sphcode/analysis.hpp"
#include "sphcode/search.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace sphcode {

inline constexpr const char* kReportSchemaVersion = "1";

inline nlohmann::json to_json(const std::vector<QuadScalar>& xs) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& x : xs) arr.push_back(x.str());
  return arr;
}

inline nlohmann::json to_json(const CodeParams& p) {
  nlohmann::json j;
  j["schema"] = kReportSchemaVersion;
  j["dim"] = p.dim;
  j["size"] = p.size;
  j["antipodal"] = p.antipodal;
  if (p.a) j["a"] = p.a->str();
  else j["a"] = nullptr;
  j["ip_set"] = to_json(p.ip_set);
  return j;
}

inline nlohmann::json to_json(const DesignReport& r) {
  nlohmann::json j;
  j["schema"] = kReportSchemaVersion;
  j["strength"] = r.strength;
  j["moment_sums"] = to_json(r.moment_sums);
  j["venkov_defect"] = r.venkov_defect.str();
  j["design3"] = r.design3;
  return j;
}

inline nlohmann::json to_json(const OptimalityVerdict& v) {
  nlohmann::json j;
  j["schema"] = kReportSchemaVersion;
  j["level_constant"] = v.level_constant;
  j["equation_holds"] = v.equation_holds;
  j["optimal"] = v.optimal;
  j["level"] = v.level.str();
  j["levels"] = to_json(v.levels);
  return j;
}

inline nlohmann::json to_json(const SearchRow& r) {
  nlohmann::json j;
  j["d_plus_1"] = r.d + 1;
  j["D"] = r.D;
  j["m"] = r.m;
  j["level"] = r.level.str();
  j["code_size"] = r.code_size;
  j["inner_products"] = to_json(r.inner_products);
  j["fisher_ok"] = r.fisher_ok;
  return j;
}

inline std::string search_rows_csv(const std::vector<SearchRow>& rows) {
  std::string out = "d_plus_1,D,m,level,code_size,inner_products,fisher_ok\n";
  for (const auto& r : rows) {
    out += std::to_string(r.d + 1) + "," + std::to_string(r.D) + "," +
           std::to_string(r.m) + "," + r.level.str() + "," +
           std::to_string(r.code_size) + ",";
    for (std::size_t i = 0; i < r.inner_products.size(); ++i) {
      if (i) out += ";";
      out += r.inner_products[i].str();
    }
    out += r.fisher_ok ? ",true\n" : ",false\n";
  }
  return out;
}

}  // namespace sphcode
