#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "polyorder/casestudy.hpp"
#include "polyorder/classify.hpp"
#include "polyorder/dominance.hpp"
#include "polyorder/dynamics.hpp"

namespace polyorder {

/// Insertion-ordered so reruns print keys in a fixed, documented order.
using Json = nlohmann::ordered_json;

Json to_json(const Point& p);
Json to_json(const ToleranceConfig& cfg);
Json to_json(const IntegratorConfig& cfg);
Json to_json(const DominanceVerdict& v);
Json to_json(const Witness& w);
Json to_json(const ClassificationReport& r);
Json to_json(const SetCheckResult& r);
Json to_json(const CriticalCatalog& c);
Json to_json(const CatalogAgreementReport& r);
Json to_json(const DominanceCoverageReport& r);
Json to_json(const MexicanHatReport& r);
Json to_json(const SetStabilityReport& r);

/// Record of one CLI run, written next to its outputs.
struct RunManifest {
  std::string command;
  std::map<std::string, std::string> args;
  std::uint64_t seed = 42;
  ToleranceConfig tolerance;
  IntegratorConfig integrator;
  std::string tool_version;
  std::vector<std::string> outputs;
};

Json to_json(const RunManifest& m);

/// Pretty-printed (2-space indent) with a trailing newline.
std::string dump(const Json& j);

/// Writes dump(j) to `path`; throws std::runtime_error on I/O failure.
void write_json_file(const std::string& path, const Json& j);

const char* library_version();

}  // namespace polyorder
