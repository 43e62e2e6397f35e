#pragma once

#include <optional>
#include <string>

#include <json.hpp>

namespace rookery {

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr const char* kSchemaTag = "rookery/1";

// Provenance block embedded in every report: the subcommand, its full
// parameter echo, the seed when randomness is involved, and digests of
// input and output payloads. Wall time is measured and kept on the struct
// for diagnostics but never serialized: two runs with equal manifests must
// produce byte-identical reports, and elapsed time would break that.
struct RunManifest {
  std::string command;
  nlohmann::json parameters = nlohmann::json::object();
  std::optional<unsigned long long> seed;
  std::string version = kToolVersion;
  nlohmann::json inputs = nlohmann::json::object();   // label -> digest
  nlohmann::json outputs = nlohmann::json::object();  // label -> digest
  long long wall_ms = -1;
};

void record_input(RunManifest& m, const std::string& label,
                  const std::string& bytes);
void record_output(RunManifest& m, const std::string& label,
                   const std::string& bytes);

nlohmann::json manifest_to_json(const RunManifest& m);

// Assembles {"manifest", "result", "schema"}; the digest of the canonical
// result bytes is recorded as output "result" first, so the manifest
// pins exactly what the report carries.
nlohmann::json wrap_report(RunManifest m, nlohmann::json result);

// Canonical bytes of the wrapped report, ready for stdout or a file.
std::string render_report(const RunManifest& m, const nlohmann::json& result);

}  // namespace rookery
