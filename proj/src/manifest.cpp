#include "rookery/manifest.hpp"

#include "rookery/json_io.hpp"

namespace rookery {

void record_input(RunManifest& m, const std::string& label,
                  const std::string& bytes) {
  m.inputs[label] = fnv1a_hex(bytes);
}

void record_output(RunManifest& m, const std::string& label,
                   const std::string& bytes) {
  m.outputs[label] = fnv1a_hex(bytes);
}

nlohmann::json manifest_to_json(const RunManifest& m) {
  nlohmann::json j;
  j["command"] = m.command;
  j["parameters"] = m.parameters;
  if (m.seed)
    j["seed"] = *m.seed;
  else
    j["seed"] = nullptr;
  j["version"] = m.version;
  j["inputs"] = m.inputs;
  j["outputs"] = m.outputs;
  return j;
}

nlohmann::json wrap_report(RunManifest m, nlohmann::json result) {
  record_output(m, "result", canonical_dump(result));
  nlohmann::json j;
  j["schema"] = kSchemaTag;
  j["manifest"] = manifest_to_json(m);
  j["result"] = std::move(result);
  return j;
}

std::string render_report(const RunManifest& m, const nlohmann::json& result) {
  return canonical_dump(wrap_report(m, result));
}

}  // namespace rookery
