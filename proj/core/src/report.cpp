#include "ttpack/report.hpp"

#include <array>
#include <cstdio>

#include <openssl/evp.h>

namespace ttpack {

Json Report::to_json() const {
  Json j;
  j["command"] = command;
  j["input_digest"] = input_digest;
  j["parameters"] = parameters;
  j["result"] = result;
  j["witnesses"] = witnesses;
  j["elapsed_ms"] = elapsed_ms;
  return j;
}

std::string sha256_hex(std::string_view data) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int length = 0;
  EVP_Digest(data.data(), data.size(), digest.data(), &length, EVP_sha256(), nullptr);
  std::string hex;
  hex.reserve(2 * length);
  for (unsigned int i = 0; i < length; ++i) {
    char buf[3];
    std::snprintf(buf, sizeof buf, "%02x", digest[i]);
    hex += buf;
  }
  return hex;
}

std::string report_schema_violation(const Json& j) {
  if (!j.is_object()) return "report is not an object";
  static constexpr std::array<const char*, 6> kKeys = {"command",   "input_digest", "parameters",
                                                       "result",    "witnesses",    "elapsed_ms"};
  for (const char* key : kKeys) {
    if (!j.contains(key)) return std::string("missing key '") + key + "'";
  }
  if (j.size() != kKeys.size()) return "unexpected extra keys";
  if (!j["command"].is_string() || j["command"].get<std::string>().empty()) return "command must be a string";
  if (!j["input_digest"].is_string()) return "input_digest must be a string";
  const auto digest = j["input_digest"].get<std::string>();
  if (digest.size() != 64 || digest.find_first_not_of("0123456789abcdef") != std::string::npos) {
    return "input_digest must be 64 lower-case hex digits";
  }
  if (!j["parameters"].is_object()) return "parameters must be an object";
  if (!j["result"].is_object()) return "result must be an object";
  if (!j["witnesses"].is_array()) return "witnesses must be an array";
  if (!j["elapsed_ms"].is_number() || j["elapsed_ms"].get<double>() < 0) return "elapsed_ms must be >= 0";
  return "";
}

Json to_json(const TransitiveWitness& w) { return Json(w.order); }

Json to_json(const Packing& p) {
  Json j;
  j["pattern"] = p.pattern.name();
  j["pattern_size"] = p.pattern.size();
  j["copies"] = p.embeddings.size();
  j["embeddings"] = p.embeddings;
  j["uncovered"] = bits::to_vector(p.uncovered);
  j["uncovered_count"] = p.uncovered_count();
  return j;
}

Json graph_json(const OrientedGraph& g) {
  Json j;
  j["n"] = g.n();
  Json arcs = Json::array();
  for (const auto& [u, v] : g.arcs()) arcs.push_back({u, v});
  j["arcs"] = std::move(arcs);
  return j;
}

Json graph_json(const PartitionedHost& h) {
  Json j = graph_json(h.graph());
  j["classes"] = h.classes();
  return j;
}

}  // namespace ttpack
