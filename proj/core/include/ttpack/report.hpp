#ifndef TTPACK_REPORT_HPP
#define TTPACK_REPORT_HPP

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "ttpack/graph.hpp"
#include "ttpack/pattern.hpp"
#include "ttpack/tt_search.hpp"

namespace ttpack {

using Json = nlohmann::ordered_json;

// Machine-readable result of one command:
//   {command, input_digest, parameters, result, witnesses, elapsed_ms}
struct Report {
  std::string command;
  std::string input_digest;
  Json parameters = Json::object();
  Json result = Json::object();
  Json witnesses = Json::array();
  double elapsed_ms = 0.0;

  Json to_json() const;
};

// Lower-case hex SHA-256.
std::string sha256_hex(std::string_view data);

// Schema check for the report envelope; returns an error message or "".
std::string report_schema_violation(const Json& j);

Json to_json(const TransitiveWitness& w);
Json to_json(const Packing& p);
// {"n": .., "arcs": [[u,v], ...]} plus "classes" when given.
Json graph_json(const OrientedGraph& g);
Json graph_json(const PartitionedHost& h);

}  // namespace ttpack

#endif  // TTPACK_REPORT_HPP
