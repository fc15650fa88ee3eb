#pragma once

#include "toric/polytope.hpp"

#include <json.hpp>

#include <string>

// Interchange format:
//   {"dim": n, "facets": [{"conormal": [int, ...], "constant": "p/q"}, ...]}
// Constants are exact "p/q" strings. Conormal entries are JSON integers; entries
// outside the 64-bit range are written as decimal strings and read back either way.
namespace toric::json {

nlohmann::json integer_to_json(const Integer& x);
Integer integer_from_json(const nlohmann::json& j);

nlohmann::json to_json(const DelzantPolytope& p);
DelzantPolytope polytope_from_json(const nlohmann::json& j);

DelzantPolytope read_polytope(const std::string& path);
void write_polytope(const std::string& path, const DelzantPolytope& p);

}  // namespace toric::json
