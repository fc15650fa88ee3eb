#include "toric/polytope_json.hpp"

#include <cstdint>
#include <fstream>
#include <limits>
#include <stdexcept>

namespace toric::json {

using nlohmann::json;

json integer_to_json(const Integer& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max()) {
    return json(x.convert_to<std::int64_t>());
  }
  return json(x.str());
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(j.get<std::uint64_t>());
    return Integer(j.get<std::int64_t>());
  }
  if (j.is_string()) return parse_integer(j.get<std::string>());
  throw std::invalid_argument("expected an integer, got " + j.dump());
}

json to_json(const DelzantPolytope& p) {
  json facets = json::array();
  for (const auto& f : p.facets) {
    json conormal = json::array();
    for (const auto& x : f.conormal) conormal.push_back(integer_to_json(x));
    facets.push_back({{"conormal", conormal}, {"constant", format_rational(f.constant)}});
  }
  return {{"dim", p.dim}, {"facets", facets}};
}

DelzantPolytope polytope_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("facets")) {
    throw std::invalid_argument("polytope JSON needs \"dim\" and \"facets\"");
  }
  if (!j.at("dim").is_number_unsigned() || j.at("dim").get<std::size_t>() == 0) {
    throw std::invalid_argument("\"dim\" must be a positive integer");
  }
  DelzantPolytope p;
  p.dim = j.at("dim").get<std::size_t>();
  for (const auto& f : j.at("facets")) {
    Facet facet;
    for (const auto& x : f.at("conormal")) facet.conormal.push_back(integer_from_json(x));
    if (facet.conormal.size() != p.dim) {
      throw std::invalid_argument("conormal " + f.at("conormal").dump() + " does not have dim entries");
    }
    const json& c = f.at("constant");
    if (c.is_string()) {
      facet.constant = parse_rational(c.get<std::string>());
    } else if (c.is_number_integer()) {
      facet.constant = Rational(integer_from_json(c));
    } else {
      throw std::invalid_argument("facet constant must be a \"p/q\" string");
    }
    p.facets.push_back(std::move(facet));
  }
  return p;
}

DelzantPolytope read_polytope(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
  return polytope_from_json(j);
}

void write_polytope(const std::string& path, const DelzantPolytope& p) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << to_json(p).dump(2) << '\n';
}

}  // namespace toric::json
