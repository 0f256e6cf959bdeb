#include "ehrhart/polytope_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace ehrhart {

namespace {

Rational coordinate(const nlohmann::json& j) {
  if (j.is_string()) return Rational::from_string(j.get<std::string>());
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
  throw InputError("vertex coordinate must be a \"p/q\" string or an integer");
}

}  // namespace

Polytope polytope_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("malformed polytope JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("dimension") || !j.contains("vertices"))
    throw InputError("polytope JSON needs \"dimension\" and \"vertices\"");
  if (!j["dimension"].is_number_integer())
    throw InputError("\"dimension\" must be an integer");
  int dim = j["dimension"].get<int>();

  std::vector<RatVec> vertices;
  for (const auto& row : j["vertices"]) {
    if (!row.is_array()) throw InputError("each vertex must be an array of coordinates");
    RatVec v;
    for (const auto& c : row) v.push_back(coordinate(c));
    vertices.push_back(std::move(v));
  }

  std::optional<std::vector<std::pair<int, int>>> edges;
  if (j.contains("edges")) {
    edges.emplace();
    for (const auto& e : j["edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
          !e[1].is_number_integer())
        throw InputError("each edge must be a pair of 0-based vertex indices");
      edges->emplace_back(e[0].get<int>(), e[1].get<int>());
    }
  }
  return Polytope(dim, std::move(vertices), std::move(edges));
}

Polytope polytope_from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open polytope file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return polytope_from_json(buf.str());
}

}  // namespace ehrhart
