#pragma once

#include <iosfwd>
#include <string>

#include "ehrhart/geometry.hpp"

namespace ehrhart {

// Builds a polytope from its JSON description:
//   {"dimension": d, "vertices": [["p/q", ...], ...], "edges": [[i,j], ...]}
// Coordinates are "p/q" strings (plain JSON integers are also accepted);
// "edges" is optional (adjacency is derived when absent). Throws InputError
// on malformed input.
Polytope polytope_from_json(const std::string& text);
Polytope polytope_from_json_file(const std::string& path);

}  // namespace ehrhart
