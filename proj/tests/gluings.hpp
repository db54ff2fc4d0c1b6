// Valid HNN gluing data (M, N0, N1, gamma) shared by the cube tests and the
// acceptance runner.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "ggt/fixtures.hpp"

namespace gluings {

struct Gluing {
  std::string name;
  ggt::SimplicialComplex m;
  std::vector<ggt::VertexId> n0, n1;
  std::map<ggt::VertexId, ggt::VertexId> gamma;
};

inline std::vector<Gluing> valid() {
  namespace fx = ggt::fixtures;
  return {
      {"edge a->b", fx::simplex(1), {"a"}, {"b"}, {{"a", "b"}}},
      {"point to itself", fx::points(1), {"a"}, {"a"}, {{"a", "a"}}},
      {"triangle, empty interfaces", fx::simplex(2), {}, {}, {}},
      {"triangle a->b", fx::simplex(2), {"a"}, {"b"}, {{"a", "b"}}},
      {"path shift", fx::path(3), {"a", "b"}, {"c", "d"}, {{"a", "c"}, {"b", "d"}}},
      {"hexagon antipodal vertex", fx::hexagon(), {"a"}, {"d"}, {{"a", "d"}}},
      {"hexagon antipodal edge", fx::hexagon(), {"a", "b"}, {"d", "e"}, {{"a", "d"}, {"b", "e"}}},
      {"square diagonals", fx::cycle(4), {"a", "c"}, {"b", "d"}, {{"a", "b"}, {"c", "d"}}},
      {"subdivided triangle", ggt::barycentric_subdivision(fx::simplex(2)), {"[a]"}, {"[a,b,c]"},
       {{"[a]", "[a,b,c]"}}},
      {"octahedron opposite edges", fx::octahedron(), {"a", "c"}, {"b", "d"}, {{"a", "b"}, {"c", "d"}}},
      {"two points swap", fx::points(2), {"a", "b"}, {"a", "b"}, {{"a", "b"}, {"b", "a"}}},
  };
}

}  // namespace gluings
