// Small named complexes used by tests, examples and the command line.
#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ggt/complex.hpp"

namespace ggt::fixtures {

// Letters while they last, then zero-padded "v000"-style names so the
// string order agrees with the numeric order.
inline VertexId vertex_name(std::size_t i, std::size_t count) {
  if (count <= 26) return std::string(1, static_cast<char>('a' + i));
  std::string digits = std::to_string(i);
  return "v" + std::string(std::to_string(count - 1).size() - digits.size(), '0') + digits;
}

inline std::vector<VertexId> vertex_names(std::size_t count) {
  std::vector<VertexId> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(vertex_name(i, count));
  return out;
}

inline SimplicialComplex from_index_families(std::size_t count, const std::vector<std::vector<std::size_t>>& families) {
  auto names = vertex_names(count);
  std::vector<NamedSimplex> named;
  for (const auto& f : families) {
    NamedSimplex s;
    for (auto i : f) s.push_back(names.at(i));
    named.push_back(std::move(s));
  }
  return SimplicialComplex::from_maximal_simplices(names, named);
}

inline SimplicialComplex points(std::size_t n) { return from_index_families(n, {}); }

inline SimplicialComplex simplex(std::size_t dim) {
  std::vector<std::size_t> all(dim + 1);
  for (std::size_t i = 0; i <= dim; ++i) all[i] = i;
  return from_index_families(dim + 1, {all});
}

inline SimplicialComplex simplex_boundary(std::size_t dim) {
  if (dim == 0) throw Error("the boundary of a point is void");
  std::vector<std::vector<std::size_t>> facets;
  for (std::size_t skip = 0; skip <= dim; ++skip) {
    std::vector<std::size_t> f;
    for (std::size_t i = 0; i <= dim; ++i)
      if (i != skip) f.push_back(i);
    facets.push_back(f);
  }
  return from_index_families(dim + 1, facets);
}

inline SimplicialComplex cycle(std::size_t n) {
  if (n < 3) throw Error("a cycle needs at least 3 vertices");
  std::vector<std::vector<std::size_t>> edges;
  for (std::size_t i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return from_index_families(n, edges);
}

inline SimplicialComplex path(std::size_t edges) {
  std::vector<std::vector<std::size_t>> f;
  for (std::size_t i = 0; i < edges; ++i) f.push_back({i, i + 1});
  return from_index_families(edges + 1, f);
}

inline SimplicialComplex hexagon() { return cycle(6); }

// Cone with a fresh apex named "apex", "apex1", "apex2", ...
inline SimplicialComplex cone_over(const SimplicialComplex& k) {
  std::string apex = "apex";
  for (int i = 1; k.find_vertex(apex); ++i) apex = "apex" + std::to_string(i);
  return cone(k, apex);
}

// Six-vertex real projective plane.
inline SimplicialComplex projective_plane() {
  return from_index_families(6, {{0, 1, 3}, {0, 1, 5}, {0, 2, 4}, {0, 2, 5}, {0, 3, 4},
                                 {1, 2, 3}, {1, 2, 4}, {1, 4, 5}, {2, 3, 5}, {3, 4, 5}});
}

// Seven-vertex torus.
inline SimplicialComplex torus() {
  std::vector<std::vector<std::size_t>> f;
  for (std::size_t i = 0; i < 7; ++i) {
    f.push_back({i, (i + 1) % 7, (i + 3) % 7});
    f.push_back({i, (i + 2) % 7, (i + 3) % 7});
  }
  return from_index_families(7, f);
}

// Two triangles sharing one vertex.
inline SimplicialComplex bowtie() { return from_index_families(5, {{0, 1, 2}, {0, 3, 4}}); }

// Octahedron boundary: three pairs of opposite vertices.
inline SimplicialComplex octahedron() {
  std::vector<std::vector<std::size_t>> f;
  for (std::size_t x : {0, 1})
    for (std::size_t y : {2, 3})
      for (std::size_t z : {4, 5}) f.push_back({x, y, z});
  return from_index_families(6, f);
}

/// The standard catalog: name and complex. Every entry has fewer than
/// 2000 simplices.
inline std::vector<std::pair<std::string, SimplicialComplex>> catalog() {
  return {
      {"point", points(1)},
      {"two_points", points(2)},
      {"six_points", points(6)},
      {"edge", simplex(1)},
      {"triangle", simplex(2)},
      {"tetrahedron", simplex(3)},
      {"simplex4", simplex(4)},
      {"hollow_triangle", simplex_boundary(2)},
      {"sphere2", simplex_boundary(3)},
      {"sphere3", simplex_boundary(4)},
      {"square", cycle(4)},
      {"pentagon", cycle(5)},
      {"hexagon", hexagon()},
      {"path3", path(3)},
      {"cone_hexagon", cone_over(hexagon())},
      {"projective_plane", projective_plane()},
      {"torus", torus()},
      {"bowtie", bowtie()},
      {"octahedron", octahedron()},
      {"sd_triangle", barycentric_subdivision(simplex(2))},
      {"join_3_2", join(points(3), rename_vertices(points(2), "x", ""))},
      {"triangle_with_tail", from_index_families(4, {{0, 1, 2}, {2, 3}})},
  };
}

inline SimplicialComplex by_name(const std::string& name) {
  for (auto& [n, k] : catalog())
    if (n == name) return k;
  throw Error("unknown built-in complex '" + name + "'");
}

}  // namespace ggt::fixtures
