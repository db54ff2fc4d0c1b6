/**
 * JSON file formats for complexes, maps, groups, actions, periodic complexes
 * and gluing data.  Writers are canonical: reading a written document and
 * writing it again gives the same bytes.
 */
#pragma once

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ggt/complex.hpp"
#include "ggt/fixtures.hpp"
#include "ggt/group_action.hpp"
#include "ggt/matrix_group.hpp"
#include "ggt/periodic.hpp"
#include "ggt/perm_group.hpp"
#include "ggt/raag.hpp"

namespace ggt::io {

using Json = nlohmann::ordered_json;

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw Error("cannot write '" + path + "'");
}

inline Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw Error(std::string("malformed JSON: ") + e.what());
  }
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

template <class T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception& e) {
    throw Error(std::string("field '") + key + "' has the wrong type: " + e.what());
  }
}

// ---------------------------------------------------------------------------
// complexes and maps

inline Json to_json(const SimplicialComplex& k) {
  return Json{{"vertices", k.vertices()}, {"maximal_simplices", k.named_maximal_simplices()}};
}

inline SimplicialComplex complex_from_json(const Json& j) {
  auto vertices = field<std::vector<VertexId>>(j, "vertices");
  auto families = field<std::vector<NamedSimplex>>(j, "maximal_simplices");
  std::vector<VertexId> sorted = vertices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw Error("duplicate vertex name");
  return SimplicialComplex::from_maximal_simplices(vertices, families);
}

inline std::string write_complex(const SimplicialComplex& k) { return dump(to_json(k)); }
inline SimplicialComplex read_complex(const std::string& text) { return complex_from_json(parse(text)); }

/// A complex given either as a file path or as the name of a built-in fixture.
inline SimplicialComplex load_complex(const std::string& source) {
  std::ifstream probe(source);
  if (probe) return read_complex(read_file(source));
  try {
    return fixtures::by_name(source);
  } catch (const Error&) {
    throw Error("'" + source + "' is neither a readable file nor a built-in complex");
  }
}

inline Json to_json(const SimplicialMap& f) {
  return Json{{"domain", to_json(f.domain())}, {"codomain", to_json(f.codomain())}, {"images", f.assignment()}};
}

inline SimplicialMap map_from_json(const Json& j) {
  return SimplicialMap(complex_from_json(field<Json>(j, "domain")), complex_from_json(field<Json>(j, "codomain")),
                       field<std::map<VertexId, VertexId>>(j, "images"));
}

// ---------------------------------------------------------------------------
// groups

inline Json to_json(const PermGroup& g) {
  Json j;
  if (!g.name().empty()) j["name"] = g.name();
  j["degree"] = g.degree();
  j["generators"] = g.generators();
  return j;
}

/// A group document, or a string naming a built-in group.
inline PermGroup group_from_json(const Json& j) {
  if (j.is_string()) return groups::by_name(j.get<std::string>());
  const auto degree = field<std::size_t>(j, "degree");
  auto gens = field<std::vector<Perm>>(j, "generators");
  for (const auto& p : gens)
    if (p.size() != degree || !is_permutation(p)) throw Error("generator is not a permutation of 0.." + std::to_string(degree - 1));
  return PermGroup(degree, gens, j.contains("name") ? field<std::string>(j, "name") : "");
}

inline PermGroup load_group(const std::string& source) {
  std::ifstream probe(source);
  if (probe) return group_from_json(parse(read_file(source)));
  return groups::by_name(source);
}

inline Json to_json(const FpMatrixGroup& g) {
  return Json{{"n", g.n()}, {"p", g.p()}, {"generators", g.generators()}};
}

inline FpMatrixGroup matrix_group_from_json(const Json& j) {
  return FpMatrixGroup(field<std::size_t>(j, "n"), field<std::int64_t>(j, "p"), field<std::vector<FpMatrix>>(j, "generators"));
}

// ---------------------------------------------------------------------------
// actions and periodic complexes

inline Json to_json(const GroupComplexAction& a) {
  return Json{{"group", to_json(a.group())}, {"complex", to_json(a.complex())}, {"images", a.generator_images()}};
}

inline GroupComplexAction action_from_json(const Json& j) {
  return GroupComplexAction(group_from_json(field<Json>(j, "group")), complex_from_json(field<Json>(j, "complex")),
                            field<std::vector<std::map<VertexId, VertexId>>>(j, "images"));
}

inline Json to_json(const PeriodicComplex& p) {
  Json j{{"slab", to_json(p.slab())},
         {"interface", to_json(p.interface())},
         {"bottom", p.bottom().assignment()},
         {"top", p.top().assignment()}};
  if (p.symmetry())
    j["action"] = Json{{"group", to_json(p.symmetry()->group())}, {"images", p.symmetry()->generator_images()}};
  return j;
}

inline PeriodicComplex periodic_from_json(const Json& j) {
  auto slab = complex_from_json(field<Json>(j, "slab"));
  std::optional<GroupComplexAction> action;
  if (j.contains("action")) {
    const auto& a = j.at("action");
    action.emplace(group_from_json(field<Json>(a, "group")), slab,
                   field<std::vector<std::map<VertexId, VertexId>>>(a, "images"));
  }
  return PeriodicComplex(slab, complex_from_json(field<Json>(j, "interface")),
                         field<std::map<VertexId, VertexId>>(j, "bottom"), field<std::map<VertexId, VertexId>>(j, "top"),
                         std::move(action));
}

/// A periodic complex file, or "line" / "line<k>" for the periodic line with
/// k-edge slabs.
inline PeriodicComplex load_periodic(const std::string& source) {
  std::ifstream probe(source);
  if (probe) return periodic_from_json(parse(read_file(source)));
  if (source.starts_with("line")) {
    const auto rest = source.substr(4);
    if (rest.empty()) return periodic_line(1);
    if (rest.find_first_not_of("0123456789") == std::string::npos && rest.size() < 4 && std::stoul(rest) > 0)
      return periodic_line(std::stoul(rest));
  }
  throw Error("'" + source + "' is neither a readable file nor a built-in periodic complex");
}

// ---------------------------------------------------------------------------
// gluing data for one-vertex cube complexes

struct GluingData {
  SimplicialComplex m;
  std::vector<VertexId> n0, n1;
  std::map<VertexId, VertexId> gamma;
};

inline Json to_json(const GluingData& g) {
  return Json{{"M", to_json(g.m)}, {"N0", g.n0}, {"N1", g.n1}, {"gamma", g.gamma}};
}

inline GluingData gluing_from_json(const Json& j) {
  return {complex_from_json(field<Json>(j, "M")), field<std::vector<VertexId>>(j, "N0"),
          field<std::vector<VertexId>>(j, "N1"), field<std::map<VertexId, VertexId>>(j, "gamma")};
}

// ---------------------------------------------------------------------------
// presentations use their own text format

inline Presentation load_presentation(const std::string& path) { return parse_presentation(read_file(path)); }

}  // namespace ggt::io
