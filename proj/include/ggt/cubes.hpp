/**
 * One-vertex cube complexes seen through their vertex link: the double S(K),
 * the link of an HNN gluing of RAAG blocks, and the Gromov link condition.
 */
#pragma once

#include <map>
#include <string>
#include <vector>

#include "ggt/complex.hpp"
#include "ggt/raag.hpp"

namespace ggt {

/// S(K): copies v' and v'' of each vertex; a set of copies spans a simplex iff
/// it projects injectively onto a simplex of K.
inline SimplicialComplex double_complex(const SimplicialComplex& k) {
  require_copyable_names(k);
  std::vector<VertexId> names;
  for (const auto& v : k.vertices()) {
    names.push_back(up_copy(v));
    names.push_back(down_copy(v));
  }
  std::vector<NamedSimplex> families;
  for (const auto& m : k.maximal_simplices()) {
    const std::size_t n = m.size();
    if (n > 24) throw Error("simplex too large to double");
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      NamedSimplex s;
      for (std::size_t i = 0; i < n; ++i) {
        const auto& v = k.vertices()[m[i]];
        s.push_back(mask >> i & 1 ? down_copy(v) : up_copy(v));
      }
      families.push_back(std::move(s));
    }
  }
  return SimplicialComplex::from_maximal_simplices(names, families);
}

/// A link together with where each of its vertices comes from.
struct VertexLink {
  SimplicialComplex link;
  std::map<VertexId, std::string> provenance;
};

/// Link of the unique vertex of the cube complex for the HNN extension of G_M
/// that conjugates G_{N0} onto G_{N1} along gamma: S(M) with a cone on S(N0)
/// (apex t', the outgoing stable half-edge) and a cone on S(N1) (apex t'').
inline VertexLink glued_link(const SimplicialComplex& m, const SimplicialComplex& n0, const SimplicialComplex& n1,
                             const std::map<VertexId, VertexId>& gamma) {
  if (auto f = is_flag(m); !f.flag) throw Error("M is not flag: " + simplex_label(f.witness) + " spans no simplex");
  for (const auto* n : {&n0, &n1})
    if (!is_full_subcomplex(*n, m))
      throw Error("interface is not a full subcomplex of M, so G_N does not include into G_M as a retract");
  SimplicialMap g(n0, n1, gamma);
  std::vector<NamedSimplex> image;
  for (const auto& f : n0.maximal_simplices()) image.push_back(n1.names(g.image(f)));
  if (!g.is_injective() || n0.vertex_count() != n1.vertex_count() ||
      !(SimplicialComplex::from_maximal_simplices(n1.vertices(), image) == n1))
    throw Error("gamma is not a simplicial isomorphism N0 -> N1");

  VertexLink out;
  std::vector<VertexId> names;
  for (const auto& v : m.vertices()) names.push_back(v);
  const std::string t = fresh_name(names, "t", false);
  auto s = double_complex(m);
  std::vector<NamedSimplex> families;
  for (const auto& f : s.maximal_simplices()) families.push_back(s.names(f));
  for (const auto& v : m.vertices()) {
    out.provenance[up_copy(v)] = "M vertex " + v + ", outgoing half-edge";
    out.provenance[down_copy(v)] = "M vertex " + v + ", incoming half-edge";
  }
  const VertexId apex0 = up_copy(t), apex1 = down_copy(t);
  out.provenance[apex0] = "stable letter " + t + ", outgoing half-edge (cone on S(N0))";
  out.provenance[apex1] = "stable letter " + t + ", incoming half-edge (cone on S(N1))";
  auto add_cone = [&](const SimplicialComplex& n, const VertexId& apex) {
    families.push_back({apex});
    auto sn = double_complex(n);
    for (const auto& f : sn.maximal_simplices()) {
      auto c = sn.names(f);
      c.push_back(apex);
      families.push_back(std::move(c));
    }
  };
  add_cone(n0, apex0);
  add_cone(n1, apex1);
  std::vector<VertexId> all = s.vertices();
  all.push_back(apex0);
  all.push_back(apex1);
  out.link = SimplicialComplex::from_maximal_simplices(all, families);
  return out;
}

/// Vertex-set form: N0 and N1 are the full subcomplexes they span.
inline VertexLink glued_link(const SimplicialComplex& m, const std::vector<VertexId>& n0,
                             const std::vector<VertexId>& n1, const std::map<VertexId, VertexId>& gamma) {
  return glued_link(m, full_subcomplex(m, n0), full_subcomplex(m, n1), gamma);
}

/// Gromov's condition for a one-vertex cube complex: the vertex link is flag.
/// A failing certificate carries a smallest clique spanning no simplex.
inline FlagCheck npc_certificate(const VertexLink& vl) { return is_flag(vl.link); }

inline FlagCheck npc_certificate(const SimplicialComplex& link) { return is_flag(link); }

}  // namespace ggt
