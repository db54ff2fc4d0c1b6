/**
 * Finite groups acting on simplicial complexes by automorphisms.
 */
#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ggt/complex.hpp"
#include "ggt/perm_group.hpp"

namespace ggt {

class GroupComplexAction {
 public:
  /// images[i] gives the vertex bijection of generator i of the group.
  GroupComplexAction(PermGroup group, SimplicialComplex complex, const std::vector<std::map<VertexId, VertexId>>& images)
      : group_(std::move(group)), complex_(std::move(complex)) {
    if (images.size() != group_.generators().size())
      throw Error("action lists " + std::to_string(images.size()) + " generator images but the group has " +
                  std::to_string(group_.generators().size()) + " generators");
    std::vector<Perm> gens;
    for (const auto& img : images) gens.push_back(vertex_perm(img));
    build(gens);
  }

  /// Generator images given as permutations of vertex indices.
  static GroupComplexAction from_perms(PermGroup group, SimplicialComplex complex, const std::vector<Perm>& generator_perms) {
    GroupComplexAction a(std::move(group), std::move(complex));
    if (generator_perms.size() != a.group_.generators().size()) throw Error("wrong number of generator images");
    for (const auto& p : generator_perms)
      if (p.size() != a.complex_.vertex_count() || !is_permutation(p))
        throw Error("generator image is not a vertex bijection");
    a.build(generator_perms);
    return a;
  }

  /// The trivial action of a group.
  static GroupComplexAction trivial(PermGroup group, SimplicialComplex complex) {
    std::vector<Perm> gens(group.generators().size(), identity_perm(complex.vertex_count()));
    return from_perms(std::move(group), std::move(complex), gens);
  }

  const PermGroup& group() const { return group_; }
  const SimplicialComplex& complex() const { return complex_; }

  /// Vertex permutation of a group element.
  const Perm& vertex_perm(ElementId g) const { return rho_.at(g); }

  Simplex apply(ElementId g, const Simplex& s) const {
    Simplex out;
    out.reserve(s.size());
    for (auto v : s) out.push_back(rho_[g][v]);
    std::sort(out.begin(), out.end());
    return out;
  }

  const VertexId& apply(ElementId g, const VertexId& v) const {
    return complex_.vertices()[rho_[g][complex_.index_of(v)]];
  }

  /// Generator images as name maps, in generator order.
  std::vector<std::map<VertexId, VertexId>> generator_images() const {
    std::vector<std::map<VertexId, VertexId>> out;
    for (std::size_t i = 0; i < group_.generators().size(); ++i) {
      std::map<VertexId, VertexId> m;
      const Perm& p = rho_[group_.generator_index(i)];
      for (std::uint32_t v = 0; v < p.size(); ++v) m[complex_.vertices()[v]] = complex_.vertices()[p[v]];
      out.push_back(std::move(m));
    }
    return out;
  }

  bool fixes(const Subgroup& h, const Simplex& s) const {
    for (auto g : h)
      if (apply(g, s) != s) return false;
    return true;
  }

 private:
  GroupComplexAction(PermGroup group, SimplicialComplex complex)
      : group_(std::move(group)), complex_(std::move(complex)) {}

  Perm vertex_perm(const std::map<VertexId, VertexId>& img) const {
    Perm p(complex_.vertex_count(), 0);
    std::vector<bool> assigned(p.size(), false);
    for (const auto& [from, to] : img) {
      auto a = complex_.find_vertex(from);
      auto b = complex_.find_vertex(to);
      if (!a || !b) throw Error("action mentions unknown vertex '" + (a ? to : from) + "'");
      p[*a] = *b;
      assigned[*a] = true;
    }
    if (std::find(assigned.begin(), assigned.end(), false) != assigned.end())
      throw Error("generator image does not assign every vertex");
    if (!is_permutation(p)) throw Error("generator image is not a vertex bijection");
    return p;
  }

  void build(const std::vector<Perm>& gens) {
    for (const auto& p : gens) {
      for (const auto& m : complex_.maximal_simplices()) {
        Simplex img;
        for (auto v : m) img.push_back(p[v]);
        std::sort(img.begin(), img.end());
        if (!std::binary_search(complex_.maximal_simplices().begin(), complex_.maximal_simplices().end(), img))
          throw Error("generator image is not a simplicial automorphism (moves " +
                      simplex_label(complex_.names(m)) + ")");
      }
    }
    // Extend along the Cayley graph; every edge must agree, which makes the
    // assignment a well-defined homomorphism.
    const std::size_t n = group_.order();
    rho_.assign(n, Perm());
    rho_[PermGroup::identity()] = identity_perm(complex_.vertex_count());
    std::vector<ElementId> queue{PermGroup::identity()};
    std::vector<ElementId> gen_ids;
    for (std::size_t i = 0; i < gens.size(); ++i) gen_ids.push_back(group_.generator_index(i));
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const ElementId x = queue[qi];
      for (std::size_t i = 0; i < gens.size(); ++i) {
        const ElementId y = group_.mul(gen_ids[i], x);
        Perm image = ggt::compose(gens[i], rho_[x]);
        if (rho_[y].empty()) {
          rho_[y] = std::move(image);
          queue.push_back(y);
        } else if (rho_[y] != image) {
          throw Error("generator images do not respect the group relations");
        }
      }
    }
  }

  PermGroup group_;
  SimplicialComplex complex_;
  std::vector<Perm> rho_;
};

/// Simplices of K fixed setwise by every element of H.
inline std::vector<Simplex> invariant_simplices(const GroupComplexAction& a, const Subgroup& h) {
  if (!is_subgroup(a.group(), h)) throw Error("the given element set is not a subgroup");
  std::vector<Simplex> out;
  const auto& k = a.complex();
  for (int d = 0; d <= k.dimension(); ++d)
    for (const auto& s : k.simplices(d))
      if (a.fixes(h, s)) out.push_back(s);
  return out;
}

/// Combinatorial model of the fixed set L^H: the full subcomplex of the
/// barycentric subdivision spanned by barycenters of H-invariant simplices.
inline SimplicialComplex fixed_subcomplex(const GroupComplexAction& a, const Subgroup& h) {
  auto inv = invariant_simplices(a, h);
  const auto& k = a.complex();
  std::vector<VertexId> names;
  for (const auto& s : inv) names.push_back(simplex_label(k.names(s)));
  // chains of invariant simplices; an invariant simplex is a face of another
  // iff its vertex set is contained in it
  std::sort(inv.begin(), inv.end(), [](const Simplex& x, const Simplex& y) {
    return x.size() != y.size() ? x.size() < y.size() : x < y;
  });
  std::vector<NamedSimplex> chains;
  std::vector<std::size_t> chain;
  auto is_face = [](const Simplex& x, const Simplex& y) {
    return x.size() < y.size() && std::includes(y.begin(), y.end(), x.begin(), x.end());
  };
  std::function<void()> extend = [&]() {
    bool extended = false;
    for (std::size_t j = 0; j < inv.size(); ++j) {
      if (!chain.empty() && !is_face(inv[chain.back()], inv[j])) continue;
      if (chain.empty()) {
        bool minimal = true;
        for (std::size_t i = 0; i < inv.size() && minimal; ++i) minimal = !is_face(inv[i], inv[j]);
        if (!minimal) continue;
      } else {
        bool gap = false;  // keep chains saturated: no invariant simplex strictly between
        for (std::size_t i = 0; i < inv.size() && !gap; ++i)
          gap = is_face(inv[chain.back()], inv[i]) && is_face(inv[i], inv[j]);
        if (gap) continue;
      }
      extended = true;
      chain.push_back(j);
      extend();
      chain.pop_back();
    }
    if (!extended && !chain.empty()) {
      NamedSimplex c;
      for (auto i : chain) c.push_back(simplex_label(k.names(inv[i])));
      chains.push_back(std::move(c));
    }
  };
  extend();
  return SimplicialComplex::from_maximal_simplices(names, chains);
}

/// Smallest dimension of an H-invariant simplex, if any.
inline std::optional<int> min_invariant_dimension(const GroupComplexAction& a, const Subgroup& h) {
  auto inv = invariant_simplices(a, h);
  if (inv.empty()) return std::nullopt;
  return static_cast<int>(inv.front().size()) - 1;
}

inline bool has_fixed_vertex(const GroupComplexAction& a, const Subgroup& h) {
  auto m = min_invariant_dimension(a, h);
  return m && *m == 0;
}

struct SimplexOrbit {
  Simplex representative;  // least simplex in the orbit
  int dimension = 0;
  std::size_t size = 0;
  Subgroup stabilizer;
  bool free() const { return stabilizer.size() == 1; }
};

/// Orbits of simplices, ordered by dimension and then representative.
inline std::vector<SimplexOrbit> simplex_orbits(const GroupComplexAction& a) {
  std::vector<SimplexOrbit> out;
  const auto& k = a.complex();
  const auto& g = a.group();
  for (int d = 0; d <= k.dimension(); ++d) {
    const auto& cells = k.simplices(d);
    std::vector<bool> seen(cells.size(), false);
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (seen[i]) continue;
      SimplexOrbit o;
      o.representative = cells[i];
      o.dimension = d;
      std::set<std::size_t> orbit;
      for (ElementId x = 0; x < g.order(); ++x) {
        Simplex img = a.apply(x, cells[i]);
        orbit.insert(*k.simplex_index(img));
        if (img == cells[i]) o.stabilizer.push_back(x);
      }
      for (auto j : orbit) seen[j] = true;
      o.size = orbit.size();
      out.push_back(std::move(o));
    }
  }
  return out;
}

/// Every simplex of dimension >= 1 has trivial stabilizer.
inline bool free_off_vertices(const std::vector<SimplexOrbit>& orbits) {
  for (const auto& o : orbits)
    if (o.dimension >= 1 && !o.free()) return false;
  return true;
}

}  // namespace ggt
