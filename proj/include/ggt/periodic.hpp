/**
 * Z-periodic simplicial complexes presented by one slab.
 *
 * The infinite complex is the disjoint union of slab copies slab_k (k in Z)
 * with top(x) in slab_k identified with bottom(x) in slab_{k+1} for every
 * interface vertex x. Finite windows and quotients by kZ are computed by
 * union-find on (copy, slab vertex) pairs.
 */
#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ggt/complex.hpp"
#include "ggt/group_action.hpp"
#include "ggt/homology.hpp"
#include "ggt/perm_group.hpp"

namespace ggt {

namespace detail {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  // The smaller root survives, so every class is represented by its least member.
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::size_t> parent_;
};

inline std::vector<VertexId> image_names(const SimplicialMap& f) {
  std::vector<VertexId> out;
  for (auto v : f.images()) out.push_back(f.codomain().vertices()[v]);
  return out;
}

}  // namespace detail

class PeriodicComplex {
 public:
  PeriodicComplex(SimplicialComplex slab, SimplicialComplex interface, const std::map<VertexId, VertexId>& bottom,
                  const std::map<VertexId, VertexId>& top, std::optional<GroupComplexAction> symmetry = std::nullopt)
      : slab_(std::move(slab)),
        interface_(std::move(interface)),
        bottom_(interface_, slab_, bottom),
        top_(interface_, slab_, top),
        symmetry_(std::move(symmetry)) {
    validate();
  }

  PeriodicComplex(const SimplicialMap& bottom, const SimplicialMap& top,
                  std::optional<GroupComplexAction> symmetry = std::nullopt)
      : PeriodicComplex(bottom.codomain(), bottom.domain(), bottom.assignment(), top.assignment(), std::move(symmetry)) {
    if (!(top.domain() == bottom.domain()) || !(top.codomain() == bottom.codomain()))
      throw Error("bottom and top embeddings must share domain and codomain");
  }

  const SimplicialComplex& slab() const { return slab_; }
  const SimplicialComplex& interface() const { return interface_; }
  const SimplicialMap& bottom() const { return bottom_; }
  const SimplicialMap& top() const { return top_; }
  const std::optional<GroupComplexAction>& symmetry() const { return symmetry_; }

  PeriodicComplex with_symmetry(GroupComplexAction action) const {
    return PeriodicComplex(slab_, interface_, bottom_.assignment(), top_.assignment(), std::move(action));
  }

 private:
  void validate() const {
    for (const auto* e : {&bottom_, &top_}) {
      if (!e->is_injective()) throw Error("interface embedding is not injective");
      std::vector<NamedSimplex> image;
      for (const auto& m : interface_.maximal_simplices()) image.push_back(slab_.names(e->image(m)));
      auto embedded = SimplicialComplex::from_maximal_simplices(detail::image_names(*e), image);
      if (!(full_subcomplex(slab_, embedded.vertices()) == embedded))
        throw Error("interface embedding is not onto a full subcomplex of the slab");
    }
    if (!symmetry_) return;
    if (!(symmetry_->complex() == slab_)) throw Error("symmetry must act on the slab");
    const auto& g = symmetry_->group();
    for (std::size_t i = 0; i < g.generators().size(); ++i) {
      const Perm& p = symmetry_->vertex_perm(g.generator_index(i));
      for (std::uint32_t x = 0; x < interface_.vertex_count(); ++x) {
        // q(bottom(x)) = bottom(y) must go with q(top(x)) = top(y)
        const auto b = p[bottom_(x)];
        const auto t = p[top_(x)];
        std::optional<std::uint32_t> y;
        for (std::uint32_t c = 0; c < interface_.vertex_count(); ++c)
          if (bottom_(c) == b) y = c;
        if (!y || top_(*y) != t)
          throw Error("symmetry does not commute with the interface identification");
      }
    }
  }

  SimplicialComplex slab_;
  SimplicialComplex interface_;
  SimplicialMap bottom_;
  SimplicialMap top_;
  std::optional<GroupComplexAction> symmetry_;
};

struct WindowLayout {
  SimplicialComplex complex;
  long a = 0;
  long b = 0;
  std::vector<std::vector<VertexId>> names;  // names[k - a][slab vertex]

  const VertexId& vertex(long k, std::uint32_t v) const { return names.at(static_cast<std::size_t>(k - a)).at(v); }
};

/// Union of slabs a..b with the interface identifications applied. Each
/// vertex is named "k:v" after the least (copy, slab vertex) pair in its class.
inline WindowLayout window_with_layout(const PeriodicComplex& p, long a, long b) {
  if (a > b) throw Error("window requires a <= b (got " + std::to_string(a) + " > " + std::to_string(b) + ")");
  const auto& slab = p.slab();
  const std::size_t n = slab.vertex_count();
  const std::size_t copies = static_cast<std::size_t>(b - a + 1);
  detail::UnionFind uf(n * copies);
  for (std::size_t c = 0; c + 1 < copies; ++c)
    for (std::uint32_t x = 0; x < p.interface().vertex_count(); ++x)
      uf.unite(c * n + p.top()(x), (c + 1) * n + p.bottom()(x));
  WindowLayout out;
  out.a = a;
  out.b = b;
  out.names.assign(copies, std::vector<VertexId>(n));
  for (std::size_t c = 0; c < copies; ++c)
    for (std::uint32_t v = 0; v < n; ++v) {
      const std::size_t root = uf.find(c * n + v);
      out.names[c][v] = std::to_string(a + static_cast<long>(root / n)) + ":" + slab.vertices()[root % n];
    }
  std::vector<VertexId> all;
  for (const auto& row : out.names) all.insert(all.end(), row.begin(), row.end());
  std::vector<NamedSimplex> families;
  for (std::size_t c = 0; c < copies; ++c)
    for (const auto& m : slab.maximal_simplices()) {
      NamedSimplex s;
      for (auto v : m) s.push_back(out.names[c][v]);
      std::set<VertexId> distinct(s.begin(), s.end());
      if (distinct.size() != s.size())
        throw Error("window is not simplicial: the gluing identifies two vertices of " +
                    simplex_label(slab.names(m)));
      families.push_back(std::move(s));
    }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  out.complex = SimplicialComplex::from_maximal_simplices(all, families);
  return out;
}

inline SimplicialComplex window(const PeriodicComplex& p, long a, long b) {
  return window_with_layout(p, a, b).complex;
}

/// Doubly infinite mapping telescope of a self-map f of S: the slab is the
/// mapping cylinder, its domain end glued below and its codomain end above.
inline PeriodicComplex telescope(const SimplicialMap& f) {
  if (!f.is_endomap()) throw Error("telescope needs a self-map (domain and codomain differ)");
  auto cyl = mapping_cylinder(f);
  return PeriodicComplex(*cyl.bottom, *cyl.top);
}

/// The subdivided line as a periodic complex: the slab is a path a0..aN and
/// consecutive slabs overlap in N - shift edges, so the generator of Z moves
/// the line `shift` edges.
inline PeriodicComplex periodic_path(std::size_t edges, std::size_t shift) {
  if (edges == 0) throw Error("line slab needs at least one edge");
  if (shift == 0 || shift > edges) throw Error("line shift must lie in 1..edges");
  std::vector<NamedSimplex> f;
  std::vector<VertexId> names;
  for (std::size_t i = 0; i <= edges; ++i) names.push_back("a" + std::to_string(i));
  for (std::size_t i = 0; i < edges; ++i) f.push_back({names[i], names[i + 1]});
  auto slab = SimplicialComplex::from_maximal_simplices(names, f);
  const std::size_t overlap = edges - shift;
  std::vector<VertexId> inames;
  for (std::size_t i = 0; i <= overlap; ++i) inames.push_back(overlap == 0 ? "p" : "p" + std::to_string(i));
  std::vector<NamedSimplex> iface{{inames.front()}};
  for (std::size_t i = 0; i < overlap; ++i) iface.push_back({inames[i], inames[i + 1]});
  std::map<VertexId, VertexId> bottom, top;
  for (std::size_t i = 0; i <= overlap; ++i) {
    bottom[inames[i]] = names[i];
    top[inames[i]] = names[i + shift];
  }
  return PeriodicComplex(slab, SimplicialComplex::from_maximal_simplices(inames, iface), bottom, top);
}

/// The periodic subdivided line whose slab is a path with `edges` edges.
inline PeriodicComplex periodic_line(std::size_t edges = 1) { return periodic_path(edges, edges); }

/// Embedding of S into window(0, last) as the top end of slab k, for a
/// periodic complex whose interface is S.
inline SimplicialMap stage_embedding(const PeriodicComplex& p, const WindowLayout& w, long k) {
  std::map<VertexId, VertexId> m;
  for (std::uint32_t x = 0; x < p.interface().vertex_count(); ++x)
    m[p.interface().vertices()[x]] = w.vertex(k, p.top()(x));
  return SimplicialMap(p.interface(), w.complex, m);
}

/// The rational lambda with [S_k] = lambda [S_{k+1}] in H_d(window(0,k+1)),
/// where S_j is the fundamental class of the interface placed at the top of
/// slab j and d = dim S. For a telescope this is the degree of the map on
/// top reduced homology.
inline Rational stage_inclusion_multiplier(const PeriodicComplex& p, long k) {
  const auto& s = p.interface();
  const int d = s.dimension();
  auto w = window_with_layout(p, 0, k + 1);
  const IntegerChain z = fundamental_cycle(s);
  auto lower = push_forward(stage_embedding(p, w, k), d, z);
  auto upper = push_forward(stage_embedding(p, w, k + 1), d, z);
  return homology_class_multiple(w.complex, d, lower, upper);
}

/// Product cell structure on [0,1] x Z truncated to its 2-skeleton: Z at both
/// ends, an edge u@0-u@1 for each vertex, and each square over an edge {u,w}
/// split along one diagonal chosen consistently along the Q-orbit of the
/// edge. Q acts diagonally.
inline PeriodicComplex line_product_2skeleton(const GroupComplexAction& action) {
  const auto& z = action.complex();
  if (z.dimension() > 2) throw Error("line_product_2skeleton needs a complex of dimension at most 2");
  const auto& g = action.group();
  const auto& edges = z.simplices(1);
  // diagonal[e] = the endpoint placed at level 0
  std::vector<std::optional<std::uint32_t>> diagonal(edges.size());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (diagonal[e]) continue;
    for (ElementId x = 0; x < g.order(); ++x) {
      const Perm& p = action.vertex_perm(x);
      Simplex img{p[edges[e][0]], p[edges[e][1]]};
      const std::uint32_t low = img[0];
      std::sort(img.begin(), img.end());
      auto idx = *z.simplex_index(img);
      if (diagonal[idx] && *diagonal[idx] != low)
        throw Error("an edge stabilizer swaps the endpoints of " + simplex_label(z.names(edges[e])) +
                    "; no equivariant diagonal exists");
      diagonal[idx] = low;
    }
  }
  auto at = [&](std::uint32_t v, int level) { return level_name(z.vertices()[v], level); };
  std::vector<NamedSimplex> families;
  for (int level : {0, 1})
    for (const auto& m : z.maximal_simplices()) {
      NamedSimplex s;
      for (auto v : m) s.push_back(at(v, level));
      families.push_back(std::move(s));
    }
  for (std::uint32_t v = 0; v < z.vertex_count(); ++v) families.push_back({at(v, 0), at(v, 1)});
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const std::uint32_t u = *diagonal[e];
    const std::uint32_t w = edges[e][0] == u ? edges[e][1] : edges[e][0];
    families.push_back({at(u, 0), at(w, 0), at(w, 1)});
    families.push_back({at(u, 0), at(u, 1), at(w, 1)});
  }
  auto slab = SimplicialComplex::from_maximal_simplices(families);
  std::map<VertexId, VertexId> lo, hi;
  for (std::uint32_t v = 0; v < z.vertex_count(); ++v) {
    lo[z.vertices()[v]] = at(v, 0);
    hi[z.vertices()[v]] = at(v, 1);
  }
  std::vector<Perm> gens;
  for (std::size_t i = 0; i < g.generators().size(); ++i) {
    const Perm& p = action.vertex_perm(g.generator_index(i));
    Perm q(slab.vertex_count());
    for (std::uint32_t v = 0; v < z.vertex_count(); ++v)
      for (int level : {0, 1}) q[slab.index_of(at(v, level))] = slab.index_of(at(p[v], level));
    gens.push_back(std::move(q));
  }
  auto slab_action = GroupComplexAction::from_perms(g, slab, gens);
  return PeriodicComplex(slab, z, lo, hi, std::move(slab_action));
}

// ---------------------------------------------------------------------------
// quotients by kZ

enum class QuotientStatus { Simplicial, Degenerate, MultiSimplex };

inline std::string to_string(QuotientStatus s) {
  switch (s) {
    case QuotientStatus::Simplicial: return "simplicial";
    case QuotientStatus::Degenerate: return "degenerate";
    case QuotientStatus::MultiSimplex: return "multi-simplex";
  }
  return "";
}

struct QuotientResult {
  QuotientStatus status = QuotientStatus::Simplicial;
  std::optional<SimplicialComplex> complex;  // present when simplicial
  NamedSimplex witness;                      // offending slab simplex otherwise
};

/// window(P, 0, k-1) with the top of slab k-1 glued to the bottom of slab 0.
/// Degenerate: a simplex acquires a repeated vertex. MultiSimplex: two
/// different cells end up with the same vertex set.
inline QuotientResult quotient_by_shift(const PeriodicComplex& p, long k) {
  if (k < 1) throw Error("quotient period must be at least 1");
  const auto& slab = p.slab();
  const std::size_t n = slab.vertex_count();
  const auto copies = static_cast<std::size_t>(k);
  detail::UnionFind uf(n * copies);
  for (std::size_t c = 0; c < copies; ++c)
    for (std::uint32_t x = 0; x < p.interface().vertex_count(); ++x)
      uf.unite(c * n + p.top()(x), ((c + 1) % copies) * n + p.bottom()(x));
  auto name = [&](std::size_t c, std::uint32_t v) {
    const std::size_t root = uf.find(c * n + v);
    return std::to_string(root / n) + ":" + slab.vertices()[root % n];
  };
  QuotientResult out;
  // cells: (copy, slab simplex); interface simplices glue a top face to a bottom face
  std::vector<Simplex> cells;
  for (int d = 0; d <= slab.dimension(); ++d)
    for (const auto& s : slab.simplices(d)) cells.push_back(s);
  std::map<Simplex, std::size_t> cell_index;
  for (std::size_t i = 0; i < cells.size(); ++i) cell_index[cells[i]] = i;
  detail::UnionFind cell_uf(cells.size() * copies);
  for (std::size_t c = 0; c < copies; ++c)
    for (int d = 0; d <= p.interface().dimension(); ++d)
      for (const auto& t : p.interface().simplices(d)) {
        auto up = p.top().image(t);
        auto down = p.bottom().image(t);
        cell_uf.unite(c * cells.size() + cell_index.at(up), ((c + 1) % copies) * cells.size() + cell_index.at(down));
      }
  std::map<NamedSimplex, std::size_t> image_class;
  std::vector<NamedSimplex> families;
  for (std::size_t c = 0; c < copies; ++c)
    for (std::size_t i = 0; i < cells.size(); ++i) {
      NamedSimplex s;
      for (auto v : cells[i]) s.push_back(name(c, v));
      std::sort(s.begin(), s.end());
      if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
        out.status = QuotientStatus::Degenerate;
        out.witness = slab.names(cells[i]);
        return out;
      }
      const std::size_t cls = cell_uf.find(c * cells.size() + i);
      auto [it, fresh] = image_class.emplace(s, cls);
      if (!fresh && it->second != cls) {
        out.status = QuotientStatus::MultiSimplex;
        out.witness = slab.names(cells[i]);
        return out;
      }
      families.push_back(std::move(s));
    }
  out.complex = SimplicialComplex::from_maximal_simplices(families);
  return out;
}

namespace detail {

// Graph distances (capped at `limit`) from a vertex in a window.
inline std::vector<int> bounded_distances(const SimplicialComplex& w, std::uint32_t source, int limit) {
  std::vector<std::vector<std::uint32_t>> adj(w.vertex_count());
  for (const auto& e : w.simplices(1)) {
    adj[e[0]].push_back(e[1]);
    adj[e[1]].push_back(e[0]);
  }
  std::vector<int> dist(w.vertex_count(), limit);
  dist[source] = 0;
  std::deque<std::uint32_t> queue{source};
  while (!queue.empty()) {
    auto v = queue.front();
    queue.pop_front();
    if (dist[v] + 1 >= limit) continue;
    for (auto u : adj[v])
      if (dist[u] > dist[v] + 1) {
        dist[u] = dist[v] + 1;
        queue.push_back(u);
      }
  }
  return dist;
}

}  // namespace detail

/// Whether distinct vertices in one kZ-orbit are always at distance >= 4.
/// Paths of length < 4 starting in slab 0 stay within slabs -3..3, so the
/// window of slabs -(2k+2)..(2k+2) computes those distances exactly.
inline bool orbit_separation_at_least_four(const PeriodicComplex& p, long k) {
  const long radius = 2 * k + 2;
  auto w = window_with_layout(p, -radius, radius);
  for (std::uint32_t v = 0; v < p.slab().vertex_count(); ++v) {
    const auto source = w.complex.index_of(w.vertex(0, v));
    auto dist = detail::bounded_distances(w.complex, source, 4);
    for (long m = -radius / k; m <= radius / k; ++m) {
      if (m == 0) continue;
      const auto target = w.complex.index_of(w.vertex(m * k, v));
      if (dist[target] < 4) return false;
    }
  }
  return true;
}

constexpr long kMaxFlagPeriod = 64;

/// Smallest k whose orbits are 4-separated and whose quotient is a flag
/// simplicial complex.
inline long min_flag_quotient_period(const PeriodicComplex& p, long max_period = kMaxFlagPeriod) {
  // a missing simplex of the infinite complex survives in every separated quotient
  if (auto check = is_flag(window(p, -1, 1)); !check.flag)
    throw Error("the periodic complex is not flag (missing simplex " + simplex_label(check.witness) + ")");
  for (long k = 1; k <= max_period; ++k) {
    if (!orbit_separation_at_least_four(p, k)) continue;
    auto q = quotient_by_shift(p, k);
    if (q.status == QuotientStatus::Simplicial && is_flag(*q.complex).flag) return k;
  }
  throw BoundExceeded("no flag quotient period found up to " + std::to_string(max_period));
}

// ---------------------------------------------------------------------------
// degree-zero orbit arithmetic

struct RecipeTerm {
  SubgroupRecord subgroup;
  std::size_t index = 0;         // |Q : P|, the orbit length
  std::size_t multiplicity = 0;  // m_P
};

struct TelescopeRecipe {
  std::string group;
  std::size_t group_order = 0;
  std::vector<RecipeTerm> terms;  // one per proper subgroup class, in class order
  std::size_t free_count = 0;     // n

  std::size_t orbit_count() const {
    std::size_t total = 0;
    for (const auto& t : terms) total += t.multiplicity;
    return total;
  }

  /// 1 + sum m_P |Q:P| - n |Q|; zero for every recipe produced here.
  long long implied_degree() const {
    long long sum = 1;
    for (const auto& t : terms) sum += static_cast<long long>(t.multiplicity * t.index);
    return sum - static_cast<long long>(free_count * group_order);
  }
};

/// Nonnegative m_P over proper subgroup classes with |Q| n = 1 + sum m_P |Q:P|,
/// minimizing n and then the number of orbits. nullopt when no solution
/// exists, which happens exactly for groups of prime-power order.
inline std::optional<TelescopeRecipe> degree_zero_recipe(const PermGroup& q) {
  auto classes = subgroup_classes(q);
  const std::size_t order = q.order();
  TelescopeRecipe recipe;
  recipe.group = q.label();
  recipe.group_order = order;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (classes[i].order == order) continue;
    RecipeTerm t;
    t.subgroup = classes[i];
    t.index = order / classes[i].order;
    recipe.terms.push_back(t);
  }
  std::size_t g = 0, largest = 0;
  for (const auto& t : recipe.terms) {
    g = std::gcd(g, t.index);
    largest = std::max(largest, t.index);
  }
  if (recipe.terms.empty() || g != 1) return std::nullopt;
  // any target above the Frobenius number (< largest^2) is representable
  const std::size_t max_n = largest * largest / order + 2;
  for (std::size_t n = 1; n <= max_n; ++n) {
    const std::size_t target = order * n - 1;
    const std::size_t inf = target + 1;
    std::vector<std::size_t> best(target + 1, inf), last(target + 1, 0);
    best[0] = 0;
    for (std::size_t v = 1; v <= target; ++v)
      for (std::size_t i = 0; i < recipe.terms.size(); ++i) {
        const auto c = recipe.terms[i].index;
        if (c <= v && best[v - c] + 1 < best[v]) {
          best[v] = best[v - c] + 1;
          last[v] = i;
        }
      }
    if (best[target] == inf) continue;
    for (std::size_t v = target; v > 0; v -= recipe.terms[last[v]].index) ++recipe.terms[last[v]].multiplicity;
    recipe.free_count = n;
    return recipe;
  }
  return std::nullopt;
}

}  // namespace ggt
