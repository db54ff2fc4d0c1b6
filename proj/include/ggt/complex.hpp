/**
 * Finite abstract simplicial complexes.
 *
 * A complex is stored by its maximal simplices over a sorted vertex list.
 * Vertex identifiers are opaque strings; their byte-wise order is the total
 * order used by every ordered construction (staircase prisms, mapping
 * cylinders, boundary orientations). Internally a simplex is the sorted list
 * of vertex indices, so index order and name order agree.
 *
 * Values are immutable. The full face table is computed on first use and
 * shared between copies.
 */
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "ggt/error.hpp"

namespace ggt {

using VertexId = std::string;
using Simplex = std::vector<std::uint32_t>;  // sorted vertex indices
using NamedSimplex = std::vector<VertexId>;

namespace detail {

struct SimplexHash {
  std::size_t operator()(const Simplex& s) const noexcept {
    std::size_t h = s.size();
    for (auto v : s) h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

struct FaceTable {
  std::once_flag once;
  std::vector<std::vector<Simplex>> by_dim;
};

// Visit every nonempty subset of `s` (as a sorted simplex).
template <typename F>
void for_each_face(const Simplex& s, F&& f) {
  const std::size_t k = s.size();
  Simplex face;
  face.reserve(k);
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
    face.clear();
    for (std::size_t i = 0; i < k; ++i)
      if (mask & (std::uint64_t{1} << i)) face.push_back(s[i]);
    f(face);
  }
}

}  // namespace detail

class SimplicialComplex {
 public:
  // The void complex: no vertices, no simplices.
  SimplicialComplex() : faces_(std::make_shared<detail::FaceTable>()) {}

  static SimplicialComplex from_maximal_simplices(std::vector<VertexId> vertices,
                                                  const std::vector<NamedSimplex>& families) {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    std::vector<Simplex> indexed;
    indexed.reserve(families.size());
    for (const auto& family : families) {
      if (family.empty()) throw Error("simplex family contains an empty member");
      Simplex s;
      s.reserve(family.size());
      for (const auto& name : family) {
        auto it = std::lower_bound(vertices.begin(), vertices.end(), name);
        if (it == vertices.end() || *it != name)
          throw Error("vertex '" + name + "' is not in the declared vertex set");
        s.push_back(static_cast<std::uint32_t>(it - vertices.begin()));
      }
      std::sort(s.begin(), s.end());
      s.erase(std::unique(s.begin(), s.end()), s.end());
      indexed.push_back(std::move(s));
    }
    return SimplicialComplex(std::move(vertices), std::move(indexed));
  }

  // Vertex set inferred as the union of the families.
  static SimplicialComplex from_maximal_simplices(const std::vector<NamedSimplex>& families) {
    std::vector<VertexId> vertices;
    for (const auto& f : families) vertices.insert(vertices.end(), f.begin(), f.end());
    return from_maximal_simplices(std::move(vertices), families);
  }

  // Index-level constructor; `simplices` need not be maximal or sorted.
  SimplicialComplex(std::vector<VertexId> sorted_vertices, std::vector<Simplex> simplices)
      : vertices_(std::move(sorted_vertices)), faces_(std::make_shared<detail::FaceTable>()) {
    std::vector<bool> covered(vertices_.size(), false);
    for (auto& s : simplices) {
      std::sort(s.begin(), s.end());
      s.erase(std::unique(s.begin(), s.end()), s.end());
      for (auto v : s) {
        if (v >= vertices_.size()) throw Error("simplex references a vertex index out of range");
        covered[v] = true;
      }
    }
    for (std::uint32_t v = 0; v < vertices_.size(); ++v)
      if (!covered[v]) simplices.push_back({v});
    maximal_ = reduce_to_maximal(std::move(simplices));
  }

  const std::vector<VertexId>& vertices() const { return vertices_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  const std::vector<Simplex>& maximal_simplices() const { return maximal_; }
  bool empty() const { return vertices_.empty(); }

  int dimension() const {
    int d = -1;
    for (const auto& s : maximal_) d = std::max(d, static_cast<int>(s.size()) - 1);
    return d;
  }

  std::optional<std::uint32_t> find_vertex(std::string_view name) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), name,
                               [](const VertexId& a, std::string_view b) { return a < b; });
    if (it == vertices_.end() || *it != name) return std::nullopt;
    return static_cast<std::uint32_t>(it - vertices_.begin());
  }

  std::uint32_t index_of(std::string_view name) const {
    if (auto v = find_vertex(name)) return *v;
    throw Error("unknown vertex '" + std::string(name) + "'");
  }

  Simplex simplex_of(const NamedSimplex& names) const {
    Simplex s;
    s.reserve(names.size());
    for (const auto& n : names) s.push_back(index_of(n));
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
  }

  NamedSimplex names(const Simplex& s) const {
    NamedSimplex out;
    out.reserve(s.size());
    for (auto v : s) out.push_back(vertices_.at(v));
    return out;
  }

  // All simplices of dimension `dim`, sorted lexicographically.
  const std::vector<Simplex>& simplices(int dim) const {
    static const std::vector<Simplex> none;
    const auto& table = face_table();
    if (dim < 0 || dim >= static_cast<int>(table.size())) return none;
    return table[static_cast<std::size_t>(dim)];
  }

  std::vector<std::size_t> face_vector() const {
    std::vector<std::size_t> f;
    for (const auto& level : face_table()) f.push_back(level.size());
    return f;
  }

  std::size_t simplex_count() const {
    std::size_t n = 0;
    for (const auto& level : face_table()) n += level.size();
    return n;
  }

  // Position of `s` inside simplices(dim(s)), if it is a simplex.
  std::optional<std::size_t> simplex_index(const Simplex& s) const {
    if (s.empty()) return std::nullopt;
    const auto& level = simplices(static_cast<int>(s.size()) - 1);
    auto it = std::lower_bound(level.begin(), level.end(), s);
    if (it == level.end() || *it != s) return std::nullopt;
    return static_cast<std::size_t>(it - level.begin());
  }

  bool contains(const Simplex& s) const { return s.empty() || simplex_index(s).has_value(); }

  bool contains(const NamedSimplex& names) const {
    Simplex s;
    for (const auto& n : names) {
      auto v = find_vertex(n);
      if (!v) return false;
      s.push_back(*v);
    }
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return contains(s);
  }

  std::vector<NamedSimplex> named_maximal_simplices() const {
    std::vector<NamedSimplex> out;
    out.reserve(maximal_.size());
    for (const auto& s : maximal_) out.push_back(names(s));
    return out;
  }

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.vertices_ == b.vertices_ && a.maximal_ == b.maximal_;
  }

 private:
  // Families are visited by decreasing size, so every potential superset of a
  // family has already been kept when the family is examined.
  static std::vector<Simplex> reduce_to_maximal(std::vector<Simplex> families) {
    std::sort(families.begin(), families.end(), [](const Simplex& a, const Simplex& b) {
      return a.size() != b.size() ? a.size() > b.size() : a < b;
    });
    families.erase(std::unique(families.begin(), families.end()), families.end());
    constexpr std::size_t kExpandLimit = 16;
    std::unordered_set<Simplex, detail::SimplexHash> covered;
    std::vector<std::size_t> large;
    std::vector<Simplex> result;
    for (auto& f : families) {
      if (covered.count(f)) continue;
      bool inside = false;
      for (auto i : large) {
        const auto& big = result[i];
        if (big.size() > f.size() && std::includes(big.begin(), big.end(), f.begin(), f.end())) {
          inside = true;
          break;
        }
      }
      if (inside) continue;
      if (f.size() <= kExpandLimit) {
        detail::for_each_face(f, [&](const Simplex& face) {
          if (face.size() < f.size()) covered.insert(face);
        });
      } else {
        large.push_back(result.size());
      }
      result.push_back(std::move(f));
    }
    std::sort(result.begin(), result.end());
    return result;
  }

  const std::vector<std::vector<Simplex>>& face_table() const {
    std::call_once(faces_->once, [this] {
      std::vector<std::unordered_set<Simplex, detail::SimplexHash>> sets;
      for (const auto& m : maximal_) {
        if (sets.size() < m.size()) sets.resize(m.size());
        detail::for_each_face(m, [&](const Simplex& face) { sets[face.size() - 1].insert(face); });
      }
      faces_->by_dim.resize(sets.size());
      for (std::size_t d = 0; d < sets.size(); ++d) {
        faces_->by_dim[d].assign(sets[d].begin(), sets[d].end());
        std::sort(faces_->by_dim[d].begin(), faces_->by_dim[d].end());
      }
    });
    return faces_->by_dim;
  }

  std::vector<VertexId> vertices_;
  std::vector<Simplex> maximal_;
  std::shared_ptr<detail::FaceTable> faces_;
};

/// Vertex map between complexes that carries simplices to simplices.
class SimplicialMap {
 public:
  SimplicialMap(SimplicialComplex domain, SimplicialComplex codomain,
                const std::map<VertexId, VertexId>& assignment)
      : domain_(std::move(domain)), codomain_(std::move(codomain)) {
    images_.resize(domain_.vertex_count());
    for (std::uint32_t v = 0; v < domain_.vertex_count(); ++v) {
      auto it = assignment.find(domain_.vertices()[v]);
      if (it == assignment.end())
        throw Error("map does not assign vertex '" + domain_.vertices()[v] + "'");
      images_[v] = codomain_.index_of(it->second);
    }
    validate();
  }

  SimplicialMap(SimplicialComplex domain, SimplicialComplex codomain, std::vector<std::uint32_t> images)
      : domain_(std::move(domain)), codomain_(std::move(codomain)), images_(std::move(images)) {
    if (images_.size() != domain_.vertex_count()) throw Error("map image list has the wrong length");
    for (auto w : images_)
      if (w >= codomain_.vertex_count()) throw Error("map image out of range");
    validate();
  }

  static SimplicialMap identity(const SimplicialComplex& k) {
    std::vector<std::uint32_t> images(k.vertex_count());
    for (std::uint32_t v = 0; v < images.size(); ++v) images[v] = v;
    return SimplicialMap(k, k, std::move(images));
  }

  const SimplicialComplex& domain() const { return domain_; }
  const SimplicialComplex& codomain() const { return codomain_; }
  std::uint32_t operator()(std::uint32_t v) const { return images_.at(v); }
  const std::vector<std::uint32_t>& images() const { return images_; }

  const VertexId& image(std::string_view v) const { return codomain_.vertices()[images_[domain_.index_of(v)]]; }

  Simplex image(const Simplex& s) const {
    Simplex out;
    out.reserve(s.size());
    for (auto v : s) out.push_back(images_.at(v));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  bool is_injective() const {
    std::vector<std::uint32_t> sorted = images_;
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  }

  bool is_endomap() const { return domain_ == codomain_; }

  std::map<VertexId, VertexId> assignment() const {
    std::map<VertexId, VertexId> out;
    for (std::uint32_t v = 0; v < images_.size(); ++v)
      out[domain_.vertices()[v]] = codomain_.vertices()[images_[v]];
    return out;
  }

  // (after ∘ before)
  friend SimplicialMap compose(const SimplicialMap& after, const SimplicialMap& before) {
    if (!(before.codomain() == after.domain())) throw Error("maps are not composable");
    std::vector<std::uint32_t> images(before.images_.size());
    for (std::size_t v = 0; v < images.size(); ++v) images[v] = after.images_[before.images_[v]];
    return SimplicialMap(before.domain(), after.codomain(), std::move(images));
  }

 private:
  void validate() const {
    for (const auto& s : domain_.maximal_simplices()) {
      if (!codomain_.contains(image(s))) {
        std::string names;
        for (const auto& n : domain_.names(s)) names += (names.empty() ? "" : ",") + n;
        throw Error("map is not simplicial: image of {" + names + "} is not a simplex");
      }
    }
  }

  SimplicialComplex domain_;
  SimplicialComplex codomain_;
  std::vector<std::uint32_t> images_;
};

// ---------------------------------------------------------------------------
// Elementary constructions
// ---------------------------------------------------------------------------

inline std::string simplex_label(const NamedSimplex& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + s[i];
  return out + "]";
}

/// Build a complex from arbitrary (not necessarily maximal) named simplices.
inline SimplicialComplex complex_from_simplices(const std::vector<NamedSimplex>& simplices) {
  return SimplicialComplex::from_maximal_simplices(simplices);
}

inline SimplicialComplex rename_vertices(const SimplicialComplex& k, const std::string& prefix,
                                         const std::string& suffix = "") {
  std::vector<NamedSimplex> families;
  for (const auto& s : k.named_maximal_simplices()) {
    NamedSimplex t;
    for (const auto& v : s) t.push_back(prefix + v + suffix);
    families.push_back(std::move(t));
  }
  return SimplicialComplex::from_maximal_simplices(families);
}

inline SimplicialComplex full_subcomplex(const SimplicialComplex& k, const std::vector<VertexId>& subset) {
  std::vector<bool> keep(k.vertex_count(), false);
  std::vector<VertexId> names;
  for (const auto& v : subset) {
    keep[k.index_of(v)] = true;
    names.push_back(v);
  }
  std::vector<NamedSimplex> families;
  for (const auto& m : k.maximal_simplices()) {
    NamedSimplex t;
    for (auto v : m)
      if (keep[v]) t.push_back(k.vertices()[v]);
    if (!t.empty()) families.push_back(std::move(t));
  }
  return SimplicialComplex::from_maximal_simplices(std::move(names), families);
}

/// Subcomplex test by vertex names: every simplex of `sub` is a simplex of `k`.
inline bool is_subcomplex(const SimplicialComplex& sub, const SimplicialComplex& k) {
  for (const auto& s : sub.named_maximal_simplices())
    if (!k.contains(s)) return false;
  return true;
}

/// `sub` is a subcomplex of `k` and contains every simplex of `k` spanned by its vertices.
inline bool is_full_subcomplex(const SimplicialComplex& sub, const SimplicialComplex& k) {
  return is_subcomplex(sub, k) && full_subcomplex(k, sub.vertices()) == sub;
}

inline SimplicialComplex link(const SimplicialComplex& k, const NamedSimplex& sigma) {
  const Simplex s = k.simplex_of(sigma);
  if (!k.contains(s)) throw Error("link: " + simplex_label(sigma) + " is not a simplex of the complex");
  std::vector<NamedSimplex> families;
  for (const auto& m : k.maximal_simplices()) {
    if (!std::includes(m.begin(), m.end(), s.begin(), s.end())) continue;
    NamedSimplex rest;
    for (auto v : m)
      if (!std::binary_search(s.begin(), s.end(), v)) rest.push_back(k.vertices()[v]);
    if (!rest.empty()) families.push_back(std::move(rest));
  }
  return SimplicialComplex::from_maximal_simplices(families);
}

/// Simplicial join. Vertex names are kept when the two vertex sets are
/// disjoint; otherwise every vertex is tagged "L:" or "R:" by its factor.
inline SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  bool clash = false;
  for (const auto& v : a.vertices())
    if (b.find_vertex(v)) {
      clash = true;
      break;
    }
  const SimplicialComplex left = clash ? rename_vertices(a, "L:") : a;
  const SimplicialComplex right = clash ? rename_vertices(b, "R:") : b;
  std::vector<NamedSimplex> families;
  for (const auto& s : left.named_maximal_simplices())
    for (const auto& t : right.named_maximal_simplices()) {
      NamedSimplex u = s;
      u.insert(u.end(), t.begin(), t.end());
      families.push_back(std::move(u));
    }
  return SimplicialComplex::from_maximal_simplices(families);
}

inline SimplicialComplex cone(const SimplicialComplex& k, const VertexId& apex) {
  if (k.find_vertex(apex)) throw Error("cone apex '" + apex + "' already names a vertex");
  return join(k, SimplicialComplex::from_maximal_simplices({{apex}}));
}

inline SimplicialComplex skeleton(const SimplicialComplex& k, int dim) {
  std::vector<Simplex> families;
  for (const auto& m : k.maximal_simplices()) {
    if (static_cast<int>(m.size()) - 1 <= dim) families.push_back(m);
  }
  for (const auto& s : k.simplices(dim)) families.push_back(s);
  return SimplicialComplex(k.vertices(), std::move(families));
}

/// Vertices are the simplices of `k` (named by simplex_label); simplices are chains.
inline SimplicialComplex barycentric_subdivision(const SimplicialComplex& k) {
  std::vector<NamedSimplex> families;
  for (const auto& m : k.maximal_simplices()) {
    // Every maximal chain inside m corresponds to an ordering of its vertices.
    Simplex order = m;
    do {
      NamedSimplex chain;
      Simplex prefix;
      for (auto v : order) {
        prefix.push_back(v);
        Simplex sorted = prefix;
        std::sort(sorted.begin(), sorted.end());
        chain.push_back(simplex_label(k.names(sorted)));
      }
      families.push_back(std::move(chain));
    } while (std::next_permutation(order.begin(), order.end()));
  }
  return SimplicialComplex::from_maximal_simplices(families);
}

struct Embedded {
  SimplicialComplex complex;
  std::optional<SimplicialMap> bottom;  // K -> complex (or domain end of a cylinder)
  std::optional<SimplicialMap> top;     // K -> complex (or codomain end of a cylinder)
};

inline VertexId level_name(const VertexId& v, int level) { return v + "@" + std::to_string(level); }

/// Staircase triangulation of K x [0,1]: each ordered simplex v0<...<vk
/// contributes {v0@0..vi@0, vi@1..vk@1} for i = 0..k.
inline Embedded prism(const SimplicialComplex& k) {
  std::vector<NamedSimplex> families;
  for (const auto& m : k.maximal_simplices()) {
    for (std::size_t i = 0; i < m.size(); ++i) {
      NamedSimplex t;
      for (std::size_t j = 0; j <= i; ++j) t.push_back(level_name(k.vertices()[m[j]], 0));
      for (std::size_t j = i; j < m.size(); ++j) t.push_back(level_name(k.vertices()[m[j]], 1));
      families.push_back(std::move(t));
    }
  }
  Embedded out{SimplicialComplex::from_maximal_simplices(families), std::nullopt, std::nullopt};
  std::map<VertexId, VertexId> lo, hi;
  for (const auto& v : k.vertices()) {
    lo[v] = level_name(v, 0);
    hi[v] = level_name(v, 1);
  }
  out.bottom.emplace(k, out.complex, lo);
  out.top.emplace(k, out.complex, hi);
  return out;
}

/// Ordered simplicial mapping cylinder of f: domain copy at level 0, codomain
/// copy at level 1, and for each ordered domain simplex v0<...<vk the
/// simplices {v0@0..vi@0} ∪ {f(vi)@1..f(vk)@1}.
inline Embedded mapping_cylinder(const SimplicialMap& f) {
  const auto& dom = f.domain();
  const auto& cod = f.codomain();
  std::vector<NamedSimplex> families;
  for (const auto& m : cod.maximal_simplices()) {
    NamedSimplex t;
    for (auto v : m) t.push_back(level_name(cod.vertices()[v], 1));
    families.push_back(std::move(t));
  }
  for (const auto& m : dom.maximal_simplices()) {
    for (std::size_t i = 0; i < m.size(); ++i) {
      NamedSimplex t;
      for (std::size_t j = 0; j <= i; ++j) t.push_back(level_name(dom.vertices()[m[j]], 0));
      for (std::size_t j = i; j < m.size(); ++j) t.push_back(level_name(cod.vertices()[f(m[j])], 1));
      families.push_back(std::move(t));
    }
  }
  Embedded out{SimplicialComplex::from_maximal_simplices(families), std::nullopt, std::nullopt};
  std::map<VertexId, VertexId> lo, hi;
  for (const auto& v : dom.vertices()) lo[v] = level_name(v, 0);
  for (const auto& v : cod.vertices()) hi[v] = level_name(v, 1);
  out.bottom.emplace(dom, out.complex, lo);
  out.top.emplace(cod, out.complex, hi);
  return out;
}

// ---------------------------------------------------------------------------
// Flag condition
// ---------------------------------------------------------------------------

struct FlagCheck {
  bool flag = true;
  NamedSimplex witness;  // a smallest clique of the 1-skeleton that spans no simplex
  explicit operator bool() const { return flag; }
};

namespace detail {

inline std::vector<std::vector<bool>> adjacency(const SimplicialComplex& k) {
  std::vector<std::vector<bool>> adj(k.vertex_count(), std::vector<bool>(k.vertex_count(), false));
  for (const auto& e : k.simplices(1)) {
    adj[e[0]][e[1]] = true;
    adj[e[1]][e[0]] = true;
  }
  return adj;
}

}  // namespace detail

/// Witnesses are minimal by cardinality, ties broken lexicographically.
inline FlagCheck is_flag(const SimplicialComplex& k) {
  const auto adj = detail::adjacency(k);
  // If every clique with fewer than `size` vertices spans a simplex, then the
  // cliques of that size are exactly the sets sigma ∪ {w} with sigma a simplex
  // and w > max(sigma) adjacent to all of sigma.
  for (std::size_t size = 3;; ++size) {
    const auto& lower = k.simplices(static_cast<int>(size) - 2);
    if (lower.empty()) return {};
    std::optional<Simplex> worst;
    for (const auto& sigma : lower) {
      for (std::uint32_t w = sigma.back() + 1; w < k.vertex_count(); ++w) {
        bool clique = true;
        for (auto v : sigma)
          if (!adj[v][w]) {
            clique = false;
            break;
          }
        if (!clique) continue;
        Simplex candidate = sigma;
        candidate.push_back(w);
        if (!k.contains(candidate) && (!worst || candidate < *worst)) worst = candidate;
      }
    }
    if (worst) return {false, k.names(*worst)};
  }
}

// ---------------------------------------------------------------------------
// Isomorphism search (small complexes)
// ---------------------------------------------------------------------------

/// Returns a vertex bijection a -> b carrying simplices onto simplices, if any.
inline std::optional<std::vector<std::uint32_t>> find_isomorphism(const SimplicialComplex& a,
                                                                  const SimplicialComplex& b) {
  if (a.vertex_count() != b.vertex_count() || a.face_vector() != b.face_vector()) return std::nullopt;
  const std::size_t n = a.vertex_count();
  auto signature = [](const SimplicialComplex& k) {
    std::vector<std::vector<std::size_t>> sig(k.vertex_count(), std::vector<std::size_t>(
                                                                    std::max(k.dimension() + 1, 1), 0));
    for (int d = 0; d <= k.dimension(); ++d)
      for (const auto& s : k.simplices(d))
        for (auto v : s) ++sig[v][static_cast<std::size_t>(d)];
    return sig;
  };
  const auto sig_a = signature(a);
  const auto sig_b = signature(b);
  const auto adj_a = detail::adjacency(a);
  const auto adj_b = detail::adjacency(b);
  std::vector<std::uint32_t> order(n);
  for (std::uint32_t i = 0; i < n; ++i) order[i] = i;
  // Place high-degree vertices first to prune early.
  std::stable_sort(order.begin(), order.end(),
                   [&](auto x, auto y) { return sig_a[x] > sig_a[y]; });
  std::vector<std::int64_t> map_ab(n, -1);
  std::vector<bool> used(n, false);
  auto check_all = [&]() {
    for (int d = 0; d <= a.dimension(); ++d)
      for (const auto& s : a.simplices(d)) {
        Simplex t;
        for (auto v : s) t.push_back(static_cast<std::uint32_t>(map_ab[v]));
        std::sort(t.begin(), t.end());
        if (!b.contains(t)) return false;
      }
    return true;
  };
  auto recurse = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == n) return check_all();
    const auto v = order[depth];
    for (std::uint32_t w = 0; w < n; ++w) {
      if (used[w] || sig_a[v] != sig_b[w]) continue;
      bool ok = true;
      for (std::size_t j = 0; j < depth && ok; ++j) {
        const auto u = order[j];
        if (adj_a[v][u] != adj_b[w][static_cast<std::size_t>(map_ab[u])]) ok = false;
      }
      if (!ok) continue;
      map_ab[v] = w;
      used[w] = true;
      if (self(self, depth + 1)) return true;
      used[w] = false;
      map_ab[v] = -1;
    }
    return false;
  };
  if (!recurse(recurse, 0)) return std::nullopt;
  std::vector<std::uint32_t> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<std::uint32_t>(map_ab[i]);
  return out;
}

inline bool isomorphic(const SimplicialComplex& a, const SimplicialComplex& b) {
  return find_isomorphism(a, b).has_value();
}

}  // namespace ggt
