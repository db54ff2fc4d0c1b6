/**
 * Right-angled Artin groups G_L of flag complexes: words, the shortlex normal
 * form, the height homomorphism to Z, balls in the cube complex X_L, level-set
 * censuses, vertex links, presentations and homomorphism counts.
 */
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ggt/complex.hpp"
#include "ggt/group_action.hpp"
#include "ggt/linear_algebra.hpp"
#include "ggt/periodic.hpp"
#include "ggt/perm_group.hpp"

namespace ggt {

struct Letter {
  std::uint32_t generator = 0;
  int exponent = 1;  // nonzero; RAAG words in normal form only use +-1

  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter& a, const Letter& b) {
    // a < a^-1 < b < b^-1 ...
    if (a.generator != b.generator) return a.generator <=> b.generator;
    return b.exponent <=> a.exponent;
  }
};

using Word = std::vector<Letter>;

/// Replace every x^k by |k| letters x^{+-1}.
inline Word expand(const Word& w) {
  Word out;
  for (const auto& l : w)
    for (int i = 0; i < std::abs(l.exponent); ++i) out.push_back({l.generator, l.exponent > 0 ? 1 : -1});
  return out;
}

/// Merge adjacent letters on the same generator, dropping zero exponents.
inline Word collect(const Word& w) {
  Word out;
  for (const auto& l : w) {
    if (!out.empty() && out.back().generator == l.generator) {
      out.back().exponent += l.exponent;
      if (out.back().exponent == 0) out.pop_back();
    } else if (l.exponent != 0) {
      out.push_back(l);
    }
  }
  return out;
}

inline Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (auto& l : out) l.exponent = -l.exponent;
  return out;
}

inline Word concat(Word a, const Word& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

inline Word commutator(std::uint32_t x, std::uint32_t y) { return {{x, 1}, {y, 1}, {x, -1}, {y, -1}}; }

/// Exponent sum: the image under the homomorphism sending every generator to 1.
inline long height(const Word& w) {
  long h = 0;
  for (const auto& l : w) h += l.exponent;
  return h;
}

inline std::string word_to_string(const Word& w, const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::string out;
  for (const auto& l : w) {
    if (!out.empty()) out += ' ';
    out += names.at(l.generator);
    if (l.exponent != 1) out += "^" + std::to_string(l.exponent);
  }
  return out;
}

/// Parse "a b^-1 c^3"; "1" or an empty string is the empty word.
inline Word parse_word(const std::string& text, const std::vector<std::string>& names) {
  Word w;
  std::istringstream in(text);
  std::string token;
  while (in >> token) {
    if (token == "1") continue;
    std::string name = token;
    int exponent = 1;
    if (auto caret = token.find('^'); caret != std::string::npos) {
      name = token.substr(0, caret);
      const std::string e = token.substr(caret + 1);
      std::size_t used = 0;
      try {
        exponent = std::stoi(e, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != e.size() || exponent == 0) throw Error("bad exponent in token '" + token + "'");
    }
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) throw Error("unknown generator '" + name + "'");
    w.push_back({static_cast<std::uint32_t>(it - names.begin()), exponent});
  }
  return w;
}

// ---------------------------------------------------------------------------
// presentations

struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  friend bool operator==(const Presentation&, const Presentation&) = default;
};

inline void check_generator_name(const std::string& name) {
  if (name.empty() || name == "1" || name.find_first_of(" \t\n^:") != std::string::npos)
    throw Error("generator name '" + name + "' cannot be written in a presentation");
}

/// Text form:
///   generators: a b t
///   relators:
///   a b a^-1 b^-1
inline std::string to_text(const Presentation& p) {
  std::string out = "generators:";
  for (const auto& g : p.generators) {
    check_generator_name(g);
    out += " " + g;
  }
  out += "\nrelators:\n";
  for (const auto& r : p.relators) out += word_to_string(r, p.generators) + "\n";
  return out;
}

inline Presentation parse_presentation(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  Presentation p;
  if (!std::getline(in, line) || line.rfind("generators:", 0) != 0)
    throw Error("presentation must start with 'generators:'");
  std::istringstream gens(line.substr(11));
  for (std::string g; gens >> g;) {
    check_generator_name(g);
    if (std::find(p.generators.begin(), p.generators.end(), g) != p.generators.end())
      throw Error("generator '" + g + "' declared twice");
    p.generators.push_back(g);
  }
  if (!std::getline(in, line) || line != "relators:") throw Error("expected 'relators:' on the second line");
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    p.relators.push_back(parse_word(line, p.generators));
  }
  return p;
}

inline std::size_t generator_index(const Presentation& p, const std::string& name) {
  auto it = std::find(p.generators.begin(), p.generators.end(), name);
  if (it == p.generators.end()) throw Error("unknown generator '" + name + "'");
  return static_cast<std::size_t>(it - p.generators.begin());
}

inline void require_flag(const SimplicialComplex& l) {
  if (auto f = is_flag(l); !f.flag)
    throw Error("complex is not flag: " + simplex_label(f.witness) + " spans no simplex");
}

/// One generator per vertex and one commutator per edge.
inline Presentation raag_presentation(const SimplicialComplex& l) {
  require_flag(l);
  Presentation p{l.vertices(), {}};
  if (l.dimension() >= 1)
    for (const auto& e : l.simplices(1)) p.relators.push_back(commutator(e[0], e[1]));
  return p;
}

// ---------------------------------------------------------------------------
// the word problem

/// Commutation of generators in G_L, cached from the 1-skeleton.
class Raag {
 public:
  explicit Raag(SimplicialComplex l) : l_(std::move(l)), adj_(detail::adjacency(l_)) { require_flag(l_); }

  const SimplicialComplex& complex() const { return l_; }
  std::size_t rank() const { return l_.vertex_count(); }
  bool commute(std::uint32_t x, std::uint32_t y) const { return x != y && adj_[x][y]; }

  Word word(const std::string& text) const { return parse_word(text, l_.vertices()); }
  std::string to_string(const Word& w) const { return word_to_string(w, l_.vertices()); }

  /// Shortlex-least word representing the same element.
  Word normal_form(const Word& w) const {
    Word r = expand(w);
    for (auto& l : r)
      if (l.generator >= rank()) throw Error("word uses a generator outside the complex");
    // cancel x^e ... x^-e whenever everything in between commutes with x
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t i = 0; i < r.size() && !changed; ++i)
        for (std::size_t j = i + 1; j < r.size(); ++j) {
          if (r[j].generator == r[i].generator) {
            if (r[j].exponent == -r[i].exponent) {
              r.erase(r.begin() + static_cast<long>(j));
              r.erase(r.begin() + static_cast<long>(i));
              changed = true;
            }
            break;
          }
          if (!commute(r[i].generator, r[j].generator)) break;
        }
    }
    // lexicographically least arrangement: repeatedly take the least letter
    // that can be shuffled to the front
    Word out;
    out.reserve(r.size());
    std::vector<bool> used(r.size(), false);
    for (std::size_t step = 0; step < r.size(); ++step) {
      std::optional<std::size_t> best;
      for (std::size_t j = 0; j < r.size(); ++j) {
        if (used[j]) continue;
        bool front = true;
        for (std::size_t i = 0; i < j && front; ++i)
          if (!used[i] && !commute(r[i].generator, r[j].generator)) front = false;
        if (front && (!best || r[j] < r[*best])) best = j;
      }
      used[*best] = true;
      out.push_back(r[*best]);
    }
    return out;
  }

  Word multiply(const Word& a, const Word& b) const { return normal_form(concat(a, b)); }
  bool equal(const Word& a, const Word& b) const { return normal_form(concat(a, inverse(b))).empty(); }

 private:
  SimplicialComplex l_;
  std::vector<std::vector<bool>> adj_;
};

inline Word normal_form(const Word& w, const SimplicialComplex& l) { return Raag(l).normal_form(w); }

// ---------------------------------------------------------------------------
// the cube complex X_L

/// The cube (g, sigma): its vertices are g times products of subsets of sigma.
struct CubeCell {
  Word base;      // normal form, the lowest corner
  Simplex simplex;  // possibly empty
  int dimension() const { return static_cast<int>(simplex.size()); }
  friend bool operator==(const CubeCell&, const CubeCell&) = default;
  friend auto operator<=>(const CubeCell&, const CubeCell&) = default;
};

/// Normal forms of the 2^n corners of a cube, indexed by subset bitmask.
inline std::vector<Word> cube_corners(const Raag& g, const CubeCell& c) {
  const std::size_t n = c.simplex.size();
  std::vector<Word> out;
  out.reserve(std::size_t{1} << n);
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    Word w = c.base;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) w.push_back({c.simplex[i], 1});
    out.push_back(g.normal_form(w));
  }
  return out;
}

inline constexpr std::size_t kDefaultBallBound = 200000;

struct CubeBall {
  std::vector<Word> vertices;  // normal forms of length <= radius, sorted
  std::vector<CubeCell> cells;  // sorted; includes the 0-cubes
  std::vector<std::size_t> face_vector() const {
    std::vector<std::size_t> f;
    for (const auto& c : cells) {
      if (f.size() <= c.simplex.size()) f.resize(c.simplex.size() + 1, 0);
      ++f[c.simplex.size()];
    }
    return f;
  }
};

/// All cubes of X_L whose every corner has normal-form length <= r.
inline CubeBall cube_ball(const SimplicialComplex& l, std::size_t r, std::size_t bound = kDefaultBallBound) {
  Raag g(l);
  std::set<Word> seen{Word{}};
  std::vector<Word> frontier{Word{}};
  for (std::size_t len = 1; len <= r; ++len) {
    std::vector<Word> next;
    for (const auto& w : frontier)
      for (std::uint32_t v = 0; v < g.rank(); ++v)
        for (int e : {1, -1}) {
          Word x = g.normal_form(concat(w, {{v, e}}));
          if (x.size() == len && seen.insert(x).second) {
            next.push_back(std::move(x));
            if (seen.size() > bound)
              throw BoundExceeded("cube ball of radius " + std::to_string(r) + " exceeds " + std::to_string(bound) +
                                  " vertices");
          }
        }
    frontier = std::move(next);
  }
  CubeBall ball;
  ball.vertices.assign(seen.begin(), seen.end());
  std::vector<Simplex> simplices{Simplex{}};
  for (int d = 0; d <= l.dimension(); ++d)
    for (const auto& s : l.simplices(d)) simplices.push_back(s);
  for (const auto& base : ball.vertices)
    for (const auto& s : simplices) {
      CubeCell c{base, s};
      bool inside = true;
      for (const auto& corner : cube_corners(g, c))
        if (corner.size() > r) {
          inside = false;
          break;
        }
      if (inside) ball.cells.push_back(std::move(c));
    }
  std::sort(ball.cells.begin(), ball.cells.end());
  return ball;
}

/// Label of the half-edge at a vertex pointing to g v (up) or g v^-1 (down).
inline VertexId up_copy(const VertexId& v) { return v + "'"; }
inline VertexId down_copy(const VertexId& v) { return v + "''"; }

/// The primed copies must stay distinct, so vertex names may not end in a prime.
inline void require_copyable_names(const SimplicialComplex& k) {
  for (const auto& v : k.vertices())
    if (!v.empty() && v.back() == '\'')
      throw Error("vertex '" + v + "' ends in a prime and would clash with the primed copies");
}

/// Link of the vertex g in X_L, built from the cubes having g as a corner.
/// Each half-edge is named by comparing the neighbouring corner with g v and
/// g v^-1.
inline SimplicialComplex vertex_link_at(const Raag& g, const Word& vertex) {
  const auto& l = g.complex();
  require_copyable_names(l);
  const Word at = g.normal_form(vertex);
  std::vector<VertexId> names;
  std::vector<NamedSimplex> simplices;
  for (int d = 0; d <= l.dimension(); ++d)
    for (const auto& s : l.simplices(d)) {
      const std::size_t n = s.size();
      for (std::size_t sub = 0; sub < (std::size_t{1} << n); ++sub) {
        // the cube with g as the corner reached from the base through `sub`
        Word base = at;
        for (std::size_t i = n; i-- > 0;)
          if (sub >> i & 1) base.push_back({s[i], -1});
        CubeCell cube{g.normal_form(base), s};
        auto corners = cube_corners(g, cube);
        std::optional<std::size_t> mine;
        for (std::size_t m = 0; m < corners.size(); ++m)
          if (corners[m] == at) mine = m;
        if (!mine) throw Error("internal: vertex is not a corner of its cube");
        NamedSimplex half_edges;
        for (std::size_t i = 0; i < n; ++i) {
          const Word& nb = corners[*mine ^ (std::size_t{1} << i)];
          const VertexId& v = l.vertices()[s[i]];
          if (nb == g.normal_form(concat(at, {{s[i], 1}}))) half_edges.push_back(up_copy(v));
          else if (nb == g.normal_form(concat(at, {{s[i], -1}}))) half_edges.push_back(down_copy(v));
          else throw Error("internal: cube edge is not labelled by a generator");
        }
        names.insert(names.end(), half_edges.begin(), half_edges.end());
        simplices.push_back(std::move(half_edges));
      }
    }
  return SimplicialComplex::from_maximal_simplices(names, simplices);
}

/// The link of a vertex of X_L (all vertices have isomorphic links).
inline SimplicialComplex vertex_link_XL(const SimplicialComplex& l) { return vertex_link_at(Raag(l), Word{}); }

/// Half-edges pointing up in height: the primed copies.
inline SimplicialComplex ascending_link(const SimplicialComplex& l) {
  std::vector<VertexId> up;
  for (const auto& v : l.vertices()) up.push_back(up_copy(v));
  return full_subcomplex(vertex_link_XL(l), up);
}

inline SimplicialComplex descending_link(const SimplicialComplex& l) {
  std::vector<VertexId> down;
  for (const auto& v : l.vertices()) down.push_back(down_copy(v));
  return full_subcomplex(vertex_link_XL(l), down);
}

// ---------------------------------------------------------------------------
// level sets of the height function

/// Per-dimension orbit counts: cube_orbits[n] for n-cubes of X_L, level_cells[d]
/// for d-cells of Y = f^-1(c).
struct LevelCensus {
  std::vector<std::size_t> cube_orbits;
  std::vector<std::size_t> level_cells;
  friend bool operator==(const LevelCensus&, const LevelCensus&) = default;
};

/// Census from simplex counts: n-cube orbits are (n-1)-simplex orbits of L,
/// and each meets the level set in n orbits of (n-1)-cells.
inline LevelCensus level_census_from_counts(const std::vector<std::size_t>& simplex_orbits) {
  LevelCensus c;
  c.cube_orbits.push_back(1);
  for (auto s : simplex_orbits) c.cube_orbits.push_back(s);
  for (std::size_t n = 1; n < c.cube_orbits.size(); ++n) c.level_cells.push_back(n * c.cube_orbits[n]);
  return c;
}

inline LevelCensus level_census(const SimplicialComplex& l) {
  require_flag(l);
  return level_census_from_counts(l.face_vector());
}

/// Orbits of cubes under G_L : Q are simplex orbits of L under Q.
inline LevelCensus level_census(const GroupComplexAction& a) {
  require_flag(a.complex());
  std::vector<std::size_t> counts(static_cast<std::size_t>(a.complex().dimension() + 1), 0);
  for (const auto& o : simplex_orbits(a)) ++counts[static_cast<std::size_t>(o.dimension)];
  return level_census_from_counts(counts);
}

/// For an infinite periodic L with Z acting by the shift, simplex orbits are the
/// simplices of one slab not in its bottom interface.
inline LevelCensus level_census(const PeriodicComplex& p) {
  require_flag(window(p, -1, 1));
  auto f = p.slab().face_vector();
  auto fi = p.interface().face_vector();
  for (std::size_t d = 0; d < fi.size(); ++d) f[d] -= fi[d];
  while (!f.empty() && f.back() == 0) f.pop_back();
  return level_census_from_counts(f);
}

/// Census by enumeration: the elements a^k (a the first generator) meet every
/// coset of H_L once, so the cubes (a^k, sigma) represent each H_L-orbit of
/// cubes exactly once.  A cube contributes a cell of dimension n-1 to Y when
/// the level c lies strictly between its lowest and highest corner heights.
inline LevelCensus enumerate_level_census(const SimplicialComplex& l, const Rational& c) {
  Raag g(l);
  if (g.rank() == 0) throw Error("the void complex has no level sets");
  if (denominator(c) == 1) throw Error("the level must not pass through vertices of X_L");
  LevelCensus census;
  census.cube_orbits.assign(static_cast<std::size_t>(l.dimension() + 2), 0);
  census.level_cells.assign(static_cast<std::size_t>(l.dimension() + 1), 0);
  census.cube_orbits[0] = 1;
  std::vector<Simplex> simplices;
  for (int d = 0; d <= l.dimension(); ++d)
    for (const auto& s : l.simplices(d)) simplices.push_back(s);
  for (const auto& s : simplices) ++census.cube_orbits[s.size()];
  const long reach = static_cast<long>(l.dimension()) + 2;
  const long centre = static_cast<long>(numerator(c) / denominator(c));
  for (long k = centre - reach; k <= centre + reach; ++k) {
    Word base(static_cast<std::size_t>(std::abs(k)), Letter{0, k < 0 ? -1 : 1});
    for (const auto& s : simplices) {
      auto corners = cube_corners(g, CubeCell{g.normal_form(base), s});
      long lo = height(corners.front()), hi = lo;
      for (const auto& w : corners) {
        lo = std::min(lo, height(w));
        hi = std::max(hi, height(w));
      }
      if (Rational(lo) < c && c < Rational(hi)) ++census.level_cells[s.size() - 1];
    }
  }
  return census;
}

// ---------------------------------------------------------------------------
// HNN extensions, semidirect products and amalgams

inline std::string fresh_name(const std::vector<std::string>& taken, const std::string& stem, bool numbered) {
  auto free = [&](const std::string& n) { return std::find(taken.begin(), taken.end(), n) == taken.end(); };
  if (!numbered && free(stem)) return stem;
  for (std::size_t i = 1;; ++i) {
    std::string n = stem + std::to_string(i);
    if (free(n)) return n;
  }
}

/// G_L : Z for the periodic complex L, as an HNN extension of the slab's RAAG:
/// the stable letter t conjugates each bottom interface vertex to its top copy.
inline Presentation hnn_presentation(const PeriodicComplex& p) {
  if (!is_full_subcomplex(full_subcomplex(p.slab(), detail::image_names(p.bottom())), p.slab()) ||
      !is_full_subcomplex(full_subcomplex(p.slab(), detail::image_names(p.top())), p.slab()))
    throw Error("interface images must be full subcomplexes of the slab for the RAAG inclusions to split");
  Presentation pres = raag_presentation(p.slab());
  const auto t = static_cast<std::uint32_t>(pres.generators.size());
  pres.generators.push_back(fresh_name(pres.generators, "t", false));
  for (std::uint32_t x = 0; x < p.interface().vertex_count(); ++x)
    pres.relators.push_back({{t, 1}, {p.bottom()(x), 1}, {t, -1}, {p.top()(x), -1}});
  return pres;
}

/// A presentation of a finite permutation group on its own generators, read off
/// the Cayley graph: one relator per non-tree edge of a breadth-first tree.
/// Identity generators are skipped; the returned vector maps kept generator
/// positions to generator indices of the group.
inline std::pair<std::vector<Word>, std::vector<std::size_t>> cayley_relators(const PermGroup& q) {
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < q.generators().size(); ++i)
    if (q.generator_index(i) != PermGroup::identity()) kept.push_back(i);
  std::vector<std::optional<Word>> tree(q.order());
  tree[PermGroup::identity()] = Word{};
  std::vector<ElementId> queue{PermGroup::identity()};
  std::set<std::pair<ElementId, std::size_t>> tree_edges;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const ElementId x = queue[qi];
    for (std::size_t j = 0; j < kept.size(); ++j) {
      const ElementId y = q.mul(x, q.generator_index(kept[j]));
      if (!tree[y]) {
        tree[y] = concat(*tree[x], {{static_cast<std::uint32_t>(j), 1}});
        tree_edges.insert({x, j});
        queue.push_back(y);
      }
    }
  }
  std::vector<Word> relators;
  for (ElementId x = 0; x < q.order(); ++x)
    for (std::size_t j = 0; j < kept.size(); ++j) {
      if (tree_edges.count({x, j})) continue;
      const ElementId y = q.mul(x, q.generator_index(kept[j]));
      Word r = collect(concat(concat(*tree[x], {{static_cast<std::uint32_t>(j), 1}}), inverse(*tree[y])));
      // cyclically reduce
      while (r.size() >= 2 && r.front().generator == r.back().generator) {
        Letter merged{r.front().generator, r.front().exponent + r.back().exponent};
        r.pop_back();
        r.erase(r.begin());
        if (merged.exponent != 0) r.push_back(merged);
        r = collect(r);
      }
      if (!r.empty() && std::find(relators.begin(), relators.end(), r) == relators.end()) relators.push_back(r);
    }
  return {relators, kept};
}

/// G_L : Q with q v q^-1 = q(v) for every generator q of Q and vertex v.
inline Presentation semidirect_presentation(const GroupComplexAction& a) {
  Presentation pres = raag_presentation(a.complex());
  const auto& q = a.group();
  auto [qrels, kept] = cayley_relators(q);
  const auto offset = static_cast<std::uint32_t>(pres.generators.size());
  for (std::size_t j = 0; j < kept.size(); ++j)
    pres.generators.push_back(fresh_name(pres.generators, "s", kept.size() > 1));
  for (auto r : qrels) {
    for (auto& l : r) l.generator += offset;
    pres.relators.push_back(std::move(r));
  }
  for (std::size_t j = 0; j < kept.size(); ++j) {
    const Perm& p = a.vertex_perm(q.generator_index(kept[j]));
    const auto s = offset + static_cast<std::uint32_t>(j);
    for (std::uint32_t v = 0; v < a.complex().vertex_count(); ++v)
      pres.relators.push_back({{s, 1}, {v, 1}, {s, -1}, {p[v], -1}});
  }
  return pres;
}

/// G_K as the amalgam of G_L and G_M over G_N, where K = L u M with L, M and
/// N = L n M full subcomplexes.  Generators are "L.v" and "M.v"; the shared
/// vertices are identified by relators.
inline Presentation amalgam_presentation(const SimplicialComplex& k, const std::vector<VertexId>& lverts,
                                         const std::vector<VertexId>& mverts) {
  require_flag(k);
  auto l = full_subcomplex(k, lverts);
  auto m = full_subcomplex(k, mverts);
  for (const auto& s : k.maximal_simplices()) {
    auto names = k.names(s);
    auto inside = [&](const SimplicialComplex& part) {
      for (const auto& v : names)
        if (!part.find_vertex(v)) return false;
      return true;
    };
    if (!inside(l) && !inside(m))
      throw Error("simplex " + simplex_label(names) + " lies in neither part of the decomposition");
  }
  Presentation pres;
  auto add_part = [&](const SimplicialComplex& part, const std::string& prefix) {
    const auto offset = static_cast<std::uint32_t>(pres.generators.size());
    for (const auto& v : part.vertices()) pres.generators.push_back(prefix + v);
    for (auto r : raag_presentation(part).relators) {
      for (auto& x : r) x.generator += offset;
      pres.relators.push_back(std::move(r));
    }
    return offset;
  };
  const auto lo = add_part(l, "L.");
  const auto mo = add_part(m, "M.");
  for (std::uint32_t i = 0; i < l.vertex_count(); ++i)
    if (auto j = m.find_vertex(l.vertices()[i])) pres.relators.push_back({{lo + i, 1}, {mo + *j, -1}});
  return pres;
}

// ---------------------------------------------------------------------------
// homomorphisms to finite groups

inline constexpr std::uint64_t kDefaultHomSearchBound = 10'000'000;

inline ElementId evaluate(const PermGroup& t, const Word& w, const std::vector<ElementId>& images) {
  ElementId x = PermGroup::identity();
  for (const auto& l : w) {
    const ElementId y = l.exponent > 0 ? images[l.generator] : t.inv(images[l.generator]);
    for (int i = 0; i < std::abs(l.exponent); ++i) x = t.mul(x, y);
  }
  return x;
}

/// Number of assignments of the generators into T that kill every relator.
inline std::uint64_t count_homs(const Presentation& p, const PermGroup& t,
                                std::uint64_t bound = kDefaultHomSearchBound) {
  const std::size_t n = p.generators.size();
  double space = 1;
  for (std::size_t i = 0; i < n; ++i) space *= static_cast<double>(t.order());
  if (space > static_cast<double>(bound))
    throw BoundExceeded("homomorphism search space " + std::to_string(t.order()) + "^" + std::to_string(n) +
                        " exceeds " + std::to_string(bound));
  // check each relator as soon as its last generator is assigned
  std::vector<std::vector<const Word*>> ready(n + 1);
  for (const auto& r : p.relators) {
    std::size_t last = 0;
    for (const auto& l : r) {
      if (l.generator >= n) throw Error("relator uses an undeclared generator");
      last = std::max<std::size_t>(last, l.generator + 1);
    }
    ready[last].push_back(&r);
  }
  std::vector<ElementId> images(n, 0);
  std::uint64_t count = 0;
  auto ok = [&](std::size_t level) {
    for (const Word* r : ready[level])
      if (evaluate(t, *r, images) != PermGroup::identity()) return false;
    return true;
  };
  std::function<void(std::size_t)> assign = [&](std::size_t i) {
    if (i == n) {
      ++count;
      return;
    }
    for (ElementId x = 0; x < t.order(); ++x) {
      images[i] = x;
      if (ok(i + 1)) assign(i + 1);
    }
  };
  if (ok(0)) assign(0);
  return count;
}

}  // namespace ggt
