/**
 * Report logic for finite subgroups of H_L : Q and related finiteness claims:
 * fixed-point data, conjugacy-class verdicts, free products, and dimension
 * lower bounds.
 */
#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ggt/group_action.hpp"
#include "ggt/homology.hpp"
#include "ggt/periodic.hpp"
#include "ggt/perm_group.hpp"

namespace ggt {

inline const char* const kCiteConjugacy =
    "finite subgroups of H_L:Q are classified by fixed sets of L: empty fixed set gives infinitely many "
    "conjugacy classes, an invariant m-simplex at most m+1, a fixed vertex a single class";
inline const char* const kCiteFreeProduct =
    "non-trivial finite subgroups of a free product are conjugate into exactly one factor";
inline const char* const kCiteTypeF =
    "H_L:Z is of type F when L is contractible, flag, cocompact with finite stabilizers";
inline const char* const kCiteFpQ =
    "H_L:Z is of type FP over Q when L is Q-acyclic, flag, cocompact with finite stabilizers";
inline const char* const kCiteDimension = "cd_Q H_L <= dim Y = dim L and cd_Z H_L <= dim X_L = dim L + 1";
inline const char* const kCiteSl = "SL_n(F_p) acting on L with p-group stabilizers forces dim L >= n - 1";

// ---------------------------------------------------------------------------
// fixed points

struct FixedPointEntry {
  SubgroupRecord subgroup;
  bool empty = true;
  std::optional<int> min_dimension;  // of an invariant simplex, when nonempty
  bool fixed_vertex = false;
};

struct FixedPointReport {
  std::string group;
  std::vector<FixedPointEntry> entries;  // one per conjugacy class of subgroups
};

inline FixedPointReport fixed_point_report(const GroupComplexAction& a) {
  FixedPointReport r{a.group().label(), {}};
  for (const auto& rec : subgroup_classes(a.group())) {
    FixedPointEntry e{rec, true, min_invariant_dimension(a, rec.representative), false};
    e.empty = !e.min_dimension.has_value();
    e.fixed_vertex = e.min_dimension && *e.min_dimension == 0;
    r.entries.push_back(std::move(e));
  }
  return r;
}

// ---------------------------------------------------------------------------
// conjugacy classification

enum class Verdict { Infinite, Bound, Single };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Infinite: return "INFINITE";
    case Verdict::Bound: return "BOUND";
    case Verdict::Single: return "SINGLE";
  }
  return "?";
}

struct ConjugacyEntry {
  std::string factor;  // group the subgroup lives in; empty for the merged trivial subgroup
  SubgroupRecord subgroup;
  Verdict verdict = Verdict::Infinite;
  std::optional<std::size_t> bound;  // m + 1 for BOUND and SINGLE
  std::string evidence;
  std::vector<std::string> citations;

  std::string verdict_text() const {
    return verdict == Verdict::Bound ? "BOUND(" + std::to_string(*bound) + ")" : to_string(verdict);
  }
  friend bool operator==(const ConjugacyEntry& a, const ConjugacyEntry& b) {
    return a.factor == b.factor && a.subgroup.representative == b.subgroup.representative &&
           a.verdict == b.verdict && a.bound == b.bound && a.evidence == b.evidence && a.citations == b.citations;
  }
};

struct ConjugacyReport {
  std::string group;
  std::string complex;
  std::vector<ConjugacyEntry> entries;

  const ConjugacyEntry* find(std::size_t order, const std::string& factor) const {
    for (const auto& e : entries)
      if (e.subgroup.order == order && e.factor == factor) return &e;
    return nullptr;
  }
  friend bool operator==(const ConjugacyReport&, const ConjugacyReport&) = default;
};

inline ConjugacyReport conjugacy_report(const GroupComplexAction& a, const std::string& complex_label = "L") {
  ConjugacyReport r{a.group().label(), complex_label, {}};
  for (const auto& fp : fixed_point_report(a).entries) {
    ConjugacyEntry e;
    e.factor = r.group;
    e.subgroup = fp.subgroup;
    e.citations = {kCiteConjugacy};
    if (fp.empty) {
      e.verdict = Verdict::Infinite;
      e.evidence = "fixed set L^P is empty; conjugates are told apart by the height of their unique fixed vertex";
    } else if (fp.fixed_vertex) {
      e.verdict = Verdict::Single;
      e.bound = 1;
      e.evidence = "P fixes a vertex of L";
    } else {
      e.verdict = Verdict::Bound;
      e.bound = static_cast<std::size_t>(*fp.min_dimension) + 1;
      e.evidence = "smallest P-invariant simplex has dimension " + std::to_string(*fp.min_dimension);
    }
    r.entries.push_back(std::move(e));
  }
  return r;
}

/// For a periodic L with a Q-symmetry commuting with the shift, Q preserves
/// every slab, so fixed sets are read off the slab action.
inline ConjugacyReport conjugacy_report(const PeriodicComplex& p, const std::string& complex_label = "periodic L") {
  if (!p.symmetry()) throw Error("periodic complex carries no group action");
  return conjugacy_report(*p.symmetry(), complex_label);
}

/// Reports for the factors G_i = H_i:Q_i of a free product: the non-trivial
/// entries are kept verbatim, and the trivial subgroups merge into one class.
inline ConjugacyReport free_product_aggregate(const std::vector<ConjugacyReport>& reports) {
  if (reports.empty()) throw Error("free product of no factors");
  if (reports.size() == 1) return reports.front();
  ConjugacyReport out;
  std::optional<ConjugacyEntry> trivial;
  for (const auto& r : reports) {
    out.group += (out.group.empty() ? "" : " * ") + r.group;
    out.complex += (out.complex.empty() ? "" : " * ") + r.complex;
    for (const auto& e : r.entries) {
      if (e.subgroup.order == 1) {
        if (!trivial) {
          trivial = e;
          trivial->factor.clear();
          trivial->verdict = Verdict::Single;
          trivial->bound = 1;
          trivial->evidence = "the trivial subgroup";
          trivial->citations = {kCiteFreeProduct};
        }
        continue;
      }
      ConjugacyEntry kept = e;
      if (std::find(kept.citations.begin(), kept.citations.end(), kCiteFreeProduct) == kept.citations.end())
        kept.citations.push_back(kCiteFreeProduct);
      out.entries.push_back(std::move(kept));
    }
  }
  if (trivial) out.entries.insert(out.entries.begin(), *trivial);
  return out;
}

// ---------------------------------------------------------------------------
// finiteness summaries

enum class Level { Proved, Evidence };

inline std::string to_string(Level l) { return l == Level::Proved ? "PROVED" : "EVIDENCE"; }

struct Claim {
  std::string name;
  bool holds = false;
  Level level = Level::Proved;
  std::string detail;
};

/// Acyclicity of L over a ring: PROVED for a finite complex, EVIDENCE for an
/// infinite one.
struct Acyclicity {
  Coefficients ring = Coefficients::rationals();
  bool holds = false;
  Level level = Level::Evidence;
  std::string detail;
};

struct FinitenessInput {
  std::string group;
  std::optional<int> dim_l;
  std::optional<FlagCheck> flag;
  std::optional<bool> cocompact;
  std::optional<std::vector<SimplexOrbit>> orbits;
  std::optional<Acyclicity> acyclicity;
  std::optional<bool> fixed_point_free;  // L^Q empty
};

struct FinitenessReport {
  std::string group;
  std::vector<Claim> hypotheses;
  std::vector<Claim> conclusions;
  int dim_l = 0;
  int dim_y = 0;
  int dim_xl = 0;
  int rational_cd_bound = 0;  // for H_L : Z
  int integral_cd_bound = 0;
  std::vector<std::string> citations;

  const Claim* conclusion(const std::string& name) const {
    for (const auto& c : conclusions)
      if (c.name == name) return &c;
    return nullptr;
  }
};

inline FinitenessReport finiteness_report(const FinitenessInput& in) {
  auto need = [](bool present, const char* what) {
    if (!present) throw Error(std::string("missing evidence component: ") + what);
  };
  need(in.dim_l.has_value(), "dimension of L");
  need(in.flag.has_value(), "flagness of L");
  need(in.cocompact.has_value(), "cocompactness");
  need(in.orbits.has_value(), "orbit data for stabilizers");
  need(in.acyclicity.has_value(), "acyclicity evidence");

  FinitenessReport r;
  r.group = in.group;
  r.dim_l = *in.dim_l;
  r.dim_y = *in.dim_l;
  r.dim_xl = *in.dim_l + 1;
  r.rational_cd_bound = r.dim_y + 1;
  r.integral_cd_bound = r.dim_xl + 1;
  r.citations = {kCiteDimension};

  const auto& acyc = *in.acyclicity;
  r.hypotheses.push_back({"L is flag", in.flag->flag, Level::Proved,
                          in.flag->flag ? "every clique spans a simplex"
                                        : "missing simplex " + simplex_label(in.flag->witness)});
  r.hypotheses.push_back({"cocompact action", *in.cocompact, Level::Proved, "finite fundamental domain"});
  std::size_t largest = 1;
  for (const auto& o : *in.orbits) largest = std::max(largest, o.stabilizer.size());
  r.hypotheses.push_back({"finite cell stabilizers", true, Level::Proved,
                          std::to_string(in.orbits->size()) + " cell orbits, largest stabilizer of order " +
                              std::to_string(largest)});
  r.hypotheses.push_back({"L is acyclic over " + acyc.ring.name(), acyc.holds, acyc.level, acyc.detail});
  const bool base = in.flag->flag && *in.cocompact && acyc.holds;

  if (acyc.ring.kind() == Coefficients::Kind::Integers) {
    // contractibility of an infinite complex is never certified by finite computation
    r.conclusions.push_back({"type F template for H_L:Z", base, Level::Evidence,
                             base ? "all hypotheses present; contractibility is evidenced, not proved"
                                  : "a hypothesis fails"});
    r.citations.push_back(kCiteTypeF);
  }
  r.conclusions.push_back({"type FP over Q template for H_L:Z", base, acyc.level,
                           base ? "Q-acyclic, flag, cocompact, finite stabilizers" : "a hypothesis fails"});
  r.citations.push_back(kCiteFpQ);
  r.conclusions.push_back({"rational cohomological dimension of H_L:Z at most " +
                               std::to_string(r.rational_cd_bound),
                           base, acyc.level, "dim Y = dim L = " + std::to_string(r.dim_y) + ", plus one for Z"});
  r.conclusions.push_back({"integral cohomological dimension of H_L:Z at most " +
                               std::to_string(r.integral_cd_bound),
                           base, acyc.level, "dim X_L = dim L + 1 = " + std::to_string(r.dim_xl) + ", plus one for Z"});
  if (in.fixed_point_free) {
    r.hypotheses.push_back({"Q fixes no point of L", *in.fixed_point_free, Level::Proved, "fixed set L^Q"});
    r.conclusions.push_back({"infinitely many conjugacy classes of subgroups isomorphic to Q", *in.fixed_point_free,
                             Level::Proved, "empty fixed set"});
    r.citations.push_back(kCiteConjugacy);
  }
  return r;
}

/// Evidence that a telescope-like periodic complex is contractible: windows
/// have stable reduced homology and stage maps kill top homology.
inline Acyclicity telescope_contractibility_evidence(const PeriodicComplex& p, long windows = 3) {
  Acyclicity a;
  a.ring = Coefficients::integers();
  a.level = Level::Evidence;
  std::optional<std::vector<std::size_t>> first;
  bool stable = true;
  for (long b = 0; b < windows; ++b) {
    auto betti = reduced_homology(window(p, 0, b), Coefficients::integers()).betti();
    if (!first) first = betti;
    else stable = stable && betti == *first;
  }
  bool killed = true;
  for (long k = 0; k + 1 < windows; ++k) killed = killed && stage_inclusion_multiplier(p, k) == 0;
  a.holds = stable && killed;
  a.detail = std::string("reduced homology of windows ") + (stable ? "stable" : "not stable") +
             "; stage inclusions " + (killed ? "kill" : "do not kill") + " top homology";
  return a;
}

/// Rational acyclicity of a finite complex, proved by exact computation.
inline Acyclicity finite_acyclicity(const SimplicialComplex& k, const Coefficients& ring) {
  Acyclicity a;
  a.ring = ring;
  a.level = Level::Proved;
  a.holds = is_acyclic(k, ring);
  a.detail = "reduced homology over " + ring.name() + (a.holds ? " vanishes" : " is nonzero");
  return a;
}

/// Periodic complex with Q-symmetry and degree-zero stage maps: the route to a
/// group of type F with infinitely many classes of subgroups isomorphic to Q.
inline FinitenessReport ivf_pipeline(const PeriodicComplex& p, const PermGroup& q) {
  FinitenessInput in;
  in.group = q.label();
  in.dim_l = std::max(p.slab().dimension(), 0);
  in.flag = is_flag(window(p, -1, 1));
  in.cocompact = true;
  const auto action = p.symmetry() ? *p.symmetry() : GroupComplexAction::trivial(q, p.slab());
  in.orbits = simplex_orbits(action);
  in.acyclicity = telescope_contractibility_evidence(p);
  Subgroup whole(q.order());
  for (ElementId i = 0; i < q.order(); ++i) whole[i] = i;
  if (p.symmetry()) in.fixed_point_free = fixed_subcomplex(action, whole).empty();
  auto r = finiteness_report(in);
  auto recipe = degree_zero_recipe(q);
  r.hypotheses.push_back({"degree-zero orbit recipe exists for Q", recipe.has_value(), Level::Proved,
                          recipe ? "|Q| n = 1 + sum m_P |Q:P| with n = " + std::to_string(recipe->free_count)
                                 : "Q has prime power order"});
  return r;
}

/// The Q-acyclic route for an arbitrary nontrivial Q: Z = Q * Q * Delta with
/// the 2-skeleton of R x Z.  The 3-cells killing H_2 by a stably free module are
/// not built, so L is declared 3-dimensional; what is checked is that the
/// 2-skeleton is simply connected over Q in every window and that the action
/// is free off R x Delta.
inline FinitenessReport fpq2_pipeline(const GroupComplexAction& z_action) {
  auto p = line_product_2skeleton(z_action);
  FinitenessInput in;
  in.group = z_action.group().label();
  in.dim_l = 3;
  in.flag = is_flag(barycentric_subdivision(window(p, -1, 1)));
  in.cocompact = true;
  auto orbits = simplex_orbits(*p.symmetry());
  in.orbits = orbits;
  Acyclicity a;
  a.ring = Coefficients::rationals();
  a.level = Level::Evidence;
  bool h1 = true;
  for (long b = 0; b < 3; ++b) h1 = h1 && homology(window(p, 0, b), Coefficients::rationals())[1].rank == 0;
  std::set<VertexId> delta;  // vertices of Z with nontrivial stabilizer
  for (const auto& o : simplex_orbits(z_action))
    if (o.dimension == 0 && !o.free())
      for (ElementId g = 0; g < z_action.group().order(); ++g)
        delta.insert(z_action.apply(g, z_action.complex().vertices()[o.representative[0]]));
  bool free_off_line = true;
  for (const auto& o : orbits)
    if (!o.free())
      for (auto v : o.representative) {
        const auto& name = p.slab().vertices()[v];
        free_off_line = free_off_line && delta.count(name.substr(0, name.rfind('@')));
      }
  a.holds = h1 && free_off_line;
  a.detail = std::string("H_1 of windows over Q ") + (h1 ? "vanishes" : "is nonzero") +
             "; non-free cells " + (free_off_line ? "lie over fixed points of Delta" : "leave R x Delta") +
             "; H_2 is stably free and killed by declared 3-cells";
  in.acyclicity = a;
  Subgroup whole(z_action.group().order());
  for (ElementId i = 0; i < whole.size(); ++i) whole[i] = i;
  in.fixed_point_free = fixed_subcomplex(*p.symmetry(), whole).empty();
  return finiteness_report(in);
}

// ---------------------------------------------------------------------------
// dimension bounds

struct DimensionBound {
  std::size_t bound = 0;
  std::string hypothesis;
  std::string citation = kCiteSl;
};

/// A complex on which SL_n(F_p) acts with p-group stabilizers has dimension
/// at least n - 1.
inline DimensionBound dimension_lower_bound(std::size_t n, std::uint64_t p) {
  if (n < 1) throw Error("n must be at least 1");
  if (!is_prime(p)) throw Error("p = " + std::to_string(p) + " is not prime");
  return {n - 1, "SL_" + std::to_string(n) + "(F_" + std::to_string(p) +
                     ") acts with L^P nonempty exactly for p-subgroups P"};
}

}  // namespace ggt
