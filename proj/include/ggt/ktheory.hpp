/**
 * Rational group algebras of finite groups, Hattori-Stallings traces and the
 * lower bound on the rank of K_0(QG) coming from cyclic subgroups.
 */
#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "ggt/linear_algebra.hpp"
#include "ggt/perm_group.hpp"

namespace ggt {

using GroupPtr = std::shared_ptr<const PermGroup>;

inline GroupPtr share(PermGroup g) { return std::make_shared<const PermGroup>(std::move(g)); }

/// An element of QG with finite support; zero coefficients are never stored.
class GroupAlgebraElement {
 public:
  explicit GroupAlgebraElement(GroupPtr group, std::map<ElementId, Rational> coefficients = {})
      : group_(std::move(group)) {
    if (!group_) throw Error("group algebra element without a group");
    for (auto& [g, c] : coefficients) {
      if (g >= group_->order()) throw Error("coefficient on an element outside the group");
      if (c != 0) coeffs_.emplace(g, c);
    }
  }

  static GroupAlgebraElement identity(GroupPtr group) {
    return GroupAlgebraElement(std::move(group), {{PermGroup::identity(), Rational(1)}});
  }
  static GroupAlgebraElement zero(GroupPtr group) { return GroupAlgebraElement(std::move(group)); }
  static GroupAlgebraElement basis(GroupPtr group, ElementId g, Rational c = 1) {
    return GroupAlgebraElement(std::move(group), {{g, std::move(c)}});
  }

  const PermGroup& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  const std::map<ElementId, Rational>& coefficients() const { return coeffs_; }
  Rational operator[](ElementId g) const {
    auto it = coeffs_.find(g);
    return it == coeffs_.end() ? Rational(0) : it->second;
  }
  bool is_zero() const { return coeffs_.empty(); }

  friend GroupAlgebraElement operator+(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    a.require_same(b);
    auto c = a.coeffs_;
    for (const auto& [g, x] : b.coeffs_) c[g] += x;
    return GroupAlgebraElement(a.group_, std::move(c));
  }

  friend GroupAlgebraElement operator*(const Rational& s, const GroupAlgebraElement& a) {
    auto c = a.coeffs_;
    for (auto& [g, x] : c) x *= s;
    return GroupAlgebraElement(a.group_, std::move(c));
  }

  /// Convolution: (sum a_g g)(sum b_h h) = sum a_g b_h gh.
  friend GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    a.require_same(b);
    std::map<ElementId, Rational> c;
    for (const auto& [g, x] : a.coeffs_)
      for (const auto& [h, y] : b.coeffs_) c[a.group_->mul(g, h)] += x * y;
    return GroupAlgebraElement(a.group_, std::move(c));
  }

  friend bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    return a.same_group(b) && a.coeffs_ == b.coeffs_;
  }

  bool same_group(const GroupAlgebraElement& o) const {
    return group_ == o.group_ || group_->elements() == o.group_->elements();
  }

 private:
  void require_same(const GroupAlgebraElement& o) const {
    if (!same_group(o)) throw Error("group algebra elements over different groups");
  }

  GroupPtr group_;
  std::map<ElementId, Rational> coeffs_;
};

inline GroupAlgebraElement multiply(const GroupAlgebraElement& a, const GroupAlgebraElement& b) { return a * b; }

inline bool is_idempotent(const GroupAlgebraElement& a) { return a * a == a; }

/// Rational-valued function on conjugacy classes, indexed like
/// PermGroup::conjugacy_classes().
struct ClassFunction {
  GroupPtr group;
  std::vector<Rational> values;

  Rational at_element(ElementId g) const { return values.at(group->class_of(g)); }
  friend bool operator==(const ClassFunction& a, const ClassFunction& b) { return a.values == b.values; }
};

using GroupAlgebraMatrix = std::vector<std::vector<GroupAlgebraElement>>;

inline GroupAlgebraMatrix multiply(const GroupAlgebraMatrix& a, const GroupAlgebraMatrix& b) {
  if (a.empty() || b.empty() || a.front().size() != b.size()) throw Error("matrix shapes do not compose");
  const auto& group = a.front().front().group_ptr();
  GroupAlgebraMatrix c(a.size(), std::vector<GroupAlgebraElement>(b.front().size(), GroupAlgebraElement::zero(group)));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.front().size(); ++j)
      for (std::size_t k = 0; k < b.size(); ++k) c[i][j] = c[i][j] + a[i][k] * b[k][j];
  return c;
}

/// Sum of the diagonal, with the coefficients of conjugate elements added up.
inline ClassFunction hs_trace(const GroupAlgebraMatrix& m) {
  if (m.empty()) throw Error("trace of an empty matrix");
  for (const auto& row : m)
    if (row.size() != m.size()) throw Error("trace of a non-square matrix");
  const auto& group = m.front().front().group_ptr();
  ClassFunction t{group, std::vector<Rational>(group->conjugacy_classes().size(), Rational(0))};
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (!m[i][i].same_group(m.front().front())) throw Error("matrix entries over different groups");
    for (const auto& [g, c] : m[i][i].coefficients()) t.values[group->class_of(g)] += c;
  }
  return t;
}

inline ClassFunction hs_trace(const GroupAlgebraElement& a) { return hs_trace(GroupAlgebraMatrix{{a}}); }

/// e_C = (1/|C|) sum_{g in C} g for a cyclic subgroup C.
inline GroupAlgebraElement cyclic_idempotent(const GroupPtr& g, const Subgroup& c) {
  if (!is_subgroup(*g, c)) throw Error("the given element set is not a subgroup");
  if (!is_cyclic(*g, c)) throw Error("the subgroup is not cyclic");
  std::map<ElementId, Rational> coeffs;
  for (auto x : c) coeffs[x] = Rational(1, static_cast<long>(c.size()));
  return GroupAlgebraElement(g, std::move(coeffs));
}

/// Cyclic subgroups <x> up to conjugacy, each as its least conjugate, sorted
/// by order and then by elements.
inline std::vector<Subgroup> cyclic_subgroup_classes(const PermGroup& g) {
  std::set<Subgroup> reps;
  for (ElementId x = 0; x < g.order(); ++x) reps.insert(canonical_conjugate(g, generated_subgroup(g, {x})));
  std::vector<Subgroup> out(reps.begin(), reps.end());
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
  return out;
}

struct K0RankWitness {
  std::size_t rank = 0;
  std::vector<Subgroup> subgroups;  // one cyclic subgroup per conjugacy class
  std::vector<ClassFunction> rows;  // hs_trace(e_C) for each of them
};

/// The traces of the idempotents e_C over cyclic-subgroup classes are linearly
/// independent, so [QG e_C] span a free abelian subgroup of K_0(QG) of this rank.
inline K0RankWitness k0_rank_lower_bound(const GroupPtr& g) {
  if (g->order() > kSubgroupOrderLimit)
    throw BoundExceeded("K_0 rank witness needs |G| <= " + std::to_string(kSubgroupOrderLimit));
  K0RankWitness w;
  w.subgroups = cyclic_subgroup_classes(*g);
  IntegerMatrix m(w.subgroups.size(), g->conjugacy_classes().size());
  for (std::size_t r = 0; r < w.subgroups.size(); ++r) {
    w.rows.push_back(hs_trace(cyclic_idempotent(g, w.subgroups[r])));
    for (std::size_t c = 0; c < w.rows.back().values.size(); ++c) {
      // entries are multiples of 1/|C|, so scaling by |G| clears denominators
      const Rational scaled = w.rows.back().values[c] * static_cast<long>(g->order());
      if (denominator(scaled) != 1) throw Error("internal: trace entry not cleared by |G|");
      if (scaled != 0) m.set(r, c, numerator(scaled));
    }
  }
  w.rank = rank_over_rationals(m);
  return w;
}

inline K0RankWitness k0_rank_lower_bound(const PermGroup& g) { return k0_rank_lower_bound(share(g)); }

}  // namespace ggt
