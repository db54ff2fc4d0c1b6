/**
 * Finite permutation groups with an explicit element table.
 *
 * Elements are permutations of {0..degree-1}, stored as image vectors and
 * composed right to left: (g*h)(x) = g(h(x)). The element list is sorted, so
 * the identity is always element 0 and element indices are canonical for a
 * given element set.
 */
#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "ggt/error.hpp"

namespace ggt {

using Perm = std::vector<std::uint32_t>;
using ElementId = std::uint32_t;
/// A subgroup as the sorted list of its element indices.
using Subgroup = std::vector<ElementId>;

/// Closure bound: GGT_MAX_ELEMENTS if set, else 10,000.
inline std::size_t default_element_bound() {
  if (const char* env = std::getenv("GGT_MAX_ELEMENTS")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0) throw Error(std::string("invalid GGT_MAX_ELEMENTS value '") + env + "'");
    return static_cast<std::size_t>(v);
  }
  return 10000;
}

inline Perm compose(const Perm& g, const Perm& h) {
  Perm out(h.size());
  for (std::size_t x = 0; x < h.size(); ++x) out[x] = g[h[x]];
  return out;
}

inline Perm inverse(const Perm& g) {
  Perm out(g.size());
  for (std::uint32_t x = 0; x < g.size(); ++x) out[g[x]] = x;
  return out;
}

inline Perm identity_perm(std::size_t degree) {
  Perm p(degree);
  std::iota(p.begin(), p.end(), 0u);
  return p;
}

inline bool is_permutation(const Perm& p) {
  std::vector<bool> seen(p.size(), false);
  for (auto x : p) {
    if (x >= p.size() || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

namespace detail {

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto x : p) h = (h ^ x) * 1099511628211ull;
    return h;
  }
};

}  // namespace detail

inline bool is_prime_power(std::uint64_t n) {
  if (n == 1) return true;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    return n == 1;
  }
  return n > 1;
}

class PermGroup {
 public:
  static constexpr std::size_t kTableLimit = 2048;

  PermGroup() : PermGroup(0, {}) {}

  PermGroup(std::size_t degree, std::vector<Perm> generators, std::string name = "",
            std::optional<std::size_t> bound = std::nullopt)
      : degree_(degree), generators_(std::move(generators)), name_(std::move(name)) {
    for (const auto& g : generators_)
      if (g.size() != degree_ || !is_permutation(g))
        throw Error("generator is not a permutation of {0.." + std::to_string(degree_) + "-1}");
    close(bound.value_or(default_element_bound()));
  }

  std::size_t degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return generators_; }
  const std::string& name() const { return name_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Perm>& elements() const { return elements_; }
  const Perm& element(ElementId i) const { return elements_.at(i); }
  static constexpr ElementId identity() { return 0; }

  std::optional<ElementId> find(const Perm& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  ElementId index_of(const Perm& p) const {
    auto i = find(p);
    if (!i) throw Error("permutation is not an element of the group");
    return *i;
  }

  ElementId generator_index(std::size_t i) const { return index_of(generators_.at(i)); }

  ElementId mul(ElementId a, ElementId b) const {
    if (!table_.empty()) return table_[static_cast<std::size_t>(a) * order() + b];
    return index_of(ggt::compose(elements_[a], elements_[b]));
  }

  ElementId inv(ElementId a) const { return inverses_.at(a); }

  ElementId conjugate(ElementId g, ElementId x) const { return mul(mul(g, x), inv(g)); }

  std::size_t element_order(ElementId a) const {
    std::size_t n = 1;
    for (ElementId x = a; x != identity(); x = mul(x, a)) ++n;
    return n;
  }

  /// Conjugacy classes of elements, each sorted, ordered by smallest member.
  const std::vector<std::vector<ElementId>>& conjugacy_classes() const {
    if (classes_.empty() && order() > 0) {
      std::vector<bool> seen(order(), false);
      for (ElementId x = 0; x < order(); ++x) {
        if (seen[x]) continue;
        std::set<ElementId> cls;
        for (ElementId g = 0; g < order(); ++g) cls.insert(conjugate(g, x));
        for (auto y : cls) seen[y] = true;
        classes_.emplace_back(cls.begin(), cls.end());
        for (auto y : cls) class_of_[y] = static_cast<std::uint32_t>(classes_.size() - 1);
      }
    }
    return classes_;
  }

  std::size_t class_of(ElementId x) const {
    conjugacy_classes();
    return class_of_.at(x);
  }

  std::string label() const { return name_.empty() ? "group of order " + std::to_string(order()) : name_; }

 private:
  void close(std::size_t bound) {
    std::unordered_map<Perm, ElementId, detail::PermHash> seen;
    std::vector<Perm> found{identity_perm(degree_)};
    seen.emplace(found.front(), 0);
    for (std::size_t i = 0; i < found.size(); ++i)
      for (const auto& g : generators_) {
        Perm next = ggt::compose(g, found[i]);
        if (seen.count(next)) continue;
        if (found.size() >= bound)
          throw BoundExceeded("group closure exceeds the element bound " + std::to_string(bound) +
                              " (set GGT_MAX_ELEMENTS to raise it)");
        seen.emplace(next, static_cast<ElementId>(found.size()));
        found.push_back(std::move(next));
      }
    std::sort(found.begin(), found.end());
    elements_ = std::move(found);
    for (ElementId i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], i);
    if (order() <= kTableLimit) {
      table_.resize(order() * order());
      for (ElementId a = 0; a < order(); ++a)
        for (ElementId b = 0; b < order(); ++b)
          table_[static_cast<std::size_t>(a) * order() + b] = index_.at(ggt::compose(elements_[a], elements_[b]));
    }
    inverses_.resize(order());
    for (ElementId a = 0; a < order(); ++a) inverses_[a] = index_.at(ggt::inverse(elements_[a]));
    class_of_.assign(order(), 0);
  }

  std::size_t degree_ = 0;
  std::vector<Perm> generators_;
  std::string name_;
  std::vector<Perm> elements_;
  std::unordered_map<Perm, ElementId, detail::PermHash> index_;
  std::vector<ElementId> table_;
  std::vector<ElementId> inverses_;
  mutable std::vector<std::vector<ElementId>> classes_;
  mutable std::vector<std::uint32_t> class_of_;
};

// ---------------------------------------------------------------------------
// subgroups

inline Subgroup generated_subgroup(const PermGroup& g, const std::vector<ElementId>& gens) {
  std::vector<bool> in(g.order(), false);
  std::vector<ElementId> found{PermGroup::identity()};
  in[PermGroup::identity()] = true;
  for (std::size_t i = 0; i < found.size(); ++i)
    for (auto s : gens) {
      ElementId next = g.mul(s, found[i]);
      if (!in[next]) {
        in[next] = true;
        found.push_back(next);
      }
    }
  std::sort(found.begin(), found.end());
  return found;
}

inline bool is_subgroup(const PermGroup& g, const Subgroup& h) {
  if (h.empty() || !std::is_sorted(h.begin(), h.end())) return false;
  if (h.back() >= g.order() || h.front() != PermGroup::identity()) return false;
  std::vector<bool> in(g.order(), false);
  for (auto x : h) in[x] = true;
  for (auto a : h)
    for (auto b : h)
      if (!in[g.mul(a, b)]) return false;
  return true;
}

inline Subgroup conjugate_subgroup(const PermGroup& g, ElementId by, const Subgroup& h) {
  Subgroup out;
  for (auto x : h) out.push_back(g.conjugate(by, x));
  std::sort(out.begin(), out.end());
  return out;
}

inline bool is_normal(const PermGroup& g, const Subgroup& h) {
  for (std::size_t i = 0; i < g.generators().size(); ++i)
    if (conjugate_subgroup(g, g.generator_index(i), h) != h) return false;
  return true;
}

inline bool is_cyclic(const PermGroup& g, const Subgroup& h) {
  for (auto x : h)
    if (g.element_order(x) == h.size()) return true;
  return false;
}

inline bool contains(const Subgroup& big, const Subgroup& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

/// Smallest generating list found greedily (each element adds something).
inline std::vector<ElementId> generators_of(const PermGroup& g, const Subgroup& h) {
  for (auto x : h)
    if (g.element_order(x) == h.size()) return x == PermGroup::identity() ? std::vector<ElementId>{} : std::vector<ElementId>{x};
  std::vector<ElementId> gens;
  Subgroup span{PermGroup::identity()};
  for (auto x : h) {
    if (std::binary_search(span.begin(), span.end(), x)) continue;
    gens.push_back(x);
    span = generated_subgroup(g, gens);
    if (span.size() == h.size()) break;
  }
  return gens;
}

constexpr std::size_t kSubgroupOrderLimit = 120;

inline void require_enumerable(const PermGroup& g) {
  if (g.order() > kSubgroupOrderLimit)
    throw BoundExceeded("subgroup enumeration is limited to groups of order at most " +
                        std::to_string(kSubgroupOrderLimit) + " (got " + std::to_string(g.order()) + ")");
}

/// Every subgroup, by joining cyclic subgroups until nothing new appears.
inline std::vector<Subgroup> all_subgroups(const PermGroup& g) {
  require_enumerable(g);
  std::set<Subgroup> cyclic;
  for (ElementId x = 0; x < g.order(); ++x) cyclic.insert(generated_subgroup(g, {x}));
  std::vector<Subgroup> cyclic_list(cyclic.begin(), cyclic.end());
  std::set<Subgroup> all(cyclic.begin(), cyclic.end());
  std::vector<Subgroup> frontier(cyclic.begin(), cyclic.end());
  while (!frontier.empty()) {
    std::vector<Subgroup> next;
    for (const auto& h : frontier)
      for (const auto& c : cyclic_list) {
        if (contains(h, c)) continue;
        auto gens = generators_of(g, h);
        gens.push_back(c.size() > 1 ? generators_of(g, c).front() : PermGroup::identity());
        auto joined = generated_subgroup(g, gens);
        if (all.insert(joined).second) next.push_back(std::move(joined));
      }
    frontier = std::move(next);
  }
  return {all.begin(), all.end()};
}

struct SubgroupRecord {
  Subgroup representative;  // lexicographically least member of its class
  std::size_t order = 0;
  bool cyclic = false;
  bool normal = false;
  std::size_t class_size = 1;
  std::vector<ElementId> generators;
};

inline Subgroup canonical_conjugate(const PermGroup& g, const Subgroup& h) {
  Subgroup best = h;
  for (ElementId x = 0; x < g.order(); ++x) best = std::min(best, conjugate_subgroup(g, x, h));
  return best;
}

/// One record per conjugacy class of subgroups, sorted by order and then
/// representative.
inline std::vector<SubgroupRecord> subgroup_classes(const PermGroup& g) {
  std::map<Subgroup, std::size_t> class_sizes;
  for (const auto& h : all_subgroups(g)) ++class_sizes[canonical_conjugate(g, h)];
  std::vector<SubgroupRecord> out;
  for (const auto& [rep, size] : class_sizes) {
    SubgroupRecord r;
    r.representative = rep;
    r.order = rep.size();
    r.cyclic = is_cyclic(g, rep);
    r.normal = size == 1;
    r.class_size = size;
    r.generators = generators_of(g, rep);
    out.push_back(std::move(r));
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.order < b.order; });
  return out;
}

inline std::vector<Subgroup> normal_subgroups(const PermGroup& g) {
  std::vector<Subgroup> out;
  for (const auto& h : all_subgroups(g))
    if (is_normal(g, h)) out.push_back(h);
  return out;
}

// ---------------------------------------------------------------------------
// structural predicates

/// The trivial group counts as having prime-power order.
inline bool is_prime_power_order(const PermGroup& g) { return is_prime_power(g.order()); }

namespace detail {

inline std::optional<std::uint64_t> prime_of_power(std::uint64_t n) {
  if (n == 1) return 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    if (n == 1) return p;
    return std::nullopt;
  }
  return n;
}

// Whether upper/lower is cyclic, for normal lower <= upper.
inline bool cyclic_quotient(const PermGroup& g, const Subgroup& upper, const Subgroup& lower) {
  const std::size_t index = upper.size() / lower.size();
  if (index == 1) return true;
  std::vector<ElementId> lower_gens = generators_of(g, lower);
  for (auto x : upper) {
    auto gens = lower_gens;
    gens.push_back(x);
    if (generated_subgroup(g, gens).size() == upper.size()) return true;
  }
  return false;
}

}  // namespace detail

struct PcqTower {
  Subgroup p_part;       // P, normal p-subgroup
  Subgroup cyclic_part;  // P', normal, P'/P cyclic, G/P' a q-group
};

/// Normal P <= P' of G with P a p-group, P'/P cyclic and G/P' a q-group.
inline std::optional<PcqTower> find_pcq_tower(const PermGroup& g) {
  auto normals = normal_subgroups(g);
  for (const auto& p : normals) {
    if (!is_prime_power(p.size())) continue;
    for (const auto& pp : normals) {
      if (!contains(pp, p) || !is_prime_power(g.order() / pp.size())) continue;
      if (detail::cyclic_quotient(g, pp, p)) return PcqTower{p, pp};
    }
  }
  return std::nullopt;
}

inline bool has_pcq_tower(const PermGroup& g) { return find_pcq_tower(g).has_value(); }

/// A normal cyclic subgroup with quotient of prime-power order.
inline std::optional<Subgroup> find_cyclic_by_p_tower(const PermGroup& g) {
  for (const auto& c : normal_subgroups(g))
    if (is_cyclic(g, c) && is_prime_power(g.order() / c.size())) return c;
  return std::nullopt;
}

inline bool has_cyclic_by_p_tower(const PermGroup& g) { return find_cyclic_by_p_tower(g).has_value(); }

// ---------------------------------------------------------------------------
// named groups

namespace groups {

inline PermGroup trivial() { return PermGroup(1, {}, "1"); }

inline Perm cycle_perm(std::size_t n) {
  Perm p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<std::uint32_t>((i + 1) % n);
  return p;
}

inline PermGroup cyclic(std::size_t n) {
  if (n == 0) throw Error("cyclic group order must be positive");
  if (n == 1) return PermGroup(1, {}, "C1");
  return PermGroup(n, {cycle_perm(n)}, "C" + std::to_string(n));
}

/// Dihedral group of order 2n acting on an n-gon (n >= 3).
inline PermGroup dihedral(std::size_t n) {
  if (n < 3) throw Error("dihedral group needs n >= 3");
  Perm flip(n);
  for (std::size_t i = 0; i < n; ++i) flip[i] = static_cast<std::uint32_t>((n - i) % n);
  return PermGroup(n, {cycle_perm(n), flip}, "D" + std::to_string(n));
}

inline PermGroup symmetric(std::size_t n) {
  if (n < 2) return PermGroup(1, {}, "S1");
  Perm swap = identity_perm(n);
  std::swap(swap[0], swap[1]);
  if (n == 2) return PermGroup(2, {swap}, "S2");
  return PermGroup(n, {swap, cycle_perm(n)}, "S" + std::to_string(n));
}

inline PermGroup alternating(std::size_t n) {
  if (n < 3) return PermGroup(1, {}, "A" + std::to_string(n));
  std::vector<Perm> gens;
  for (std::size_t k = 2; k < n; ++k) {
    Perm c = identity_perm(n);
    c[0] = 1;
    c[1] = static_cast<std::uint32_t>(k);
    c[k] = 0;
    gens.push_back(c);
  }
  return PermGroup(n, gens, "A" + std::to_string(n));
}

/// Quaternion group acting regularly on 8 points.
inline PermGroup quaternion() {
  // elements 1,i,j,k,-1,-i,-j,-k numbered 0..7; left multiplication by i and j
  Perm li{1, 4, 3, 6, 5, 0, 7, 2};
  Perm lj{2, 7, 4, 1, 6, 3, 0, 5};
  return PermGroup(8, {li, lj}, "Q8");
}

inline PermGroup klein_four() { return PermGroup(4, {{1, 0, 3, 2}, {2, 3, 0, 1}}, "C2xC2"); }

/// Look up a group by name: 1, C<n>, D<n>, S<n>, A<n>, Q8, C2xC2 (alias V4).
inline PermGroup by_name(const std::string& name) {
  auto number = [&](std::size_t from) -> std::size_t {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(name.substr(from), &used);
    } catch (const std::exception&) {
      throw Error("unknown group '" + name + "'");
    }
    if (used + from != name.size()) throw Error("unknown group '" + name + "'");
    return v;
  };
  if (name == "1" || name == "trivial") return trivial();
  if (name == "Q8") return quaternion();
  if (name == "C2xC2" || name == "V4") return klein_four();
  if (name.size() >= 2) {
    switch (name[0]) {
      case 'C': return cyclic(number(1));
      case 'D': return dihedral(number(1));
      case 'S': return symmetric(number(1));
      case 'A': return alternating(number(1));
      default: break;
    }
  }
  throw Error("unknown group '" + name + "'");
}

/// The fixture catalog: C2..C12, D4..D6, Q8, C2xC2, S3, A4, S4.
inline std::vector<PermGroup> catalog() {
  std::vector<PermGroup> out;
  for (std::size_t n = 2; n <= 12; ++n) out.push_back(cyclic(n));
  for (std::size_t n = 4; n <= 6; ++n) out.push_back(dihedral(n));
  out.push_back(quaternion());
  out.push_back(klein_four());
  out.push_back(symmetric(3));
  out.push_back(alternating(4));
  out.push_back(symmetric(4));
  return out;
}

}  // namespace groups

}  // namespace ggt
