// Acceptance runner: one PASS/FAIL line per criterion.
//
//   ggt_acceptance        run all criteria
//   ggt_acceptance 4 11   run only criteria 4 and 11

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ggt/ggt.hpp"
#include "gluings.hpp"
#include "oracles.hpp"

using namespace ggt;
namespace fx = ggt::fixtures;

namespace {

// Collects failed expectations; a criterion passes when none were recorded.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  template <class A, class B>
  void equal(const A& actual, const B& expected, const std::string& what) {
    if (actual == expected) return;
    std::ostringstream s;
    s << what << ": got " << show(actual) << ", expected " << show(expected);
    failures_.push_back(s.str());
  }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  template <class T>
  static std::string show(const T& v) {
    std::ostringstream s;
    if constexpr (requires { s << v; }) {
      s << v;
    } else if constexpr (requires { v.to_string(); }) {
      s << v.to_string();
    } else if constexpr (requires { v.level_cells; }) {
      s << show(v.cube_orbits) << "/" << show(v.level_cells);
    } else {
      s << "(";
      bool first = true;
      for (const auto& x : v) {
        s << (first ? "" : ",") << x;
        first = false;
      }
      s << ")";
    }
    return s.str();
  }

  std::vector<std::string> failures_;
};

using Sizes = std::vector<std::size_t>;

bool prime_power_order(std::size_t n) {
  std::size_t p = 2;
  while (n % p != 0) ++p;
  while (n % p == 0) n /= p;
  return n == 1;
}

HomologyProfile reduced(const SimplicialComplex& k, const Coefficients& r) { return reduced_homology(k, r); }

// --------------------------------------------------------------------------

void flag_machinery(Check& c) {
  auto f = is_flag(fx::simplex_boundary(2));
  c.expect(!f.flag, "hollow 3-cycle accepted as flag");
  c.equal(f.witness, NamedSimplex{"a", "b", "c"}, "hollow 3-cycle witness");
  std::size_t checked = 0;
  for (const auto& [name, k] : fx::catalog()) {
    const auto sd = barycentric_subdivision(k);
    c.expect(is_flag(sd).flag, "Sd(" + name + ") not flag");
    if (sd.vertex_count() <= 20)
      c.expect(oracle::non_flag_witness(sd).empty(), "oracle finds a non-flag clique in Sd(" + name + ")");
    ++checked;
  }
  c.expect(checked >= 20, "fewer than 20 fixtures subdivided");
}

void homology_engine(Check& c) {
  for (const auto& ring : {Coefficients::integers(), Coefficients::rationals(), Coefficients::prime_field(2),
                           Coefficients::prime_field(3)})
    for (std::size_t n = 1; n <= 5; ++n) {
      auto h = reduced(fx::simplex_boundary(n), ring);
      for (std::size_t d = 0; d < n; ++d) {
        HomologyGroup expected;
        expected.rank = d + 1 == n ? 1 : 0;
        c.equal(h[d], expected,
                "H~_" + std::to_string(d) + "(boundary of simplex " + std::to_string(n) + "; " + ring.name() + ")");
      }
    }
  const auto rp2 = fx::projective_plane();
  c.equal(homology(rp2, Coefficients::rationals()).betti(), Sizes{1, 0, 0}, "RP2 over Q");
  c.equal(homology(rp2, Coefficients::prime_field(2)).betti(), Sizes{1, 1, 1}, "RP2 over F2");
  c.equal(homology(rp2, Coefficients::integers())[1].to_string(), std::string("Z/2"), "H_1(RP2; Z)");

  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<int> shape(1, 4), entry(-6, 6);
  for (int trial = 0; trial < 500; ++trial) {
    oracle::Dense a(static_cast<std::size_t>(shape(rng)), std::vector<long long>(static_cast<std::size_t>(shape(rng))));
    for (auto& row : a)
      for (auto& x : row) x = entry(rng);
    auto d = smith_normal_form(IntegerMatrix::from_dense(a));
    for (std::size_t i = 0; i + 1 < d.size(); ++i)
      c.expect(d[i] > 0 && d[i + 1] % d[i] == 0, "SNF divisibility chain broken in trial " + std::to_string(trial));
    // d_1 ... d_k equals the gcd of the k x k minors
    BigInt product = 1;
    const std::size_t kmax = std::min(a.size(), a[0].size());
    for (std::size_t k = 1; k <= kmax; ++k) {
      const BigInt g = oracle::minor_gcd(a, k);
      if (k <= d.size()) {
        product *= d[k - 1];
        c.expect(product == g, "SNF product disagrees with minors in trial " + std::to_string(trial));
      } else {
        c.expect(g == 0, "SNF rank too small in trial " + std::to_string(trial));
      }
    }
  }
}

void level_census_criterion(Check& c) {
  std::vector<std::pair<std::string, SimplicialComplex>> ls{{"point", fx::points(1)},
                                                            {"edge", fx::simplex(1)},
                                                            {"triangle", fx::simplex(2)},
                                                            {"hexagon", fx::hexagon()},
                                                            {"Sd(triangle)", barycentric_subdivision(fx::simplex(2))}};
  for (const auto& [name, l] : ls) {
    auto formula = level_census(l);
    for (std::size_t n = 1; n < formula.cube_orbits.size(); ++n)
      c.equal(formula.level_cells[n - 1], n * formula.cube_orbits[n], name + " levelCells(" + std::to_string(n - 1) + ")");
    c.equal(formula.cube_orbits, [&] {
      Sizes s{1};
      for (auto x : oracle::face_counts(l)) s.push_back(x);
      return s;
    }(), name + " cube orbits against simplex count");
    c.equal(enumerate_level_census(l, Rational(1, 2)), formula, name + " enumerated census at height 1/2");
  }
}

void links_criterion(Check& c) {
  for (const auto& l : {fx::points(1), fx::simplex(1), fx::simplex(2), fx::hexagon(), barycentric_subdivision(fx::simplex(2))}) {
    const auto link = vertex_link_XL(l);
    c.expect(link == double_complex(l), "vertex link differs from the double");
    c.expect(isomorphic(ascending_link(l), l), "ascending link not isomorphic to L");
    c.expect(isomorphic(descending_link(l), l), "descending link not isomorphic to L");
  }
  const auto s = double_complex(fx::simplex(2));
  c.equal(s.face_vector(), Sizes{6, 12, 8}, "face vector of the double of a triangle");
  c.expect(isomorphic(s, fx::octahedron()), "double of a triangle is not the octahedron boundary");
}

void recipe_criterion(Check& c) {
  for (const auto& q : groups::catalog()) {
    auto r = degree_zero_recipe(q);
    const bool prime_power = prime_power_order(q.order());
    c.expect(r.has_value() != prime_power, q.label() + ": recipe feasibility should be the negation of prime-power order");
    if (!r) continue;
    BigInt rhs = 1;
    for (const auto& t : r->terms) {
      c.expect(t.index > 1, q.label() + ": recipe uses Q itself");
      c.equal(t.index * t.subgroup.order, q.order(), q.label() + ": index");
      rhs += BigInt(t.multiplicity) * t.index;
    }
    c.equal(BigInt(q.order()) * r->free_count, rhs, q.label() + ": |Q| n = 1 + sum m_P |Q:P|");
  }
}

SimplicialMap endomap(const SimplicialComplex& k, std::map<VertexId, VertexId> images) {
  for (const auto& v : k.vertices()) images.try_emplace(v, v);
  return SimplicialMap(k, k, images);
}

void telescope_criterion(Check& c) {
  const auto s2 = fx::simplex_boundary(3);
  std::map<VertexId, VertexId> constant;
  for (const auto& v : s2.vertices()) constant[v] = "c";
  const std::vector<std::pair<SimplicialMap, long>> maps{
      {endomap(s2, {}), 1}, {endomap(s2, {{"a", "b"}, {"b", "a"}}), -1}, {endomap(s2, constant), 0}};
  for (const auto& [f, degree] : maps) {
    c.equal(induced_degree(f), BigInt(degree), "induced degree");
    auto p = telescope(f);
    for (long k = 0; k < 3; ++k)
      c.equal(stage_inclusion_multiplier(p, k), Rational(degree), "stage inclusion on top homology");
    if (degree == 0) {
      // window [0, 1] has the top sphere of stage 1 only; the stage-0 sphere dies in it
      auto w = window(p, 0, 1);
      c.equal(reduced(w, Coefficients::integers())[2].rank, std::size_t{1}, "window keeps the top end's sphere");
      c.equal(oracle::trimmed(oracle::betti(w)), Sizes{1, 0, 1}, "oracle betti of the degree-0 window");
    }
  }
}

void oliver_criterion(Check& c) {
  c.expect(has_pcq_tower(groups::symmetric(3)), "S3 has a pcq tower");
  c.expect(has_pcq_tower(groups::symmetric(4)), "S4 has a pcq tower");
  for (const auto& g : groups::catalog())
    if (prime_power_order(g.order())) c.expect(has_pcq_tower(g), g.label() + " (prime power) has a pcq tower");
  c.expect(!has_pcq_tower(groups::alternating(5)), "A5 has no pcq tower");
  c.expect(!has_cyclic_by_p_tower(groups::alternating(4)), "A4 is not cyclic-by-p");
}

void conjugacy_criterion(Check& c) {
  std::map<VertexId, VertexId> rot{{"a", "c"}, {"b", "d"}, {"c", "e"}, {"d", "f"}, {"e", "a"}, {"f", "b"}};
  std::map<VertexId, VertexId> ref{{"a", "a"}, {"b", "f"}, {"c", "e"}, {"d", "d"}, {"e", "c"}, {"f", "b"}};
  auto verdict = [](const GroupComplexAction& a, std::size_t order) {
    auto r = conjugacy_report(a);
    auto e = r.find(order, a.group().label());
    return e ? e->verdict_text() : std::string("missing");
  };
  c.equal(verdict(GroupComplexAction(groups::cyclic(3), fx::hexagon(), {rot}), 3), std::string("INFINITE"),
          "hexagon with C3 rotation");
  c.equal(verdict(GroupComplexAction(groups::cyclic(2), fx::simplex(1), {{{"a", "b"}, {"b", "a"}}}), 2),
          std::string("BOUND(2)"), "edge with C2 swap");
  c.equal(verdict(GroupComplexAction(groups::cyclic(2), fx::hexagon(), {ref}), 2), std::string("SINGLE"),
          "hexagon with C2 reflection through vertices");
}

void hnn_criterion(Check& c) {
  const auto one = hnn_presentation(periodic_line(1));
  const auto two = hnn_presentation(periodic_path(2, 1));
  std::size_t targets = 0;
  std::vector<PermGroup> ts{groups::trivial()};
  for (auto& g : groups::catalog())
    if (g.order() <= 8) ts.push_back(g);
  ts.push_back(groups::dihedral(3));
  for (const auto& t : ts) {
    c.equal(count_homs(one, t), count_homs(two, t), "Hom(G, " + t.label() + ") from 1-edge and 2-edge slabs");
    ++targets;
  }
  c.expect(targets >= 10, "too few targets");
  c.equal(count_homs(raag_presentation(fx::simplex(1)), groups::symmetric(3)), std::uint64_t{18}, "Hom(Z^2, S3)");
}

void npc_criterion(Check& c) {
  std::size_t passed = 0;
  for (const auto& g : gluings::valid()) {
    auto vl = glued_link(g.m, g.n0, g.n1, g.gamma);
    auto cert = npc_certificate(vl);
    c.expect(cert.flag, g.name + ": glued link not flag");
    if (vl.link.vertex_count() <= 20)
      c.expect(oracle::non_flag_witness(vl.link).empty(), g.name + ": oracle finds a non-flag clique");
    passed += cert.flag;
  }
  c.expect(passed >= 10, "fewer than 10 gluings certified");
  auto planted = npc_certificate(fx::simplex_boundary(2));
  c.expect(!planted.flag, "planted non-flag link accepted");
  c.equal(planted.witness, NamedSimplex{"a", "b", "c"}, "planted witness");
}

void flag_quotient_criterion(Check& c) {
  const auto line = periodic_line(1);
  c.equal(min_flag_quotient_period(line), 4L, "min flag quotient period of the line");
  auto q3 = quotient_by_shift(line, 3);
  c.expect(q3.complex.has_value() && !is_flag(*q3.complex).flag, "quotient by 3 should be a non-flag 3-cycle");
  auto q4 = quotient_by_shift(line, 4);
  c.expect(q4.complex.has_value() && is_flag(*q4.complex).flag, "quotient by 4 should be a flag 4-cycle");
}

void sl_criterion(Check& c) {
  const std::vector<std::tuple<std::size_t, std::int64_t, std::size_t>> cases{{2, 2, 6}, {2, 3, 24}, {3, 2, 168}};
  for (const auto& [n, p, order] : cases) {
    const auto g = sl_tau_generators(n, p);
    const std::string tag = "SL_" + std::to_string(n) + "(F_" + std::to_string(p) + ")";
    c.equal(matrix_group_order(g), order, tag + " order");
    for (std::size_t mask = 0; mask + 1 < (std::size_t{1} << n); ++mask) {
      std::vector<std::size_t> which;
      for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1) which.push_back(i);
      auto sub = matrix_group_order(g, which);
      while (sub % static_cast<std::size_t>(p) == 0) sub /= static_cast<std::size_t>(p);
      c.equal(sub, std::size_t{1}, tag + " proper subset order is a power of p");
    }
  }
}

// Cyclic subgroups up to conjugacy, by direct enumeration of permutations.
std::size_t cyclic_class_count(const PermGroup& g) {
  const auto& els = g.elements();
  auto power_set = [&](const Perm& x) {
    std::set<Perm> s;
    Perm y = identity_perm(x.size());
    do {
      s.insert(y);
      y = compose(x, y);
    } while (!s.count(y));
    return s;
  };
  std::set<std::set<Perm>> subgroups;
  for (const auto& x : els) subgroups.insert(power_set(x));
  std::set<std::set<Perm>> classes;
  for (const auto& h : subgroups) {
    std::set<std::set<Perm>> orbit;
    for (const auto& y : els) {
      std::set<Perm> conj;
      for (const auto& z : h) conj.insert(compose(compose(y, z), inverse(y)));
      orbit.insert(conj);
    }
    classes.insert(*orbit.begin());
  }
  return classes.size();
}

void ktheory_criterion(Check& c) {
  c.equal(cyclic_class_count(groups::cyclic(6)), std::size_t{4}, "oracle count for C6");
  c.equal(cyclic_class_count(groups::symmetric(3)), std::size_t{3}, "oracle count for S3");
  for (const auto& g : {groups::cyclic(6), groups::symmetric(3), groups::klein_four()}) {
    const auto w = k0_rank_lower_bound(g);
    c.equal(w.rank, cyclic_class_count(g), g.label() + " K_0 rank lower bound");
    c.equal(w.subgroups.size(), w.rank, g.label() + " witness rows independent");
  }
}

void join_criterion(Check& c) {
  const auto s3 = groups::symmetric(3);
  auto named = [](const std::string& prefix, std::size_t n) {
    std::vector<VertexId> v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(prefix + std::to_string(i));
    return SimplicialComplex::from_maximal_simplices(v, {});
  };
  const auto z = join(join(named("q", 6), named("r", 6)), named("d", 2));
  c.equal(homology(z, Coefficients::rationals()).betti(), Sizes{1, 0, 25}, "betti numbers over Q");
  c.equal(oracle::trimmed(oracle::betti(z)), Sizes{1, 0, 25}, "oracle betti numbers");

  // left multiplication on the two regular copies, the sign on S3/C3
  std::vector<std::map<VertexId, VertexId>> images;
  for (std::size_t i = 0; i < s3.generators().size(); ++i) {
    const ElementId g = s3.generator_index(i);
    std::map<VertexId, VertexId> m;
    for (ElementId x = 0; x < s3.order(); ++x) {
      m["q" + std::to_string(x)] = "q" + std::to_string(s3.mul(g, x));
      m["r" + std::to_string(x)] = "r" + std::to_string(s3.mul(g, x));
    }
    const bool odd = s3.element_order(g) == 2;
    m["d0"] = odd ? "d1" : "d0";
    m["d1"] = odd ? "d0" : "d1";
    images.push_back(m);
  }
  GroupComplexAction action(s3, z, images);
  for (const auto& o : simplex_orbits(action))
    if (o.dimension >= 1) c.expect(o.free(), "non-free orbit of positive dimension");
}

struct Criterion {
  int number;
  std::string title;
  std::function<void(Check&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {1, "flag machinery", flag_machinery},
      {2, "homology engine", homology_engine},
      {3, "level census", level_census_criterion},
      {4, "links of X_L", links_criterion},
      {5, "degree-zero recipe iff not prime power", recipe_criterion},
      {6, "telescope degree action", telescope_criterion},
      {7, "Oliver obstructions", oliver_criterion},
      {8, "conjugacy classification", conjugacy_criterion},
      {9, "HNN and amalgam evidence", hnn_criterion},
      {10, "NPC certificates", npc_criterion},
      {11, "flag quotients", flag_quotient_criterion},
      {12, "SL_n(F_p) generators", sl_criterion},
      {13, "K-theory ranks", ktheory_criterion},
      {14, "join and acyclicity", join_criterion},
  };
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));

  int failed = 0;
  for (const auto& cr : criteria) {
    if (!only.empty() && !only.count(cr.number)) continue;
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      cr.run(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = check.failures().empty();
    failed += !ok;
    std::printf("%s %2d %s (%.2f s)\n", ok ? "PASS" : "FAIL", cr.number, cr.title.c_str(), secs);
    for (const auto& f : check.failures()) std::printf("     %s\n", f.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
