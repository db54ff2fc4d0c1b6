#include <gtest/gtest.h>

#include <random>

#include "ggt/fixtures.hpp"
#include "ggt/homology.hpp"
#include "oracles.hpp"

using namespace ggt;
namespace fx = ggt::fixtures;

namespace {

std::vector<BigInt> ints(std::initializer_list<long long> xs) {
  std::vector<BigInt> out;
  for (auto x : xs) out.emplace_back(x);
  return out;
}

oracle::Dense random_sparse(std::mt19937_64& rng, std::size_t rows, std::size_t cols, double density) {
  std::uniform_real_distribution<double> coin(0, 1);
  std::uniform_int_distribution<long long> value(-9, 9);
  oracle::Dense d(rows, std::vector<long long>(cols, 0));
  for (auto& row : d)
    for (auto& x : row)
      if (coin(rng) < density) x = value(rng);
  return d;
}

}  // namespace

TEST(SmithNormalForm, Examples) {
  EXPECT_EQ(smith_normal_form(IntegerMatrix::from_dense({{2, 4}, {4, 2}})), ints({2, 6}));
  EXPECT_EQ(smith_normal_form(IntegerMatrix::from_dense({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})), ints({1, 1, 1}));
  EXPECT_TRUE(smith_normal_form(IntegerMatrix(3, 4)).empty());
}

TEST(SmithNormalForm, DivisibilityAndRankOnRandomMatrices) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    std::size_t rows = 1 + rng() % 30, cols = 1 + rng() % 30;
    auto dense = random_sparse(rng, rows, cols, 0.15);
    auto d = smith_normal_form(IntegerMatrix::from_dense(dense));
    for (std::size_t i = 0; i < d.size(); ++i) {
      EXPECT_GT(d[i], 0);
      if (i + 1 < d.size()) {
        EXPECT_EQ(d[i + 1] % d[i], 0);
      }
    }
    EXPECT_EQ(d.size(), oracle::dense_rank(oracle::to_rational(dense)));
    EXPECT_EQ(d.size(), rank_over_rationals(IntegerMatrix::from_dense(dense)));
  }
}

TEST(SmithNormalForm, ProductsMatchMinorGcds) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 4;
    auto dense = random_sparse(rng, rows, cols, 0.7);
    auto d = smith_normal_form(IntegerMatrix::from_dense(dense));
    BigInt product = 1;
    for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
      BigInt g = oracle::minor_gcd(dense, k);
      if (k <= d.size()) {
        product *= d[k - 1];
        EXPECT_EQ(product, g);
      } else {
        EXPECT_EQ(g, 0);
      }
    }
  }
}

TEST(Coefficients, ParsesAndRejectsComposite) {
  EXPECT_EQ(Coefficients::parse("F3").characteristic(), 3);
  EXPECT_EQ(Coefficients::parse("Q"), Coefficients::rationals());
  EXPECT_THROW(Coefficients::prime_field(4), Error);
  EXPECT_THROW(Coefficients::parse("F"), Error);
  EXPECT_THROW(Coefficients::parse("R"), Error);
}

TEST(Homology, SphereOverIntegers) {
  auto h = homology(fx::simplex_boundary(3), Coefficients::integers());
  ASSERT_EQ(h.groups.size(), 3u);
  EXPECT_EQ(h[0].rank, 1u);
  EXPECT_TRUE(h[1].trivial());
  EXPECT_EQ(h[2].rank, 1u);
}

TEST(Homology, SpheresOverAllRings) {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (auto ring : {Coefficients::integers(), Coefficients::rationals(), Coefficients::prime_field(2),
                      Coefficients::prime_field(3)}) {
      auto h = reduced_homology(fx::simplex_boundary(n), ring);
      for (std::size_t d = 0; d < n; ++d) {
        EXPECT_EQ(h[d].rank, d == n - 1 ? 1u : 0u) << n << " " << ring.name();
        EXPECT_TRUE(h[d].torsion.empty());
      }
    }
  }
}

TEST(Homology, ProjectivePlaneSeparatesQandF2) {
  auto rp2 = fx::projective_plane();
  EXPECT_EQ(rp2.face_vector(), (std::vector<std::size_t>{6, 15, 10}));
  EXPECT_EQ(homology(rp2, Coefficients::prime_field(2))[1].rank, 1u);
  EXPECT_EQ(homology(rp2, Coefficients::rationals())[1].rank, 0u);
  auto z = homology(rp2, Coefficients::integers());
  EXPECT_EQ(z[1].torsion, ints({2}));
  EXPECT_EQ(z[2].rank, 0u);
  // SNF oracle: the 10x15 boundary has minor gcd pattern ending in 2
  auto d2 = oracle::boundary(rp2, 2);
  EXPECT_EQ(smith_normal_form(IntegerMatrix::from_dense(d2)).back(), 2);
  EXPECT_TRUE(is_acyclic(rp2, Coefficients::rationals()));
  EXPECT_FALSE(is_acyclic(rp2, Coefficients::prime_field(2)));
}

TEST(Homology, TorusOverIntegers) {
  auto h = homology(fx::torus(), Coefficients::integers());
  EXPECT_EQ(h.betti(), (std::vector<std::size_t>{1, 2, 1}));
}

TEST(Homology, ConesAreAcyclic) {
  for (const auto& [name, k] : fx::catalog()) {
    auto c = fx::cone_over(k);
    for (auto ring : {Coefficients::integers(), Coefficients::rationals(), Coefficients::prime_field(2)})
      EXPECT_TRUE(is_acyclic(c, ring)) << name;
  }
}

TEST(Homology, SimplicesAcyclicAndSphereNot) {
  for (std::size_t n = 0; n <= 4; ++n)
    for (auto ring : {Coefficients::integers(), Coefficients::rationals(), Coefficients::prime_field(5)})
      EXPECT_TRUE(is_acyclic(fx::simplex(n), ring));
  EXPECT_FALSE(is_acyclic(fx::simplex_boundary(3), Coefficients::integers()));
  EXPECT_FALSE(is_acyclic(SimplicialComplex(), Coefficients::integers()));
}

TEST(Homology, BettiNumbersMatchDenseOracle) {
  for (const auto& [name, k] : fx::catalog()) {
    EXPECT_EQ(homology(k, Coefficients::rationals()).betti(), oracle::betti(k)) << name;
    EXPECT_EQ(homology(k, Coefficients::prime_field(2)).betti(), oracle::betti(k, 2)) << name;
    EXPECT_EQ(homology(k, Coefficients::integers()).betti(), oracle::betti(k)) << name;
  }
}

TEST(Homology, RationalRankEqualsSnfLength) {
  for (const auto& [name, k] : fx::catalog())
    for (int d = 1; d <= k.dimension(); ++d) {
      auto m = boundary_matrix(k, d);
      EXPECT_EQ(rank_over_rationals(m), smith_normal_form(m).size()) << name;
    }
}

TEST(Euler, Examples) {
  EXPECT_EQ(euler_characteristic(fx::points(1)), 1);
  EXPECT_EQ(euler_characteristic(fx::hexagon()), 0);
  for (const auto& [name, k] : fx::catalog()) {
    long long alt = 0, sign = 1;
    for (auto b : homology(k, Coefficients::rationals()).betti()) {
      alt += sign * static_cast<long long>(b);
      sign = -sign;
    }
    EXPECT_EQ(euler_characteristic(k), alt) << name;
  }
}

namespace {

SimplicialMap swap_map(const SimplicialComplex& k, const VertexId& x, const VertexId& y) {
  std::map<VertexId, VertexId> m;
  for (const auto& v : k.vertices()) m[v] = v == x ? y : v == y ? x : v;
  return SimplicialMap(k, k, m);
}

// Degree of a vertex permutation of the boundary of a simplex, computed from
// the explicit fundamental cycle sum_i (-1)^i [facet omitting i]: the image of
// one facet is compared with the cycle coefficient of the facet it lands on.
long long trace_degree(const SimplicialMap& f) {
  const auto& k = f.domain();
  const std::size_t n = k.vertex_count();
  auto coefficient = [](std::size_t omitted) { return omitted % 2 == 0 ? 1 : -1; };
  std::vector<std::uint32_t> img;
  for (std::uint32_t v = 1; v < n; ++v) img.push_back(f(v));  // facet omitting vertex 0
  int sign = 1;
  for (std::size_t a = 0; a < img.size(); ++a)
    for (std::size_t b = a + 1; b < img.size(); ++b) {
      if (img[a] == img[b]) return 0;
      if (img[a] > img[b]) sign = -sign;
    }
  std::size_t omitted = 0;
  while (std::find(img.begin(), img.end(), omitted) != img.end()) ++omitted;
  return sign * coefficient(0) * coefficient(omitted);
}

}  // namespace

TEST(InducedDegree, Examples) {
  auto s2 = fx::simplex_boundary(3);
  EXPECT_EQ(induced_degree(SimplicialMap::identity(s2)), 1);
  auto reflection = swap_map(s2, "a", "b");
  EXPECT_EQ(induced_degree(reflection), -1);
  EXPECT_EQ(trace_degree(reflection), -1);
  auto hex = fx::hexagon();
  std::map<VertexId, VertexId> constant;
  for (const auto& v : hex.vertices()) constant[v] = "a";
  EXPECT_EQ(induced_degree(SimplicialMap(hex, hex, constant)), 0);
}

TEST(InducedDegree, HypothesisChecked) {
  auto rp2 = fx::projective_plane();
  EXPECT_THROW(induced_degree(SimplicialMap::identity(rp2)), Error);
  auto edge = fx::simplex(1);
  EXPECT_THROW(induced_degree(SimplicialMap::identity(edge)), Error);
}

TEST(InducedDegree, MultiplicativeUnderComposition) {
  auto s2 = fx::simplex_boundary(3);
  std::vector<SimplicialMap> maps{SimplicialMap::identity(s2), swap_map(s2, "a", "b"), swap_map(s2, "c", "d")};
  std::map<VertexId, VertexId> collapse{{"a", "a"}, {"b", "a"}, {"c", "c"}, {"d", "d"}};
  maps.emplace_back(s2, s2, collapse);
  std::map<VertexId, VertexId> rotate{{"a", "b"}, {"b", "c"}, {"c", "a"}, {"d", "d"}};
  maps.emplace_back(s2, s2, rotate);
  auto hex = fx::hexagon();
  std::map<VertexId, VertexId> rot{{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "e"}, {"e", "f"}, {"f", "a"}};
  std::map<VertexId, VertexId> flip{{"a", "a"}, {"b", "f"}, {"c", "e"}, {"d", "d"}, {"e", "c"}, {"f", "b"}};
  for (const auto& f : maps)
    for (const auto& g : maps) EXPECT_EQ(induced_degree(compose(f, g)), induced_degree(f) * induced_degree(g));
  SimplicialMap r(hex, hex, rot), fl(hex, hex, flip);
  EXPECT_EQ(induced_degree(r), 1);
  EXPECT_EQ(induced_degree(fl), -1);
  EXPECT_EQ(induced_degree(compose(r, fl)), -1);
}

TEST(HomologyClassMultiple, BoundaryDifferencesVanish) {
  auto hex = fx::hexagon();
  auto z = fundamental_cycle(hex);
  std::vector<BigInt> twice;
  for (auto& x : z) twice.push_back(2 * x);
  EXPECT_EQ(homology_class_multiple(hex, 1, twice, z), 2);
}
