/**
 * Simplicial chain complexes and their homology over Z, Q and F_p.
 *
 * Simplices are oriented by increasing vertex index (the complex's vertex
 * order); the boundary of [v0..vk] is sum (-1)^i [v0..^vi..vk].
 */
#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ggt/complex.hpp"
#include "ggt/linear_algebra.hpp"

namespace ggt {

class Coefficients {
 public:
  enum class Kind { Integers, Rationals, PrimeField };

  static Coefficients integers() { return Coefficients(Kind::Integers, 0); }
  static Coefficients rationals() { return Coefficients(Kind::Rationals, 0); }
  static Coefficients prime_field(std::int64_t p) {
    if (!is_prime(static_cast<std::uint64_t>(p < 0 ? 0 : p)))
      throw Error("coefficient field characteristic " + std::to_string(p) + " is not prime");
    return Coefficients(Kind::PrimeField, p);
  }

  // Accepts "Z", "Q" or "F<p>".
  static Coefficients parse(const std::string& text) {
    if (text == "Z") return integers();
    if (text == "Q") return rationals();
    if (text.size() > 1 && text[0] == 'F') {
      std::size_t used = 0;
      long long p = 0;
      try {
        p = std::stoll(text.substr(1), &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == text.size() - 1) return prime_field(p);
    }
    throw Error("unknown coefficient ring '" + text + "' (expected Z, Q or F<p>)");
  }

  Kind kind() const { return kind_; }
  std::int64_t characteristic() const { return p_; }

  std::string name() const {
    switch (kind_) {
      case Kind::Integers: return "Z";
      case Kind::Rationals: return "Q";
      case Kind::PrimeField: return "F" + std::to_string(p_);
    }
    return "";
  }

  friend bool operator==(const Coefficients&, const Coefficients&) = default;

 private:
  Coefficients(Kind k, std::int64_t p) : kind_(k), p_(p) {}
  Kind kind_;
  std::int64_t p_;
};

struct HomologyGroup {
  std::size_t rank = 0;
  std::vector<BigInt> torsion;  // each >= 2, dividing the next

  bool trivial() const { return rank == 0 && torsion.empty(); }
  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;

  std::string to_string() const {
    std::string out;
    auto append = [&](const std::string& term) { out += out.empty() ? term : " + " + term; };
    if (rank == 1) append("R");
    if (rank > 1) append("R^" + std::to_string(rank));
    for (const auto& t : torsion) append("Z/" + t.str());
    return out.empty() ? "0" : out;
  }
};

struct HomologyProfile {
  Coefficients ring = Coefficients::integers();
  bool reduced = false;
  std::vector<HomologyGroup> groups;  // index = degree, up to dim K

  const HomologyGroup& operator[](std::size_t d) const {
    static const HomologyGroup zero;
    return d < groups.size() ? groups[d] : zero;
  }

  std::vector<std::size_t> betti() const {
    std::vector<std::size_t> b;
    for (const auto& g : groups) b.push_back(g.rank);
    return b;
  }

  bool vanishes() const {
    for (const auto& g : groups)
      if (!g.trivial()) return false;
    return true;
  }
};

/// Matrix of d_k : C_k -> C_{k-1}, rows indexed by (k-1)-simplices.
inline IntegerMatrix boundary_matrix(const SimplicialComplex& k, int dim) {
  if (dim <= 0 || dim > k.dimension()) {
    const std::size_t rows = dim <= 0 ? 0 : k.simplices(dim - 1).size();
    const std::size_t cols = dim < 0 || dim > k.dimension() ? 0 : k.simplices(dim).size();
    return IntegerMatrix(rows, cols);
  }
  const auto& cells = k.simplices(dim);
  IntegerMatrix m(k.simplices(dim - 1).size(), cells.size());
  for (std::size_t c = 0; c < cells.size(); ++c) {
    const Simplex& s = cells[c];
    for (std::size_t i = 0; i < s.size(); ++i) {
      Simplex face;
      face.reserve(s.size() - 1);
      for (std::size_t j = 0; j < s.size(); ++j)
        if (j != i) face.push_back(s[j]);
      m.set(*k.simplex_index(face), c, i % 2 == 0 ? 1 : -1);
    }
  }
  return m;
}

inline long long euler_characteristic(const SimplicialComplex& k) {
  long long chi = 0;
  long long sign = 1;
  for (auto n : k.face_vector()) {
    chi += sign * static_cast<long long>(n);
    sign = -sign;
  }
  return chi;
}

namespace detail {

inline std::size_t matrix_rank(const IntegerMatrix& m, const Coefficients& ring) {
  if (m.nonzeros() == 0) return 0;
  if (ring.kind() == Coefficients::Kind::PrimeField) return rank_mod_p(m, ring.characteristic());
  return rank_over_rationals(m);
}

}  // namespace detail

inline HomologyProfile homology(const SimplicialComplex& k, const Coefficients& ring, bool reduced = false) {
  HomologyProfile profile;
  profile.ring = ring;
  profile.reduced = reduced;
  const int top = k.dimension();
  if (top < 0) return profile;

  // rank of d_j for j = 0..top+1, with d_0 = 0 (or the augmentation when reduced)
  std::vector<std::size_t> ranks(top + 2, 0);
  std::vector<std::vector<BigInt>> torsion(top + 2);
  for (int j = 1; j <= top; ++j) {
    IntegerMatrix d = boundary_matrix(k, j);
    if (ring.kind() == Coefficients::Kind::Integers) {
      auto snf = smith_normal_form(d);
      ranks[j] = snf.size();
      for (auto& x : snf)
        if (x > 1) torsion[j].push_back(x);
    } else {
      ranks[j] = detail::matrix_rank(d, ring);
    }
  }
  if (reduced) ranks[0] = 1;

  for (int d = 0; d <= top; ++d) {
    HomologyGroup g;
    g.rank = k.simplices(d).size() - ranks[d] - ranks[d + 1];
    g.torsion = torsion[d + 1];
    profile.groups.push_back(std::move(g));
  }
  return profile;
}

inline HomologyProfile reduced_homology(const SimplicialComplex& k, const Coefficients& ring) {
  return homology(k, ring, true);
}

/// Reduced homology vanishes in every degree. The void complex is not acyclic
/// (its reduced homology is nonzero in degree -1).
inline bool is_acyclic(const SimplicialComplex& k, const Coefficients& ring) {
  if (k.empty()) return false;
  return reduced_homology(k, ring).vanishes();
}

using IntegerChain = std::vector<BigInt>;

/// Integer generator of the cycle group Z_d, assuming it has rank one and
/// d = dim K (so the cycle is the unique primitive fundamental class up to
/// sign). For d = 0 the augmented boundary is used.
inline IntegerChain fundamental_cycle(const SimplicialComplex& k) {
  const int d = k.dimension();
  if (d < 0) throw Error("void complex has no fundamental class");
  IntegerMatrix boundary;
  if (d == 0) {
    boundary = IntegerMatrix(1, k.simplices(0).size());
    for (std::size_t c = 0; c < k.simplices(0).size(); ++c) boundary.set(0, c, 1);
  } else {
    boundary = boundary_matrix(k, d);
  }
  auto kernel = kernel_basis(boundary);
  if (kernel.size() != 1)
    throw Error("top reduced homology is not infinite cyclic (cycle rank " + std::to_string(kernel.size()) + ")");
  return primitive_integer_vector(kernel.front());
}

/// Chain map f_# in degree d applied to an integer chain.
inline IntegerChain push_forward(const SimplicialMap& f, int d, const IntegerChain& chain) {
  const auto& dom_cells = f.domain().simplices(d);
  if (chain.size() != dom_cells.size()) throw Error("chain length does not match the number of simplices");
  const auto& cod = f.codomain();
  IntegerChain out(d <= cod.dimension() ? cod.simplices(d).size() : 0);
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (chain[i] == 0) continue;
    const Simplex& s = dom_cells[i];
    std::vector<std::uint32_t> img;
    for (auto v : s) img.push_back(f(v));
    // sign of the permutation sorting img, or 0 if a vertex repeats
    int sign = 1;
    for (std::size_t a = 0; a < img.size() && sign != 0; ++a)
      for (std::size_t b = a + 1; b < img.size(); ++b) {
        if (img[a] == img[b]) {
          sign = 0;
          break;
        }
        if (img[a] > img[b]) sign = -sign;
      }
    if (sign == 0) continue;
    std::sort(img.begin(), img.end());
    out[*cod.simplex_index(img)] += sign * chain[i];
  }
  return out;
}

/// Integer lambda with [cycle] = lambda [reference] in H_d(K; Q), where the
/// reference class is nonzero. Throws when the classes are not proportional.
inline Rational homology_class_multiple(const SimplicialComplex& k, int d, const IntegerChain& cycle,
                                        const IntegerChain& reference) {
  EchelonBasis<Rational> boundaries;
  if (d + 1 <= k.dimension()) {
    IntegerMatrix b = boundary_matrix(k, d + 1);
    std::vector<EchelonBasis<Rational>::Vector> columns(b.cols());
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (const auto& [c, x] : b.row(r)) columns[c][r] = Rational(x);
    for (auto& col : columns) boundaries.insert(std::move(col));
  }
  auto to_vector = [](const IntegerChain& chain) {
    EchelonBasis<Rational>::Vector v;
    for (std::size_t i = 0; i < chain.size(); ++i)
      if (chain[i] != 0) v[i] = Rational(chain[i]);
    return v;
  };
  auto x = boundaries.reduce(to_vector(cycle));
  auto r = boundaries.reduce(to_vector(reference));
  if (r.empty()) throw Error("reference class is zero in homology");
  if (x.empty()) return Rational(0);
  const Rational lambda = x.begin()->first == r.begin()->first ? x.begin()->second / r.begin()->second : Rational(0);
  if (lambda == 0) throw Error("homology classes are not proportional");
  for (const auto& [i, v] : r) {
    auto it = x.find(i);
    if (it == x.end() || it->second != lambda * v) throw Error("homology classes are not proportional");
  }
  if (x.size() != r.size()) throw Error("homology classes are not proportional");
  return lambda;
}

/// Degree of f on top reduced homology, both ends having top reduced
/// homology Z in the same dimension.
inline BigInt induced_degree(const SimplicialMap& f) {
  const auto& dom = f.domain();
  const auto& cod = f.codomain();
  const int d = dom.dimension();
  if (d < 0 || d != cod.dimension())
    throw Error("induced_degree needs domain and codomain of the same dimension");
  for (const auto* side : {&dom, &cod}) {
    auto h = reduced_homology(*side, Coefficients::integers());
    if (h[d].rank != 1 || !h[d].torsion.empty())
      throw Error("top reduced homology is not Z (got " + h[d].to_string() + ")");
  }
  const IntegerChain z_dom = fundamental_cycle(dom);
  const IntegerChain z_cod = fundamental_cycle(cod);
  const IntegerChain image = push_forward(f, d, z_dom);
  // top-dimensional cycles are not boundaries, so image = lambda * z_cod exactly
  std::optional<BigInt> lambda;
  for (std::size_t i = 0; i < image.size(); ++i) {
    if (z_cod[i] == 0) {
      if (image[i] != 0) throw Error("image of the fundamental cycle is not a cycle multiple");
      continue;
    }
    if (image[i] % z_cod[i] != 0) throw Error("image of the fundamental cycle is not an integer multiple");
    BigInt q = image[i] / z_cod[i];
    if (lambda && *lambda != q) throw Error("image of the fundamental cycle is not a cycle multiple");
    lambda = q;
  }
  return lambda.value_or(0);
}

}  // namespace ggt
