/**
 * Matrix groups over prime fields, realised as permutation groups of the
 * nonzero column vectors.
 */
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ggt/linear_algebra.hpp"
#include "ggt/perm_group.hpp"

namespace ggt {

using FpMatrix = std::vector<std::vector<std::int64_t>>;  // row-major

inline std::int64_t determinant_mod(FpMatrix a, std::int64_t p) {
  const std::size_t n = a.size();
  std::int64_t det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c] % p == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(a[piv], a[c]);
      det = p - det;
    }
    det = det * (((a[c][c] % p) + p) % p) % p;
    const std::int64_t inv = detail::mod_pow(((a[c][c] % p) + p) % p, p - 2, p);
    for (std::size_t r = c + 1; r < n; ++r) {
      const std::int64_t f = ((a[r][c] % p) + p) % p * inv % p;
      for (std::size_t j = c; j < n; ++j) a[r][j] = ((a[r][j] - f * a[c][j]) % p + p) % p;
    }
  }
  return det % p;
}

class FpMatrixGroup {
 public:
  FpMatrixGroup(std::size_t n, std::int64_t p, std::vector<FpMatrix> generators)
      : n_(n), p_(p), generators_(std::move(generators)) {
    if (n_ == 0) throw Error("matrix size must be positive");
    if (!is_prime(static_cast<std::uint64_t>(p_ < 0 ? 0 : p_))) throw Error("p = " + std::to_string(p_) + " is not prime");
    for (auto& g : generators_) {
      if (g.size() != n_) throw Error("generator has the wrong number of rows");
      for (auto& row : g) {
        if (row.size() != n_) throw Error("generator has the wrong number of columns");
        for (auto& x : row) x = ((x % p_) + p_) % p_;
      }
      if (determinant_mod(g, p_) != 1) throw Error("generator does not have determinant 1");
    }
  }

  std::size_t n() const { return n_; }
  std::int64_t p() const { return p_; }
  const std::vector<FpMatrix>& generators() const { return generators_; }

  /// Number of nonzero vectors, the degree of the permutation representation.
  std::size_t vector_count() const {
    std::size_t total = 1;
    for (std::size_t i = 0; i < n_; ++i) total *= static_cast<std::size_t>(p_);
    return total - 1;
  }

  /// Nonzero vector number k (k = 0 .. p^n - 2) has base-p digits of k + 1,
  /// coordinate i being digit i.
  std::vector<std::int64_t> vector_of(std::size_t k) const {
    std::vector<std::int64_t> v(n_);
    std::size_t code = k + 1;
    for (std::size_t i = 0; i < n_; ++i) {
      v[i] = static_cast<std::int64_t>(code % static_cast<std::size_t>(p_));
      code /= static_cast<std::size_t>(p_);
    }
    return v;
  }

  std::size_t index_of_vector(const std::vector<std::int64_t>& v) const {
    std::size_t code = 0;
    for (std::size_t i = n_; i-- > 0;) code = code * static_cast<std::size_t>(p_) + static_cast<std::size_t>(v[i]);
    return code - 1;
  }

  Perm as_permutation(const FpMatrix& m) const {
    Perm perm(vector_count());
    for (std::size_t k = 0; k < perm.size(); ++k) {
      auto v = vector_of(k);
      std::vector<std::int64_t> w(n_, 0);
      for (std::size_t r = 0; r < n_; ++r) {
        std::int64_t s = 0;
        for (std::size_t c = 0; c < n_; ++c) s += m[r][c] * v[c];
        w[r] = s % p_;
      }
      perm[k] = static_cast<std::uint32_t>(index_of_vector(w));
    }
    return perm;
  }

  /// The subgroup generated by the listed generators, as a permutation group.
  PermGroup permutation_group(const std::vector<std::size_t>& which) const {
    std::vector<Perm> gens;
    for (auto i : which) gens.push_back(as_permutation(generators_.at(i)));
    return PermGroup(vector_count(), gens);
  }

  PermGroup permutation_group() const {
    std::vector<std::size_t> all(generators_.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    return permutation_group(all);
  }

 private:
  std::size_t n_;
  std::int64_t p_;
  std::vector<FpMatrix> generators_;
};

/// tau_i fixes e_j for j != i and sends e_i to e_i + e_{i+1} (indices mod n).
inline FpMatrixGroup sl_tau_generators(std::size_t n, std::int64_t p) {
  if (n < 2) throw Error("the tau generators need n >= 2");
  std::vector<FpMatrix> gens;
  for (std::size_t i = 0; i < n; ++i) {
    FpMatrix m(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t j = 0; j < n; ++j) m[j][j] = 1;
    m[(i + 1) % n][i] = 1;
    gens.push_back(std::move(m));
  }
  return FpMatrixGroup(n, p, std::move(gens));
}

inline std::size_t matrix_group_order(const FpMatrixGroup& g) { return g.permutation_group().order(); }

inline std::size_t matrix_group_order(const FpMatrixGroup& g, const std::vector<std::size_t>& which) {
  return g.permutation_group(which).order();
}

/// |SL_n(F_p)| = p^{n(n-1)/2} prod_{k=2..n} (p^k - 1).
inline std::size_t sl_order(std::size_t n, std::int64_t p) {
  std::size_t order = 1;
  const auto q = static_cast<std::size_t>(p);
  for (std::size_t i = 0; i < n * (n - 1) / 2; ++i) order *= q;
  std::size_t pk = q;
  for (std::size_t k = 2; k <= n; ++k) {
    pk *= q;
    order *= pk - 1;
  }
  return order;
}

}  // namespace ggt
