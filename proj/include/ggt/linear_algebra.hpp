/**
 * Exact sparse linear algebra over Z, Q and F_p.
 *
 * Smith normal form works on arbitrary-precision integers and always pivots
 * on a smallest nonzero entry (ties: smallest Markowitz product, then
 * position). Elimination first reaches a diagonal form; the divisibility
 * chain is then restored with gcd/lcm exchanges, which preserve equivalence.
 */
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "ggt/error.hpp"

namespace ggt {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

class IntegerMatrix {
 public:
  using Row = std::map<std::size_t, BigInt>;

  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols) : cols_(cols), data_(rows) {}

  static IntegerMatrix from_dense(const std::vector<std::vector<long long>>& dense) {
    const std::size_t cols = dense.empty() ? 0 : dense.front().size();
    IntegerMatrix m(dense.size(), cols);
    for (std::size_t r = 0; r < dense.size(); ++r) {
      if (dense[r].size() != cols) throw Error("ragged matrix");
      for (std::size_t c = 0; c < cols; ++c) m.set(r, c, dense[r][c]);
    }
    return m;
  }

  std::size_t rows() const { return data_.size(); }
  std::size_t cols() const { return cols_; }

  void set(std::size_t r, std::size_t c, const BigInt& v) {
    check(r, c);
    if (v == 0)
      data_[r].erase(c);
    else
      data_[r][c] = v;
  }

  void add(std::size_t r, std::size_t c, const BigInt& v) {
    check(r, c);
    auto& cell = data_[r][c];
    cell += v;
    if (cell == 0) data_[r].erase(c);
  }

  BigInt at(std::size_t r, std::size_t c) const {
    check(r, c);
    auto it = data_[r].find(c);
    return it == data_[r].end() ? BigInt(0) : it->second;
  }

  const Row& row(std::size_t r) const { return data_.at(r); }

  std::size_t nonzeros() const {
    std::size_t n = 0;
    for (const auto& r : data_) n += r.size();
    return n;
  }

 private:
  void check(std::size_t r, std::size_t c) const {
    if (r >= data_.size() || c >= cols_) throw Error("matrix index out of range");
  }

  std::size_t cols_ = 0;
  std::vector<Row> data_;
};

namespace detail {

// Truncating division keeps |a - q*b| < |b|.
inline BigInt trunc_div(const BigInt& a, const BigInt& b) { return a / b; }

class SmithWorkspace {
 public:
  explicit SmithWorkspace(const IntegerMatrix& m) : rows_(m.rows()), cols_(m.cols()) {
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (const auto& [c, v] : m.row(r)) {
        rows_[r][c] = v;
        cols_[c].insert(r);
      }
  }

  std::vector<BigInt> diagonal() {
    std::vector<BigInt> diag;
    while (auto pivot = choose_pivot()) {
      auto [r, c] = *pivot;
      for (;;) {
        clear_column(r, c);
        if (rows_[r].size() == 1) break;
        clear_row(r, c);
        if (cols_[c].size() == 1) break;
      }
      BigInt d = abs(rows_[r].at(c));
      diag.push_back(d);
      rows_[r].clear();
      cols_[c].clear();
    }
    return diag;
  }

 private:
  std::optional<std::pair<std::size_t, std::size_t>> choose_pivot() const {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    BigInt best_abs;
    std::size_t best_cost = 0;
    for (std::size_t r = 0; r < rows_.size(); ++r)
      for (const auto& [c, v] : rows_[r]) {
        BigInt a = abs(v);
        std::size_t cost = (rows_[r].size() - 1) * (cols_[c].size() - 1);
        if (!best || a < best_abs || (a == best_abs && cost < best_cost)) {
          best = {r, c};
          best_abs = a;
          best_cost = cost;
        }
      }
    return best;
  }

  void set(std::size_t r, std::size_t c, const BigInt& v) {
    if (v == 0) {
      rows_[r].erase(c);
      cols_[c].erase(r);
    } else {
      rows_[r][c] = v;
      cols_[c].insert(r);
    }
  }

  // row_i -= q * row_r
  void row_axpy(std::size_t i, const BigInt& q, std::size_t r) {
    const auto source = rows_[r];
    for (const auto& [c, v] : source) {
      auto it = rows_[i].find(c);
      BigInt cur = it == rows_[i].end() ? BigInt(0) : it->second;
      set(i, c, cur - q * v);
    }
  }

  // col_j -= q * col_c
  void col_axpy(std::size_t j, const BigInt& q, std::size_t c) {
    const auto source = cols_[c];
    for (auto r : source) {
      const BigInt v = rows_[r].at(c);
      auto it = rows_[r].find(j);
      BigInt cur = it == rows_[r].end() ? BigInt(0) : it->second;
      set(r, j, cur - q * v);
    }
  }

  // Euclid down column c until only row r is nonzero there; r may move.
  void clear_column(std::size_t& r, std::size_t c) {
    for (;;) {
      for (auto i : cols_[c])
        if (abs(rows_[i].at(c)) < abs(rows_[r].at(c))) r = i;
      bool remainder = false;
      const auto others = cols_[c];
      for (auto i : others) {
        if (i == r) continue;
        row_axpy(i, trunc_div(rows_[i].at(c), rows_[r].at(c)), r);
        if (cols_[c].count(i)) remainder = true;
      }
      if (!remainder) return;
    }
  }

  // Euclid along row r until only column c is nonzero there; c may move.
  void clear_row(std::size_t r, std::size_t& c) {
    for (;;) {
      for (const auto& [j, v] : rows_[r])
        if (abs(v) < abs(rows_[r].at(c))) c = j;
      bool remainder = false;
      std::vector<std::size_t> others;
      for (const auto& [j, v] : rows_[r])
        if (j != c) others.push_back(j);
      for (auto j : others) {
        col_axpy(j, trunc_div(rows_[r].at(j), rows_[r].at(c)), c);
        if (rows_[r].count(j)) remainder = true;
      }
      if (!remainder) return;
    }
  }

  std::vector<std::map<std::size_t, BigInt>> rows_;
  std::vector<std::set<std::size_t>> cols_;
};

}  // namespace detail

/// Nonzero invariant factors d_1 | d_2 | ... (all positive).
inline std::vector<BigInt> smith_normal_form(const IntegerMatrix& m) {
  detail::SmithWorkspace work(m);
  std::vector<BigInt> d = work.diagonal();
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      BigInt g = gcd(d[i], d[j]);
      BigInt l = d[i] / g * d[j];
      d[i] = g;
      d[j] = l;
    }
  return d;
}

/// Incremental row-echelon basis over an exact field. Rows are reduced
/// against earlier pivots on insertion, so remainders are canonical.
template <typename Field>
class EchelonBasis {
 public:
  using Vector = std::map<std::size_t, Field>;

  explicit EchelonBasis(std::function<Field(const Field&)> normalize = [](const Field& x) { return x; },
                        std::function<Field(const Field&)> invert = nullptr)
      : normalize_(std::move(normalize)), invert_(std::move(invert)) {}

  // Returns the remainder of v modulo the current span.
  Vector reduce(Vector v) const {
    for (const auto& [pivot, row] : rows_) {
      auto it = v.find(pivot);
      if (it == v.end()) continue;
      const Field factor = it->second;  // rows are scaled to pivot 1
      for (const auto& [c, x] : row) {
        Field nv = normalize_(v[c] - factor * x);
        if (nv == Field(0))
          v.erase(c);
        else
          v[c] = nv;
      }
    }
    return v;
  }

  // Adds v to the span; returns false if it was already dependent.
  bool insert(Vector v) {
    v = reduce(std::move(v));
    if (v.empty()) return false;
    const std::size_t pivot = v.begin()->first;
    const Field inv = inverse(v.begin()->second);
    for (auto& [c, x] : v) x = normalize_(x * inv);
    rows_.emplace_back(pivot, std::move(v));
    return true;
  }

  std::size_t rank() const { return rows_.size(); }

 private:
  Field inverse(const Field& x) const { return invert_ ? invert_(x) : Field(1) / x; }

  std::function<Field(const Field&)> normalize_;
  std::function<Field(const Field&)> invert_;
  std::vector<std::pair<std::size_t, Vector>> rows_;
};

inline std::size_t rank_over_rationals(const IntegerMatrix& m) {
  EchelonBasis<Rational> basis;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    EchelonBasis<Rational>::Vector v;
    for (const auto& [c, x] : m.row(r)) v[c] = Rational(x);
    basis.insert(std::move(v));
  }
  return basis.rank();
}

namespace detail {

inline std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t p) {
  std::int64_t result = 1;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = static_cast<std::int64_t>((__int128)result * base % p);
    base = static_cast<std::int64_t>((__int128)base * base % p);
    exp >>= 1;
  }
  return result;
}

}  // namespace detail

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::size_t rank_mod_p(const IntegerMatrix& m, std::int64_t p) {
  if (!is_prime(static_cast<std::uint64_t>(p))) throw Error("modulus " + std::to_string(p) + " is not prime");
  auto normalize = [p](const std::int64_t& x) { return ((x % p) + p) % p; };
  auto invert = [p](const std::int64_t& x) { return detail::mod_pow(x, p - 2, p); };
  EchelonBasis<std::int64_t> basis(normalize, invert);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    EchelonBasis<std::int64_t>::Vector v;
    for (const auto& [c, x] : m.row(r)) {
      std::int64_t residue = static_cast<std::int64_t>(((x % p) + p) % p);
      if (residue != 0) v[c] = residue;
    }
    basis.insert(std::move(v));
  }
  return basis.rank();
}

/// Basis of the rational null space {x : m x = 0}, one vector per free column.
inline std::vector<std::vector<Rational>> kernel_basis(const IntegerMatrix& m) {
  const std::size_t n = m.cols();
  std::vector<std::vector<Rational>> a(m.rows(), std::vector<Rational>(n));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (const auto& [c, x] : m.row(r)) a[r][c] = Rational(x);
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t c = 0; c < n && row < a.size(); ++c) {
    std::size_t sel = row;
    while (sel < a.size() && a[sel][c] == 0) ++sel;
    if (sel == a.size()) continue;
    std::swap(a[sel], a[row]);
    const Rational inv = Rational(1) / a[row][c];
    for (auto& x : a[row]) x *= inv;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || a[r][c] == 0) continue;
      const Rational f = a[r][c];
      for (std::size_t j = c; j < n; ++j) a[r][j] -= f * a[row][j];
    }
    pivot_cols.push_back(c);
    ++row;
  }
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(n);
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = -a[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Clears denominators and common factors; first nonzero entry made positive.
inline std::vector<BigInt> primitive_integer_vector(const std::vector<Rational>& v) {
  BigInt lcm_den = 1;
  for (const auto& x : v)
    if (x != 0) {
      BigInt d = denominator(x);
      lcm_den = lcm_den / gcd(lcm_den, d) * d;
    }
  std::vector<BigInt> out(v.size());
  BigInt g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] = numerator(v[i]) * (lcm_den / denominator(v[i]));
    g = gcd(g, out[i]);
  }
  if (g == 0) return out;
  BigInt sign = 1;
  for (const auto& x : out)
    if (x != 0) {
      sign = x < 0 ? -1 : 1;
      break;
    }
  for (auto& x : out) x = x / g * sign;
  return out;
}

}  // namespace ggt
