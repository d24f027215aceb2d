#pragma once

// Brute-force reference computations for small integer matrices, written
// without touching the library's elimination code: Laplace determinants,
// minors, determinantal divisors and minor-gcd lattice measures.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <functional>
#include <random>
#include <vector>

namespace oracle {

using Int = mpz_class;
using Rows = std::vector<std::vector<Int>>;

inline Int laplace_det(const Rows& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Int total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j] == 0) continue;
    Rows sub;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Int> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(m[r][c]);
      sub.push_back(row);
    }
    const Int term = m[0][j] * laplace_det(sub);
    if (j % 2) total -= term; else total += term;
  }
  return total;
}

inline void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> idx(k);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t start) {
    if (pos == k) { fn(idx); return; }
    for (std::size_t i = start; i + (k - pos) <= n; ++i) {
      idx[pos] = i;
      rec(pos + 1, i + 1);
    }
  };
  rec(0, 0);
}

/// gcd of all k x k minors (0 if every minor vanishes).
inline Int minor_gcd(const Rows& m, std::size_t cols, std::size_t k) {
  if (k == 0) return 1;
  if (m.size() < k || cols < k) return 0;
  Int g = 0;
  for_each_subset(m.size(), k, [&](const std::vector<std::size_t>& rs) {
    for_each_subset(cols, k, [&](const std::vector<std::size_t>& cs) {
      Rows sub;
      for (auto r : rs) {
        std::vector<Int> row;
        for (auto c : cs) row.push_back(m[r][c]);
        sub.push_back(row);
      }
      Int d = laplace_det(sub);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
    });
  });
  return g;
}

inline std::size_t rank(const Rows& m, std::size_t cols) {
  std::size_t r = 0;
  for (std::size_t k = 1; k <= std::min(m.size(), cols); ++k)
    if (minor_gcd(m, cols, k) != 0) r = k; else break;
  return r;
}

/// Smith invariants from determinantal divisors, padded with zeros.
inline std::vector<Int> smith_invariants(const Rows& m, std::size_t cols) {
  std::vector<Int> out;
  Int prev = 1;
  const std::size_t len = std::min(m.size(), cols);
  for (std::size_t k = 1; k <= len; ++k) {
    Int d = minor_gcd(m, cols, k);
    if (d == 0) {
      out.resize(len, 0);
      return out;
    }
    out.push_back(d / prev);
    prev = d;
  }
  return out;
}

/// Covolume measure of the lattice spanned by the rows: gcd of the maximal
/// minors of a rank-r generating set. Two lattices of the same rank with
/// L1 inside L2 are equal exactly when this agrees.
inline Int lattice_measure(const Rows& gens, std::size_t cols) {
  return minor_gcd(gens, cols, rank(gens, cols));
}

/// v in the row lattice of gens: adding v keeps the rank and the measure.
inline bool in_lattice(const Rows& gens, std::size_t cols, const std::vector<Int>& v) {
  bool zero = true;
  for (const auto& x : v) zero = zero && x == 0;
  if (zero) return true;
  const std::size_t r = rank(gens, cols);
  Rows ext = gens;
  ext.push_back(v);
  if (rank(ext, cols) != r) return false;
  return minor_gcd(ext, cols, r) == minor_gcd(gens, cols, r);
}

/// Membership in the lattice with linearly independent rows `basis`, by
/// Cramer's rule on a nonsingular maximal minor.
inline bool in_basis_lattice(const Rows& basis, std::size_t cols, const std::vector<Int>& v) {
  const std::size_t k = basis.size();
  if (k == 0) {
    for (const auto& x : v)
      if (x != 0) return false;
    return true;
  }
  std::vector<std::size_t> chosen;
  Int d = 0;
  for_each_subset(cols, k, [&](const std::vector<std::size_t>& cs) {
    if (d != 0) return;
    Rows sub(k);
    for (std::size_t i = 0; i < k; ++i)
      for (auto c : cs) sub[i].push_back(basis[i][c]);
    Int det = laplace_det(sub);
    if (det != 0) {
      d = det;
      chosen = cs;
    }
  });
  if (d == 0) return false;
  // c B = v restricted to the chosen columns: c_i = det(B with row i := v) / d
  std::vector<Int> c(k);
  for (std::size_t i = 0; i < k; ++i) {
    Rows sub(k);
    for (std::size_t r = 0; r < k; ++r)
      for (auto col : chosen) sub[r].push_back(r == i ? v[col] : basis[r][col]);
    Int num = laplace_det(sub);
    if (num % d != 0) return false;
    c[i] = num / d;
  }
  for (std::size_t j = 0; j < cols; ++j) {
    Int s = 0;
    for (std::size_t i = 0; i < k; ++i) s += c[i] * basis[i][j];
    if (s != v[j]) return false;
  }
  return true;
}

inline Rows matmul(const Rows& a, const Rows& b, std::size_t b_cols) {
  Rows r(a.size(), std::vector<Int>(b_cols, 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < b_cols; ++j) r[i][j] += a[i][k] * b[k][j];
  return r;
}

inline Rows gram(const Rows& basis) {
  Rows g(basis.size(), std::vector<Int>(basis.size(), 0));
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j)
      for (std::size_t k = 0; k < basis[i].size(); ++k) g[i][j] += basis[i][k] * basis[j][k];
  return g;
}

inline Rows random_rows(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int lo = -5, int hi = 5) {
  std::uniform_int_distribution<int> dist(lo, hi);
  Rows m(rows, std::vector<Int>(cols));
  for (auto& row : m)
    for (auto& x : row) x = dist(rng);
  return m;
}

}  // namespace oracle
