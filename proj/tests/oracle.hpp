#pragma once

// Naive reference arithmetic for cross-checking the library: dense matrices
// with explicit J for the symplectic involution and a textbook Gaussian
// elimination. Nothing here calls into starcheck except for reading
// coordinates out of elements.

#include <cstddef>
#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "starcheck/algebra.hpp"

namespace oracle {

struct Rationals {
  using T = mpq_class;
  T zero() const { return 0; }
  T one() const { return 1; }
  T from(long v) const { return v; }
  T add(const T& a, const T& b) const { return a + b; }
  T sub(const T& a, const T& b) const { return a - b; }
  T mul(const T& a, const T& b) const { return a * b; }
  T inv(const T& a) const { return 1 / a; }
  bool is_zero(const T& a) const { return a == 0; }
};

struct Residues {
  std::int64_t p;
  using T = std::int64_t;
  T norm(T a) const { return ((a % p) + p) % p; }
  T zero() const { return 0; }
  T one() const { return 1; }
  T from(long v) const { return norm(v); }
  T add(T a, T b) const { return norm(a + b); }
  T sub(T a, T b) const { return norm(a - b); }
  T mul(T a, T b) const { return norm(a * b); }
  T inv(T a) const {
    T result = 1;
    T base = norm(a);
    for (T e = p - 2; e > 0; e >>= 1) {
      if (e & 1) result = mul(result, base);
      base = mul(base, base);
    }
    return result;
  }
  bool is_zero(T a) const { return norm(a) == 0; }
};

template <class F>
using Mat = std::vector<std::vector<typename F::T>>;

template <class F>
Mat<F> zeros(const F& f, std::size_t n) {
  return Mat<F>(n, std::vector<typename F::T>(n, f.zero()));
}

template <class F>
Mat<F> unit(const F& f, std::size_t n, std::size_t i, std::size_t j) {
  auto m = zeros(f, n);
  m[i][j] = f.one();
  return m;
}

template <class F>
Mat<F> mul(const F& f, const Mat<F>& a, const Mat<F>& b) {
  const std::size_t n = a.size();
  auto c = zeros(f, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (f.is_zero(a[i][k])) continue;
      for (std::size_t j = 0; j < n; ++j) c[i][j] = f.add(c[i][j], f.mul(a[i][k], b[k][j]));
    }
  return c;
}

template <class F>
Mat<F> add(const F& f, const Mat<F>& a, const Mat<F>& b, bool subtract = false) {
  auto c = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) c[i][j] = subtract ? f.sub(a[i][j], b[i][j]) : f.add(a[i][j], b[i][j]);
  return c;
}

template <class F>
Mat<F> transpose(const F&, const Mat<F>& a) {
  auto t = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) t[i][j] = a[j][i];
  return t;
}

/// J = [[0, I], [-I, 0]].
template <class F>
Mat<F> symplectic_j(const F& f, std::size_t n) {
  auto j = zeros(f, n);
  const std::size_t m = n / 2;
  for (std::size_t i = 0; i < m; ++i) {
    j[i][m + i] = f.one();
    j[m + i][i] = f.sub(f.zero(), f.one());
  }
  return j;
}

/// J X^t J^-1, with J^-1 = -J.
template <class F>
Mat<F> symplectic_star(const F& f, const Mat<F>& x) {
  const auto j = symplectic_j(f, x.size());
  auto jinv = j;
  for (auto& row : jinv)
    for (auto& v : row) v = f.sub(f.zero(), v);
  return mul(f, mul(f, j, transpose(f, x)), jinv);
}

template <class F>
Mat<F> star(const F& f, const Mat<F>& x, bool symplectic) {
  return symplectic ? symplectic_star(f, x) : transpose(f, x);
}

template <class F>
std::vector<typename F::T> flatten(const F&, const Mat<F>& a) {
  std::vector<typename F::T> v;
  for (const auto& row : a) v.insert(v.end(), row.begin(), row.end());
  return v;
}

/// Indices of a maximal independent subset, chosen greedily in input order.
template <class F>
std::vector<std::size_t> independent(const F& f, const std::vector<std::vector<typename F::T>>& vectors) {
  std::vector<std::vector<typename F::T>> rows;
  std::vector<std::size_t> pivots;
  std::vector<std::size_t> chosen;
  for (std::size_t idx = 0; idx < vectors.size(); ++idx) {
    auto v = vectors[idx];
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const auto c = v[pivots[r]];
      if (f.is_zero(c)) continue;
      for (std::size_t k = 0; k < v.size(); ++k) v[k] = f.sub(v[k], f.mul(c, rows[r][k]));
    }
    std::size_t pivot = 0;
    while (pivot < v.size() && f.is_zero(v[pivot])) ++pivot;
    if (pivot == v.size()) continue;
    const auto scale = f.inv(v[pivot]);
    for (auto& x : v) x = f.mul(x, scale);
    rows.push_back(std::move(v));
    pivots.push_back(pivot);
    chosen.push_back(idx);
  }
  return chosen;
}

template <class F>
std::size_t rank(const F& f, const std::vector<std::vector<typename F::T>>& vectors) {
  return independent(f, vectors).size();
}

template <class F>
std::size_t rank_of(const F& f, const std::vector<Mat<F>>& mats) {
  std::vector<std::vector<typename F::T>> flat;
  for (const auto& m : mats) flat.push_back(flatten(f, m));
  return rank(f, flat);
}

/// An independent subset of the given matrices.
template <class F>
std::vector<Mat<F>> basis_of(const F& f, const std::vector<Mat<F>>& mats) {
  std::vector<std::vector<typename F::T>> flat;
  for (const auto& m : mats) flat.push_back(flatten(f, m));
  std::vector<Mat<F>> out;
  for (auto i : independent(f, flat)) out.push_back(mats[i]);
  return out;
}

/// Spanning sets {X + X*} and {X - X*} over the matrix units.
template <class F>
std::vector<Mat<F>> symmetric_span(const F& f, std::size_t n, bool symplectic, bool skew = false) {
  std::vector<Mat<F>> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto e = unit(f, n, i, j);
      out.push_back(add(f, e, star(f, e, symplectic), skew));
    }
  return basis_of(f, out);
}

enum class Op { product, jordan };

template <class F>
std::vector<Mat<F>> products(const F& f, const std::vector<Mat<F>>& a, const std::vector<Mat<F>>& b,
                             Op op = Op::product) {
  std::vector<Mat<F>> out;
  for (const auto& x : a)
    for (const auto& y : b) {
      auto p = mul(f, x, y);
      if (op == Op::jordan) p = add(f, p, mul(f, y, x));
      out.push_back(std::move(p));
    }
  return basis_of(f, out);
}

template <class F>
std::vector<Mat<F>> sum(const F& f, std::vector<Mat<F>> a, const std::vector<Mat<F>>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return basis_of(f, a);
}

/// Dense rational copy of a matrix element.
inline Mat<Rationals> to_matrix(const starcheck::Element& e) {
  const std::size_t n = e.algebra().n();
  Mat<Rationals> m(n, std::vector<mpq_class>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = e.entry(i + 1, j + 1).rational();
  return m;
}

/// Hamilton product on (1, i, j, k) coefficient vectors.
inline std::vector<mpq_class> quaternion_product(const std::vector<mpq_class>& a, const std::vector<mpq_class>& b) {
  return {a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
          a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
          a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
          a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0]};
}

}  // namespace oracle
