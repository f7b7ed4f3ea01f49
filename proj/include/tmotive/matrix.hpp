#pragma once

// Dense matrices over exact rings, fraction-free (Bareiss) determinants and
// adjugates for polynomial entries, Gauss-Jordan for field entries, and a
// small F_p linear-algebra kit for the semilinear searches.

#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "tmotive/poly.hpp"

namespace tmotive {

template <class R>
struct Matrix {
  int rows = 0, cols = 0;
  std::vector<R> a;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), a((size_t)r * c) {}

  R& at(int i, int j) { return a[(size_t)i * cols + j]; }
  const R& at(int i, int j) const { return a[(size_t)i * cols + j]; }

  static Matrix identity_like(int n, const R& one) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = one;
    return m;
  }

  Matrix transpose() const {
    Matrix t(cols, rows);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  Matrix operator+(const Matrix& o) const {
    Matrix r(rows, cols);
    for (size_t k = 0; k < a.size(); ++k) r.a[k] = a[k] + o.a[k];
    return r;
  }
  Matrix operator-(const Matrix& o) const {
    Matrix r(rows, cols);
    for (size_t k = 0; k < a.size(); ++k) r.a[k] = a[k] - o.a[k];
    return r;
  }
  Matrix operator-() const {
    Matrix r(rows, cols);
    for (size_t k = 0; k < a.size(); ++k) r.a[k] = -a[k];
    return r;
  }
  Matrix operator*(const Matrix& o) const {
    if (cols != o.rows) throw std::invalid_argument("matrix size mismatch");
    Matrix r(rows, o.cols);
    for (int i = 0; i < rows; ++i)
      for (int k = 0; k < cols; ++k) {
        const R& x = at(i, k);
        if (x.is_zero()) continue;
        for (int j = 0; j < o.cols; ++j) {
          if (o.at(k, j).is_zero()) continue;
          R t = x * o.at(k, j);
          r.at(i, j) = r.at(i, j).is_zero() ? t : r.at(i, j) + t;
        }
      }
    return r;
  }
  Matrix scale(const R& x) const {
    Matrix r(rows, cols);
    for (size_t k = 0; k < a.size(); ++k) r.a[k] = a[k] * x;
    return r;
  }

  bool operator==(const Matrix& o) const {
    if (rows != o.rows || cols != o.cols) return false;
    for (size_t k = 0; k < a.size(); ++k)
      if (!(a[k] == o.a[k])) return false;
    return true;
  }

  bool is_zero() const {
    for (const auto& x : a)
      if (!x.is_zero()) return false;
    return true;
  }

  Matrix minor_at(int i0, int j0) const {
    Matrix m(rows - 1, cols - 1);
    for (int i = 0, mi = 0; i < rows; ++i) {
      if (i == i0) continue;
      for (int j = 0, mj = 0; j < cols; ++j) {
        if (j == j0) continue;
        m.at(mi, mj) = at(i, j);
        ++mj;
      }
      ++mi;
    }
    return m;
  }

  template <class F>
  auto map(F f) const {
    Matrix<decltype(f(a[0]))> r(rows, cols);
    for (size_t k = 0; k < a.size(); ++k) r.a[k] = f(a[k]);
    return r;
  }

  Matrix block(int i0, int j0, int r, int c) const {
    Matrix m(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) m.at(i, j) = at(i0 + i, j0 + j);
    return m;
  }
};

template <class R>
Matrix<R> kron(const Matrix<R>& A, const Matrix<R>& B) {
  Matrix<R> r(A.rows * B.rows, A.cols * B.cols);
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j) {
      if (A.at(i, j).is_zero()) continue;
      for (int k = 0; k < B.rows; ++k)
        for (int l = 0; l < B.cols; ++l) {
          if (B.at(k, l).is_zero()) continue;
          r.at(i * B.rows + k, j * B.cols + l) = A.at(i, j) * B.at(k, l);
        }
    }
  return r;
}

// Bareiss fraction-free determinant over an integral domain with try_div.
template <class R>
R det_bareiss(Matrix<R> m, const R& one) {
  if (m.rows != m.cols) throw std::invalid_argument("det of non-square");
  int n = m.rows;
  if (n == 0) return one;
  R denom = one;
  bool negate = false;
  for (int k = 0; k < n - 1; ++k) {
    if (m.at(k, k).is_zero()) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (!m.at(i, k).is_zero()) {
          piv = i;
          break;
        }
      if (piv < 0) return R();
      for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(piv, j));
      negate = !negate;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        R t = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        R out;
        if (!try_div(t, denom, out)) throw std::runtime_error("bareiss exact division failed");
        m.at(i, j) = out;
      }
    denom = m.at(k, k);
  }
  R d = m.at(n - 1, n - 1);
  return negate ? -d : d;
}

template <class R>
R det_cofactor(const Matrix<R>& m) {
  if (m.rows == 1) return m.at(0, 0);
  R acc;
  for (int j = 0; j < m.cols; ++j) {
    if (m.at(0, j).is_zero()) continue;
    R t = m.at(0, j) * det_cofactor(m.minor_at(0, j));
    if (j % 2) t = -t;
    acc = acc.is_zero() ? t : acc + t;
  }
  return acc;
}

// adjugate via Bareiss minors: adj(m)[j][i] = (-1)^{i+j} det(minor_ij)
template <class R>
Matrix<R> adjugate(const Matrix<R>& m, const R& one) {
  int n = m.rows;
  Matrix<R> adj(n, n);
  if (n == 1) {
    adj.at(0, 0) = one;
    return adj;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      R d = det_bareiss(m.minor_at(i, j), one);
      if ((i + j) % 2) d = -d;
      adj.at(j, i) = d;
    }
  return adj;
}

// Gauss-Jordan inverse over a field-like R (has inv())
template <class R>
std::optional<Matrix<R>> inverse_field(Matrix<R> m, const R& one) {
  int n = m.rows;
  Matrix<R> inv = Matrix<R>::identity_like(n, one);
  for (int k = 0; k < n; ++k) {
    int piv = -1;
    for (int i = k; i < n; ++i)
      if (!m.at(i, k).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) return std::nullopt;
    if (piv != k)
      for (int j = 0; j < n; ++j) {
        std::swap(m.at(k, j), m.at(piv, j));
        std::swap(inv.at(k, j), inv.at(piv, j));
      }
    R f = m.at(k, k).inv();
    for (int j = 0; j < n; ++j) {
      m.at(k, j) = m.at(k, j) * f;
      inv.at(k, j) = inv.at(k, j) * f;
    }
    for (int i = 0; i < n; ++i) {
      if (i == k || m.at(i, k).is_zero()) continue;
      R c = m.at(i, k);
      for (int j = 0; j < n; ++j) {
        m.at(i, j) = m.at(i, j) - c * m.at(k, j);
        inv.at(i, j) = inv.at(i, j) - c * inv.at(k, j);
      }
    }
  }
  return inv;
}

// ---- F_p linear algebra (for the F_q-/constant-coefficient searches) -------

struct FpMat {
  int64_t p = 2;
  int rows = 0, cols = 0;
  std::vector<int64_t> a;

  FpMat() = default;
  FpMat(int64_t p_, int r, int c) : p(p_), rows(r), cols(c), a((size_t)r * c, 0) {}
  int64_t& at(int i, int j) { return a[(size_t)i * cols + j]; }
  int64_t at(int i, int j) const { return a[(size_t)i * cols + j]; }
};

// reduced row echelon form in place; returns pivot columns
std::vector<int> rref_fp(FpMat& m);
// basis of the right kernel, each vector length = cols
std::vector<std::vector<int64_t>> kernel_fp(FpMat m);

}  // namespace tmotive
