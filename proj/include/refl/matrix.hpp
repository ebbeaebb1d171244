#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "refl/scalar/field.hpp"

namespace refl {

// Dense square matrix over a scalar backend, row-major.
template <class S>
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t n) : n_(n), a_(n * n, S(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = S(1);
    return m;
  }
  static Matrix diagonal(std::span<const S> d) {
    Matrix m(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }
  template <class Fn>
  static Matrix from_function(std::size_t n, Fn&& fn) {
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = fn(i, j);
    return m;
  }

  std::size_t size() const { return n_; }
  S& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const S& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  const std::vector<S>& entries() const { return a_; }

  Matrix& operator+=(const Matrix& o) {
    check_same(o);
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same(o);
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
  }
  Matrix& operator*=(const S& s) {
    for (auto& x : a_) x *= s;
    return *this;
  }
  Matrix operator-() const {
    Matrix r = *this;
    for (auto& x : r.a_) x = -x;
    return r;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const S& s) { return a *= s; }
  friend Matrix operator*(const S& s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    a.check_same(b);
    const std::size_t n = a.n_;
    Matrix r(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        const S& aik = a(i, k);
        if (is_zero(aik)) continue;
        for (std::size_t j = 0; j < n; ++j) {
          const S& bkj = b(k, j);
          if (is_zero(bkj)) continue;
          r(i, j) += aik * bkj;
        }
      }
    return r;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) { return a.n_ == b.n_ && a.a_ == b.a_; }

  Matrix transpose() const {
    return from_function(n_, [&](std::size_t i, std::size_t j) { return (*this)(j, i); });
  }

  bool is_upper_triangular() const {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (!is_zero((*this)(i, j))) return false;
    return true;
  }
  bool is_lower_triangular() const { return transpose().is_upper_triangular(); }
  bool is_diagonal() const { return is_upper_triangular() && is_lower_triangular(); }

  Matrix pow(int k) const {
    if (k < 0) throw std::invalid_argument("Matrix::pow: negative exponent");
    Matrix r = identity(n_), base = *this;
    while (k > 0) {
      if (k & 1) r = r * base;
      k >>= 1;
      if (k) base = base * base;
    }
    return r;
  }

 private:
  void check_same(const Matrix& o) const {
    if (n_ != o.n_) throw std::invalid_argument("Matrix: size mismatch");
  }
  std::size_t n_ = 0;
  std::vector<S> a_;
};

namespace detail {
inline double pivot_score(const RationalFunction& s) { return s.is_zero() ? 0.0 : 1.0; }
inline double pivot_score(const Complex& s) { return std::abs(s); }
}  // namespace detail

// Gauss-Jordan inverse. Exact: first nonzero pivot; numeric: partial pivoting.
template <class S>
Matrix<S> inverse(const Matrix<S>& m) {
  const std::size_t n = m.size();
  Matrix<S> a = m, r = Matrix<S>::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t best = col;
    double best_score = detail::pivot_score(a(col, col));
    for (std::size_t i = col + 1; i < n && best_score < 1.0; ++i) {
      double s = detail::pivot_score(a(i, col));
      if (s > best_score) {
        best = i;
        best_score = s;
      }
    }
    if (best_score == 0.0) throw PoleError("Matrix inverse: singular matrix");
    if (best != col)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(col, j), a(best, j));
        std::swap(r(col, j), r(best, j));
      }
    const S inv_p = S(1) / a(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) *= inv_p;
      r(col, j) *= inv_p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || is_zero(a(i, col))) continue;
      const S f = a(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(col, j);
        r(i, j) -= f * r(col, j);
      }
    }
  }
  return r;
}

// Kronecker product, index (i, k) -> i * b.size() + k.
template <class S>
Matrix<S> kron(const Matrix<S>& a, const Matrix<S>& b) {
  const std::size_t m = b.size();
  Matrix<S> r(a.size() * m);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (is_zero(a(i, j))) continue;
      for (std::size_t k = 0; k < m; ++k)
        for (std::size_t l = 0; l < m; ++l) r(i * m + k, j * m + l) = a(i, j) * b(k, l);
    }
  return r;
}

// Places an operator acting on legs (first, second) of a multi-leg space.
// The operator's own index ordering is (first, second) in row-major Kronecker form.
template <class S>
Matrix<S> embed_pair(const Matrix<S>& op, std::span<const std::size_t> dims, std::size_t first, std::size_t second) {
  const std::size_t legs = dims.size();
  if (first >= legs || second >= legs || first == second) throw std::invalid_argument("embed_pair: bad legs");
  if (op.size() != dims[first] * dims[second]) throw std::invalid_argument("embed_pair: operator size mismatch");
  std::size_t total = 1;
  for (auto d : dims) total *= d;
  std::vector<std::size_t> stride(legs, 1);
  for (std::size_t l = legs - 1; l-- > 0;) stride[l] = stride[l + 1] * dims[l + 1];

  Matrix<S> r(total);
  std::vector<std::size_t> idx(legs, 0);
  for (std::size_t row = 0; row < total; ++row) {
    std::size_t rem = row;
    for (std::size_t l = 0; l < legs; ++l) {
      idx[l] = rem / stride[l];
      rem %= stride[l];
    }
    const std::size_t base = row - idx[first] * stride[first] - idx[second] * stride[second];
    const std::size_t op_row = idx[first] * dims[second] + idx[second];
    for (std::size_t a = 0; a < dims[first]; ++a)
      for (std::size_t b = 0; b < dims[second]; ++b) {
        const S& v = op(op_row, a * dims[second] + b);
        if (is_zero(v)) continue;
        r(row, base + a * stride[first] + b * stride[second]) = v;
      }
  }
  return r;
}

template <class S>
Matrix<S> embed_single(const Matrix<S>& op, std::span<const std::size_t> dims, std::size_t leg) {
  std::size_t before = 1, after = 1;
  for (std::size_t l = 0; l < leg; ++l) before *= dims[l];
  for (std::size_t l = leg + 1; l < dims.size(); ++l) after *= dims[l];
  return kron(kron(Matrix<S>::identity(before), op), Matrix<S>::identity(after));
}

}  // namespace refl
