#pragma once

// Dense matrices over a commutative ring, and exact determinants.
//
//   det_cofactor   Laplace expansion, any ring; exponential, for tiny sizes.
//   det_bareiss    fraction-free elimination; needs exact division.
//   det_berkowitz  division-free, O(n^4) ring operations; any commutative ring.
//   det_gauss      Gaussian elimination over a field.
//   determinant    picks one of the above from the ring's capabilities.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "weylcurve/ring.hpp"

namespace weylcurve {

class SizeMismatch : public Error {
 public:
  using Error::Error;
};

template <CommutativeRing R>
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, const R& fill)
      : rows_(rows), cols_(cols), one_(one_like(fill)), data_(rows * cols, fill) {}

  static Matrix zeros(std::size_t rows, std::size_t cols, const R& unit) {
    return Matrix(rows, cols, zero_like(unit));
  }
  static Matrix identity(std::size_t n, const R& unit) {
    Matrix m = zeros(n, n, unit);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one_like(unit);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }
  const R& unit() const noexcept { return one_; }

  R& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const R& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix& operator+=(const Matrix& o) {
    require_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] = data_[k] + o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    require_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] = data_[k] - o.data_[k];
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  Matrix operator-() const {
    Matrix r = *this;
    for (auto& v : r.data_) v = -v;
    return r;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_)
      throw SizeMismatch("cannot multiply " + a.shape() + " by " + b.shape());
    Matrix r = zeros(a.rows_, b.cols_, a.one_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const R& aik = a(i, k);
        if (is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) = r(i, j) + aik * b(k, j);
      }
    return r;
  }

  Matrix scaled(const R& s) const {
    Matrix r = *this;
    for (auto& v : r.data_) v = v * s;
    return r;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

 private:
  void require_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw SizeMismatch("shape " + shape() + " does not match " + o.shape());
  }

  std::size_t rows_;
  std::size_t cols_;
  R one_;
  std::vector<R> data_;
};

template <class R>
Matrix<R> pow(const Matrix<R>& a, std::uint64_t e) {
  if (!a.square()) throw SizeMismatch("power of non-square matrix " + a.shape());
  Matrix<R> result = Matrix<R>::identity(a.rows(), a.unit());
  Matrix<R> base = a;
  for (; e > 0; e >>= 1) {
    if (e & 1) result = result * base;
    if (e > 1) base = base * base;
  }
  return result;
}

template <class R>
Matrix<R> commutator(const Matrix<R>& a, const Matrix<R>& b) {
  return a * b - b * a;
}

template <class R>
R trace(const Matrix<R>& a) {
  if (!a.square()) throw SizeMismatch("trace of non-square matrix " + a.shape());
  R t = zero_like(a.unit());
  for (std::size_t i = 0; i < a.rows(); ++i) t = t + a(i, i);
  return t;
}

template <class S, class R, class Fn>
Matrix<S> map_entries(const Matrix<R>& a, const S& unit, Fn&& fn) {
  Matrix<S> r = Matrix<S>::zeros(a.rows(), a.cols(), unit);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = fn(a(i, j));
  return r;
}

/// The matrix with row i and column j removed.
template <class R>
Matrix<R> minor_matrix(const Matrix<R>& a, std::size_t row, std::size_t col) {
  Matrix<R> m = Matrix<R>::zeros(a.rows() - 1, a.cols() - 1, a.unit());
  for (std::size_t i = 0, mi = 0; i < a.rows(); ++i) {
    if (i == row) continue;
    for (std::size_t j = 0, mj = 0; j < a.cols(); ++j) {
      if (j == col) continue;
      m(mi, mj++) = a(i, j);
    }
    ++mi;
  }
  return m;
}

namespace detail {

template <class R>
void require_square(const Matrix<R>& a) {
  if (!a.square()) throw SizeMismatch("determinant of non-square matrix " + a.shape());
}

}  // namespace detail

template <CommutativeRing R>
R det_cofactor(const Matrix<R>& a) {
  detail::require_square(a);
  const std::size_t n = a.rows();
  if (n == 0) return one_like(a.unit());
  if (n == 1) return a(0, 0);
  if (n == 2) return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
  R acc = zero_like(a.unit());
  for (std::size_t j = 0; j < n; ++j) {
    if (is_zero(a(0, j))) continue;
    const R term = a(0, j) * det_cofactor(minor_matrix(a, 0, j));
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

template <ExactDivisionRing R>
R det_bareiss(Matrix<R> m) {
  detail::require_square(m);
  const std::size_t n = m.rows();
  if (n == 0) return one_like(m.unit());
  bool negate = false;
  R previous = one_like(m.unit());
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(m(k, k))) {
      std::size_t pivot = k + 1;
      while (pivot < n && is_zero(m(pivot, k))) ++pivot;
      if (pivot == n) return zero_like(m.unit());
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(pivot, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = exact_divide(m(i, j) * m(k, k) - m(i, k) * m(k, j), previous);
      m(i, k) = zero_like(m.unit());
    }
    previous = m(k, k);
  }
  return negate ? -m(n - 1, n - 1) : m(n - 1, n - 1);
}

/// Coefficients c_0..c_n of det(t*I - A), lowest degree first, by Berkowitz's
/// division-free recurrence.
template <CommutativeRing R>
std::vector<R> charpoly_berkowitz(const Matrix<R>& a) {
  detail::require_square(a);
  const std::size_t n = a.rows();
  const R zero = zero_like(a.unit());
  const R one = one_like(a.unit());
  if (n == 0) return {one};
  // c holds coefficients highest degree first while building.
  std::vector<R> c{one, -a(0, 0)};
  for (std::size_t r = 1; r < n; ++r) {
    // t_0 = 1, t_1 = -a_rr, t_{k+2} = -R M^k S, with M the leading r x r block,
    // R = row r left of the diagonal, S = column r above the diagonal.
    std::vector<R> t(r + 2, zero);
    t[0] = one;
    t[1] = -a(r, r);
    std::vector<R> v(r, zero);
    for (std::size_t i = 0; i < r; ++i) v[i] = a(i, r);
    for (std::size_t k = 0; k < r; ++k) {
      R dot = zero;
      for (std::size_t i = 0; i < r; ++i) dot = dot + a(r, i) * v[i];
      t[k + 2] = -dot;
      if (k + 1 < r) {
        std::vector<R> w(r, zero);
        for (std::size_t i = 0; i < r; ++i)
          for (std::size_t j = 0; j < r; ++j) w[i] = w[i] + a(i, j) * v[j];
        v = std::move(w);
      }
    }
    std::vector<R> next(r + 2, zero);
    for (std::size_t i = 0; i < r + 2; ++i)
      for (std::size_t j = 0; j <= std::min(i, r); ++j) next[i] = next[i] + t[i - j] * c[j];
    c = std::move(next);
  }
  return {c.rbegin(), c.rend()};
}

template <CommutativeRing R>
R det_berkowitz(const Matrix<R>& a) {
  const auto c = charpoly_berkowitz(a);
  return a.rows() % 2 == 0 ? c[0] : -c[0];
}

template <CommutativeRing R>
  requires is_field_v<R>
R det_gauss(Matrix<R> m) {
  detail::require_square(m);
  const std::size_t n = m.rows();
  R det = one_like(m.unit());
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && is_zero(m(pivot, k))) ++pivot;
    if (pivot == n) return zero_like(m.unit());
    if (pivot != k) {
      for (std::size_t j = k; j < n; ++j) std::swap(m(k, j), m(pivot, j));
      det = -det;
    }
    det = det * m(k, k);
    const R inv = inverse(m(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      if (is_zero(m(i, k))) continue;
      const R f = m(i, k) * inv;
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) = m(i, j) - f * m(k, j);
    }
  }
  return det;
}

/// Rank by row reduction over a field.
template <CommutativeRing R>
  requires is_field_v<R>
std::size_t rank_gauss(Matrix<R> m) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && is_zero(m(pivot, col))) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != rank)
      for (std::size_t j = col; j < m.cols(); ++j) std::swap(m(rank, j), m(pivot, j));
    const R inv = inverse(m(rank, col));
    for (std::size_t i = rank + 1; i < m.rows(); ++i) {
      if (is_zero(m(i, col))) continue;
      const R f = m(i, col) * inv;
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) = m(i, j) - f * m(rank, j);
    }
    ++rank;
  }
  return rank;
}

template <CommutativeRing R>
R determinant(const Matrix<R>& a) {
  if constexpr (is_field_v<R>) {
    return det_gauss(a);
  } else if constexpr (ExactDivisionRing<R>) {
    return a.rows() <= 3 ? det_cofactor(a) : det_bareiss(a);
  } else {
    return det_berkowitz(a);
  }
}

template <CommutativeRing R>
Matrix<R> adjugate_cofactor(const Matrix<R>& a) {
  detail::require_square(a);
  const std::size_t n = a.rows();
  Matrix<R> adj = Matrix<R>::zeros(n, n, a.unit());
  if (n == 1) {
    adj(0, 0) = one_like(a.unit());
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const R m = det_cofactor(minor_matrix(a, j, i));
      adj(i, j) = (i + j) % 2 == 0 ? m : -m;
    }
  return adj;
}

/// adj(A) = f_A(A) with f_A(t) = (P_A(0) - P_A(t)) / t and P_A(t) = det(A - tI).
/// The characteristic polynomial comes from Berkowitz, so no division by
/// integers is needed and the formula holds in every characteristic.
template <CommutativeRing R>
Matrix<R> adjugate_charpoly(const Matrix<R>& a) {
  auto c = charpoly_berkowitz(a);  // det(tI - A)
  const std::size_t n = a.rows();
  if (n % 2 == 1)
    for (auto& v : c) v = -v;  // now det(A - tI)
  // f_A(t) = -(c_1 + c_2 t + ... + c_n t^{n-1}); Horner on matrices.
  Matrix<R> acc = Matrix<R>::zeros(n, n, a.unit());
  const Matrix<R> id = Matrix<R>::identity(n, a.unit());
  for (std::size_t k = n; k >= 1; --k) acc = acc * a + id.scaled(-c[k]);
  return acc;
}

template <class R>
std::ostream& operator<<(std::ostream& os, const Matrix<R>& a) {
  using weylcurve::to_string;
  os << '[';
  for (std::size_t i = 0; i < a.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < a.cols(); ++j) os << (j ? ", " : "") << to_string(a(i, j));
    os << ']';
  }
  return os << ']';
}

}  // namespace weylcurve
