#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "swcheck/scalar.hpp"

namespace swcheck {

/// An element of the spinor fiber C^4.
template <class C = Complex>
struct SpinorValue {
  std::array<C, 4> c{};

  C& operator[](std::size_t k) { return c[k]; }
  const C& operator[](std::size_t k) const { return c[k]; }

  SpinorValue& operator+=(const SpinorValue& o) {
    for (std::size_t k = 0; k < 4; ++k) c[k] += o.c[k];
    return *this;
  }
  SpinorValue& operator-=(const SpinorValue& o) {
    for (std::size_t k = 0; k < 4; ++k) c[k] -= o.c[k];
    return *this;
  }
  SpinorValue& operator*=(const C& s) {
    for (auto& x : c) x *= s;
    return *this;
  }
  friend SpinorValue operator+(SpinorValue a, const SpinorValue& b) { return a += b; }
  friend SpinorValue operator-(SpinorValue a, const SpinorValue& b) { return a -= b; }
  friend SpinorValue operator*(const C& s, SpinorValue a) { return a *= s; }
  friend bool operator==(const SpinorValue&, const SpinorValue&) = default;
};

/// Hermitian product, conjugate-linear in the second argument.
template <class C>
C inner(const SpinorValue<C>& a, const SpinorValue<C>& b) {
  using std::conj;
  C sum{};
  for (std::size_t k = 0; k < 4; ++k) sum += a[k] * conj(b[k]);
  return sum;
}

template <class C>
typename ScalarTraits<C>::real_type norm_sq(const SpinorValue<C>& a) {
  using std::real;
  return real(inner(a, a));
}

template <class C>
double max_abs(const SpinorValue<C>& a) {
  double m = 0.0;
  for (const auto& x : a.c) m = std::max(m, magnitude(x));
  return m;
}

/// Dense 4x4 matrix, row-major.
template <class C = Complex>
struct Matrix4 {
  std::array<std::array<C, 4>, 4> m{};

  static Matrix4 identity() {
    Matrix4 r;
    for (std::size_t k = 0; k < 4; ++k) r.m[k][k] = ScalarTraits<C>::from_ints(1);
    return r;
  }
  static Matrix4 from_ints(const std::array<std::array<std::array<int, 2>, 4>, 4>& entries) {
    Matrix4 r;
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 4; ++j) {
        r.m[i][j] = ScalarTraits<C>::from_ints(entries[i][j][0], entries[i][j][1]);
      }
    }
    return r;
  }

  C& operator()(std::size_t i, std::size_t j) { return m[i][j]; }
  const C& operator()(std::size_t i, std::size_t j) const { return m[i][j]; }

  Matrix4& operator+=(const Matrix4& o) {
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) m[i][j] += o.m[i][j];
    return *this;
  }
  Matrix4& operator-=(const Matrix4& o) {
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) m[i][j] -= o.m[i][j];
    return *this;
  }
  Matrix4& operator*=(const C& s) {
    for (auto& row : m)
      for (auto& x : row) x *= s;
    return *this;
  }
  friend Matrix4 operator+(Matrix4 a, const Matrix4& b) { return a += b; }
  friend Matrix4 operator-(Matrix4 a, const Matrix4& b) { return a -= b; }
  friend Matrix4 operator*(const C& s, Matrix4 a) { return a *= s; }
  friend Matrix4 operator-(Matrix4 a) { return a *= ScalarTraits<C>::from_ints(-1); }

  friend Matrix4 operator*(const Matrix4& a, const Matrix4& b) {
    Matrix4 r;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t k = 0; k < 4; ++k)
        for (std::size_t j = 0; j < 4; ++j) r.m[i][j] += a.m[i][k] * b.m[k][j];
    return r;
  }
  friend SpinorValue<C> operator*(const Matrix4& a, const SpinorValue<C>& v) {
    SpinorValue<C> r;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) r[i] += a.m[i][j] * v[j];
    return r;
  }
  friend bool operator==(const Matrix4&, const Matrix4&) = default;

  Matrix4 adjoint() const {
    using std::conj;
    Matrix4 r;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) r.m[i][j] = conj(m[j][i]);
    return r;
  }
  C trace() const { return m[0][0] + m[1][1] + m[2][2] + m[3][3]; }

  SpinorValue<C> column(std::size_t j) const {
    SpinorValue<C> v;
    for (std::size_t i = 0; i < 4; ++i) v[i] = m[i][j];
    return v;
  }
  void set_column(std::size_t j, const SpinorValue<C>& v) {
    for (std::size_t i = 0; i < 4; ++i) m[i][j] = v[i];
  }
};

template <class C>
double max_abs(const Matrix4<C>& a) {
  double r = 0.0;
  for (const auto& row : a.m)
    for (const auto& x : row) r = std::max(r, magnitude(x));
  return r;
}

/// Outer product v w^H.
template <class C>
Matrix4<C> outer(const SpinorValue<C>& v, const SpinorValue<C>& w) {
  using std::conj;
  Matrix4<C> r;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) r.m[i][j] = v[i] * conj(w[j]);
  return r;
}

template <class To, class From>
Matrix4<To> matrix_cast(const Matrix4<From>& a) {
  Matrix4<To> r;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      if constexpr (std::is_same_v<To, Complex>) {
        r.m[i][j] = ScalarTraits<From>::to_complex(a.m[i][j]);
      } else {
        static_assert(ScalarTraits<From>::exact, "exact target needs exact source");
        r.m[i][j] = To(typename ScalarTraits<To>::real_type(a.m[i][j].re),
                       typename ScalarTraits<To>::real_type(a.m[i][j].im));
      }
    }
  }
  return r;
}

/// Result of solving A x = b exactly.
template <class C>
struct ExactSolution {
  std::vector<C> x;
  std::size_t nullity = 0;
};

/// Gaussian elimination over an exact field. Returns nullopt if the system is
/// inconsistent; otherwise a particular solution (free variables set to zero)
/// together with the dimension of the solution space.
template <class C>
std::optional<ExactSolution<C>> solve_exact(std::vector<std::vector<C>> a, std::vector<C> b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a.front().size();
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t p = r;
    while (p < rows && is_zero(a[p][col])) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    std::swap(b[p], b[r]);
    const C inv = ScalarTraits<C>::from_ints(1) / a[r][col];
    for (auto& x : a[r]) x *= inv;
    b[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || is_zero(a[i][col])) continue;
      const C f = a[i][col];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
      b[i] -= f * b[r];
    }
    pivot_cols.push_back(col);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i) {
    if (!is_zero(b[i])) return std::nullopt;
  }
  ExactSolution<C> sol;
  sol.x.assign(cols, C{});
  for (std::size_t i = 0; i < pivot_cols.size(); ++i) sol.x[pivot_cols[i]] = b[i];
  sol.nullity = cols - pivot_cols.size();
  return sol;
}

}  // namespace swcheck
