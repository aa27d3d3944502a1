#pragma once

// Complex Clifford algebra Cl_5 acting on C^4 through the matrices
// kappa(e_1), ..., kappa(e_5), with e_5 identified with the Reeb field xi.
//
// Hermitian products are conjugate-linear in the second slot. With that
// convention sigma_H(psi_0) = -i deta; the opposite convention flips the sign.

#include <array>
#include <stdexcept>

#include "swcheck/extalg.hpp"
#include "swcheck/small_matrix.hpp"

namespace swcheck {

/// Frame coordinates (e_1, e_2, e_3, e_4, xi) of a tangent vector.
template <class R = double>
using FrameVector = std::array<R, 5>;

template <class C = GaussInt>
Matrix4<C> gamma(int i) {
  using Entries = std::array<std::array<std::array<int, 2>, 4>, 4>;
  // {re, im} pairs
  static constexpr std::array<Entries, 5> kTable = {{
      {{{{{0, 0}, {0, 1}, {0, 0}, {0, 0}}},
        {{{0, 1}, {0, 0}, {0, 0}, {0, 0}}},
        {{{0, 0}, {0, 0}, {0, 0}, {0, 1}}},
        {{{0, 0}, {0, 0}, {0, 1}, {0, 0}}}}},
      {{{{{0, 0}, {1, 0}, {0, 0}, {0, 0}}},
        {{{-1, 0}, {0, 0}, {0, 0}, {0, 0}}},
        {{{0, 0}, {0, 0}, {0, 0}, {-1, 0}}},
        {{{0, 0}, {0, 0}, {1, 0}, {0, 0}}}}},
      {{{{{0, 0}, {0, 0}, {0, 0}, {1, 0}}},
        {{{0, 0}, {0, 0}, {-1, 0}, {0, 0}}},
        {{{0, 0}, {1, 0}, {0, 0}, {0, 0}}},
        {{{-1, 0}, {0, 0}, {0, 0}, {0, 0}}}}},
      {{{{{0, 0}, {0, 0}, {0, 0}, {0, 1}}},
        {{{0, 0}, {0, 0}, {0, -1}, {0, 0}}},
        {{{0, 0}, {0, -1}, {0, 0}, {0, 0}}},
        {{{0, 1}, {0, 0}, {0, 0}, {0, 0}}}}},
      {{{{{0, 1}, {0, 0}, {0, 0}, {0, 0}}},
        {{{0, 0}, {0, -1}, {0, 0}, {0, 0}}},
        {{{0, 0}, {0, 0}, {0, 1}, {0, 0}}},
        {{{0, 0}, {0, 0}, {0, 0}, {0, -1}}}}},
  }};
  if (i < 1 || i > 5) throw std::out_of_range("gamma: frame index must be in 1..5");
  return Matrix4<C>::from_ints(kTable[static_cast<std::size_t>(i - 1)]);
}

/// The spinor of the constant function 1, spanning the -2i eigenspace of kappa(deta).
template <class C = Complex>
SpinorValue<C> psi0() {
  SpinorValue<C> s;
  s[3] = ScalarTraits<C>::from_ints(1);
  return s;
}

/// Matrix of Clifford multiplication by sum_i v_i e_i.
template <class C, class R>
Matrix4<C> clifford_vector_matrix(const FrameVector<R>& v) {
  Matrix4<C> m;
  for (int i = 1; i <= 5; ++i) {
    if (v[static_cast<std::size_t>(i - 1)] == R{}) continue;
    m += C(v[static_cast<std::size_t>(i - 1)]) * gamma<C>(i);
  }
  return m;
}

template <class C, class R>
SpinorValue<C> clifford_vector(const FrameVector<R>& v, const SpinorValue<C>& psi) {
  return clifford_vector_matrix<C>(v) * psi;
}

/// Matrix of sum_{i<j} w_ij kappa(e_i) kappa(e_j).
template <class C>
Matrix4<C> clifford_matrix(const KForm<C>& w) {
  if (w.degree() != 2) throw std::invalid_argument("clifford_two_form: expected a 2-form");
  Matrix4<C> m;
  for (std::size_t p = 0; p < w.size(); ++p) {
    if (is_zero(w[p])) continue;
    const FormMask mask = mask_at(2, static_cast<int>(p));
    const int i = std::countr_zero(mask) + 1;
    const int j = std::countr_zero(mask & (mask - 1)) + 1;
    m += w[p] * (gamma<C>(i) * gamma<C>(j));
  }
  return m;
}

template <class C>
SpinorValue<C> clifford_two_form(const KForm<C>& w, const SpinorValue<C>& psi) {
  return clifford_matrix(w) * psi;
}

template <class C>
struct DetaProjectors {
  Matrix4<C> plus_2i;
  Matrix4<C> zero;
  Matrix4<C> minus_2i;
};

/// Spectral projectors of kappa(deta) for the eigenvalues 2i, 0, -2i, built by
/// Lagrange interpolation P_l = prod_{m != l} (K - m) / (l - m).
template <class C = ExactComplex>
DetaProjectors<C> deta_eigenprojectors() {
  const Matrix4<C> k = clifford_matrix(deta_form<C>());
  const Matrix4<C> id = Matrix4<C>::identity();
  const std::array<C, 3> eig = {ScalarTraits<C>::from_ints(0, 2), ScalarTraits<C>::from_ints(0),
                                ScalarTraits<C>::from_ints(0, -2)};
  std::array<Matrix4<C>, 3> proj;
  for (std::size_t l = 0; l < 3; ++l) {
    Matrix4<C> p = id;
    for (std::size_t m = 0; m < 3; ++m) {
      if (m == l) continue;
      const C scale = ScalarTraits<C>::from_ints(1) / (eig[l] - eig[m]);
      p = p * (scale * (k - eig[m] * id));
    }
    proj[l] = p;
  }
  return {proj[0], proj[1], proj[2]};
}

/// sigma_H(psi) = sum_{i<j<=4} <e_i e_j psi, psi> e^i ∧ e^j.
template <class C>
KForm<C> sigma_H(const SpinorValue<C>& psi) {
  KForm<C> f(2);
  for (int i = 1; i <= 4; ++i) {
    for (int j = i + 1; j <= 4; ++j) {
      f.set(mask_of({i, j}), inner(gamma<C>(i) * (gamma<C>(j) * psi), psi));
    }
  }
  return f;
}

/// sigma_H evaluated through the density matrix rho = psi psi^H, using
/// <M psi, psi> = tr(M rho). Exact whenever rho is, even if psi is not.
template <class C>
KForm<C> sigma_H_from_density(const Matrix4<C>& rho) {
  KForm<C> f(2);
  for (int i = 1; i <= 4; ++i) {
    for (int j = i + 1; j <= 4; ++j) {
      f.set(mask_of({i, j}), (gamma<C>(i) * gamma<C>(j) * rho).trace());
    }
  }
  return f;
}

/// sigma(psi)(X, Y) = <X.Y.psi, psi> + <X, Y> |psi|^2 for arbitrary frame vectors.
template <class C, class R>
C sigma_pair(const SpinorValue<C>& psi, const FrameVector<R>& x, const FrameVector<R>& y) {
  R dot{};
  for (std::size_t k = 0; k < 5; ++k) dot += x[k] * y[k];
  const SpinorValue<C> xy = clifford_vector(x, clifford_vector(y, psi));
  return inner(xy, psi) + C(dot) * C(norm_sq(psi));
}

/// sigma(psi) on all ten frame pairs.
template <class C>
KForm<C> sigma_full(const SpinorValue<C>& psi) {
  KForm<C> f(2);
  for (int i = 1; i <= 5; ++i) {
    for (int j = i + 1; j <= 5; ++j) {
      f.set(mask_of({i, j}), inner(gamma<C>(i) * (gamma<C>(j) * psi), psi));
    }
  }
  return f;
}

}  // namespace swcheck
