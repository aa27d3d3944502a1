#pragma once

// Webster curvature algebra at a single point, in the orthonormal frame
// {e_1, e_2 = J e_1, e_3, e_4 = J e_3, xi}.
//
// The Webster-Ricci tensor takes values in iR; it is stored as the real
// symmetric matrix R with Ric = i R. The Ricci form is
// rho_H(X, Y) = g(X, J R Y), so its frame coefficients are (J R)_{ij}.

#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>

#include "swcheck/cliff5.hpp"
#include "swcheck/extalg.hpp"

namespace swcheck {

template <class R = double>
using RealMatrix5 = std::array<std::array<R, 5>, 5>;

/// J in the adapted frame: J e_1 = e_2, J e_3 = e_4, J xi = 0.
template <class R = double>
RealMatrix5<R> frame_j() {
  RealMatrix5<R> j{};
  j[1][0] = R(1);
  j[0][1] = R(-1);
  j[3][2] = R(1);
  j[2][3] = R(-1);
  return j;
}

template <class R>
RealMatrix5<R> operator*(const RealMatrix5<R>& a, const RealMatrix5<R>& b) {
  RealMatrix5<R> c{};
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t k = 0; k < 5; ++k)
      for (std::size_t j = 0; j < 5; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

template <class R>
FrameVector<R> operator*(const RealMatrix5<R>& a, const FrameVector<R>& v) {
  FrameVector<R> r{};
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) r[i] += a[i][j] * v[j];
  return r;
}

template <class R>
R dot(const FrameVector<R>& a, const FrameVector<R>& b) {
  R s{};
  for (std::size_t k = 0; k < 5; ++k) s += a[k] * b[k];
  return s;
}

template <class R>
FrameVector<R> frame_basis(int i) {
  FrameVector<R> v{};
  v[static_cast<std::size_t>(i - 1)] = R(1);
  return v;
}

/// deta(X, Y) = g(J X, Y) on frame coordinates.
template <class R>
R deta_pair(const FrameVector<R>& x, const FrameVector<R>& y) {
  return dot(frame_j<R>() * x, y);
}

enum class RicciFormConvention {
  metric_j_ric,  ///< rho_H(X, Y) = g(X, J Ric Y): coefficients (J R)_{ij}
  ric_j,         ///< rho_H(X, Y) = Ric(X, J Y): coefficients (R J)_{ij}
};

template <class R = double>
struct CurvatureData {
  RealMatrix5<R> ric{};
  R s{};
  KForm<complex_of_t<R>> rho_H{2};
};

/// First violated admissibility constraint on a Ricci matrix, if any.
/// Comparisons are exact.
template <class R>
std::optional<std::string> ricci_violation(const RealMatrix5<R>& r) {
  auto name = [](int i, int j) { return "R" + std::to_string(i) + std::to_string(j); };
  for (int i = 1; i <= 5; ++i)
    for (int j = i + 1; j <= 5; ++j)
      if (r[i - 1][j - 1] != r[j - 1][i - 1])
        return "constraint " + name(i, j) + "=" + name(j, i) + " violated";
  for (int i = 1; i <= 5; ++i)
    if (r[i - 1][4] != R{}) return "constraint " + name(i, 5) + "=0 violated";
  if (r[0][1] != R{}) return std::string("constraint R12=0 violated");
  if (r[2][3] != R{}) return std::string("constraint R34=0 violated");
  if (r[0][0] != r[1][1]) return std::string("constraint R11=R22 violated");
  if (r[2][2] != r[3][3]) return std::string("constraint R33=R44 violated");
  if (r[0][3] != -r[1][2]) return std::string("constraint R14=-R23 violated");
  if (r[1][3] != r[0][2]) return std::string("constraint R24=R13 violated");
  return std::nullopt;
}

template <class R>
R scalar_curvature(const RealMatrix5<R>& r) {
  return r[0][0] + r[1][1] + r[2][2] + r[3][3];
}

/// Ricci form coefficients without any admissibility check.
template <class R>
KForm<complex_of_t<R>> ricci_form_of(const RealMatrix5<R>& r,
                                     RicciFormConvention conv = RicciFormConvention::metric_j_ric) {
  using C = complex_of_t<R>;
  const auto j = frame_j<R>();
  const auto m = conv == RicciFormConvention::metric_j_ric ? j * r : r * j;
  KForm<C> f(2);
  for (int a = 1; a <= 4; ++a)
    for (int b = a + 1; b <= 4; ++b) f.set(mask_of({a, b}), C(m[a - 1][b - 1]));
  return f;
}

template <class R>
void require_admissible(const RealMatrix5<R>& r) {
  if (auto v = ricci_violation(r)) throw std::invalid_argument("inadmissible Ricci tensor: " + *v);
}

/// Validated curvature data with s and rho_H filled in.
template <class R>
CurvatureData<R> make_curvature_data(const RealMatrix5<R>& r) {
  require_admissible(r);
  return {r, scalar_curvature(r), ricci_form_of(r)};
}

/// Admissible Ricci matrix from its free parameters (R11, R33, R13, R14).
template <class R>
RealMatrix5<R> admissible_ricci(R r11, R r33, R r13, R r14) {
  RealMatrix5<R> r{};
  r[0][0] = r[1][1] = r11;
  r[2][2] = r[3][3] = r33;
  r[0][2] = r[2][0] = r13;
  r[1][3] = r[3][1] = r13;
  r[0][3] = r[3][0] = r14;
  r[1][2] = r[2][1] = -r14;
  return r;
}

inline CurvatureData<double> random_admissible_ricci(std::uint64_t seed, double scale) {
  if (!(scale > 0.0)) throw std::invalid_argument("random_admissible_ricci: scale must be positive");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-scale, scale);
  const double a = u(rng), b = u(rng), c = u(rng), d = u(rng);
  return make_curvature_data(admissible_ricci(a, b, c, d));
}

template <class R>
KForm<complex_of_t<R>> ricci_form(const CurvatureData<R>& c,
                                  RicciFormConvention conv = RicciFormConvention::metric_j_ric) {
  require_admissible(c.ric);
  return ricci_form_of(c.ric, conv);
}

template <class R>
KForm<complex_of_t<R>> rho_plus(const CurvatureData<R>& c,
                                RicciFormConvention conv = RicciFormConvention::metric_j_ric) {
  return sd_project(ricci_form(c, conv)).plus;
}

/// max-norm of rho_H^+ + (s/4) deta.
template <class R>
double rho_plus_residual(const CurvatureData<R>& c) {
  using C = complex_of_t<R>;
  const C quarter_s = C(c.s) * ScalarTraits<C>::ratio(1, 4);
  return max_norm(rho_plus(c) + quarter_s * deta_form<C>());
}

// ---------------------------------------------------------------------------
// Torsion

template <class R = double>
struct TorsionEndomorphism {
  RealMatrix5<R> tau{};
};

template <class R>
std::optional<std::string> torsion_violation(const TorsionEndomorphism<R>& t) {
  const auto& m = t.tau;
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i + 1; j < 5; ++j)
      if (m[i][j] != m[j][i]) return std::string("torsion is not self-adjoint");
  for (std::size_t i = 0; i < 5; ++i)
    if (m[i][4] != R{}) return std::string("torsion does not annihilate xi");
  const auto j = frame_j<R>();
  const auto tj = m * j;
  const auto jt = j * m;
  for (std::size_t a = 0; a < 5; ++a)
    for (std::size_t b = 0; b < 5; ++b)
      if (tj[a][b] != -jt[a][b]) return std::string("torsion does not anticommute with J");
  return std::nullopt;
}

/// tau = (S + J S J) / 2 for a random symmetric S on H: symmetric and
/// anticommuting with J by construction.
inline TorsionEndomorphism<double> random_admissible_torsion(std::uint64_t seed, double scale) {
  if (!(scale > 0.0)) throw std::invalid_argument("random_admissible_torsion: scale must be positive");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-scale, scale);
  RealMatrix5<double> s{};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t k = i; k < 4; ++k) s[i][k] = s[k][i] = u(rng);
  const auto j = frame_j<double>();
  const auto jsj = j * s * j;
  TorsionEndomorphism<double> t;
  for (std::size_t a = 0; a < 5; ++a)
    for (std::size_t b = 0; b < 5; ++b) t.tau[a][b] = 0.5 * (s[a][b] + jsj[a][b]);
  return t;
}

/// B(X, Y) = (i/2) sum_a g(B_a(X, Y), J e_a) with
/// B_a(X, Y) = deta(X, Y) tau(e_a) + deta(e_a, X) tau(Y) + deta(Y, e_a) tau(X).
template <class R>
complex_of_t<R> bianchi_B(const TorsionEndomorphism<R>& t, const FrameVector<R>& x,
                          const FrameVector<R>& y) {
  using C = complex_of_t<R>;
  if (x[4] != R{} || y[4] != R{}) throw std::invalid_argument("bianchi_B: arguments must be horizontal");
  const auto j = frame_j<R>();
  const auto tx = t.tau * x;
  const auto ty = t.tau * y;
  R sum{};
  for (int a = 1; a <= 4; ++a) {
    const auto ea = frame_basis<R>(a);
    const auto tea = t.tau * ea;
    FrameVector<R> ba{};
    const R c1 = deta_pair(x, y), c2 = deta_pair(ea, x), c3 = deta_pair(y, ea);
    for (std::size_t k = 0; k < 5; ++k) ba[k] = c1 * tea[k] + c2 * ty[k] + c3 * tx[k];
    sum += dot(ba, j * ea);
  }
  return ScalarTraits<C>::ratio(1, 2) * imag_unit<C>() * C(sum);
}

/// max |B(e_a, e_b)| over the six horizontal frame pairs.
template <class R>
double bianchi_residual(const TorsionEndomorphism<R>& t) {
  double m = 0.0;
  for (int a = 1; a <= 4; ++a)
    for (int b = a + 1; b <= 4; ++b)
      m = std::max(m, magnitude(bianchi_B(t, frame_basis<R>(a), frame_basis<R>(b))));
  return m;
}

/// The 2-form part of Ric reconstructed from the symmetric data and the
/// Bianchi correction: (i/2)(R(X, JY) - R(Y, JX)) + B(X, Y).
template <class R>
complex_of_t<R> ricci_two_form_part(const RealMatrix5<R>& r, const TorsionEndomorphism<R>& t,
                                    const FrameVector<R>& x, const FrameVector<R>& y) {
  using C = complex_of_t<R>;
  const auto j = frame_j<R>();
  const R sym = dot(x, r * (j * y)) - dot(y, r * (j * x));
  return ScalarTraits<C>::ratio(1, 2) * imag_unit<C>() * C(sym) + bianchi_B(t, x, y);
}

/// max over horizontal frame pairs of |Ric(X, Y) - i rho_H(X, Y)|.
template <class R>
double ric_identity_check(const CurvatureData<R>& c, const TorsionEndomorphism<R>& t = {}) {
  using C = complex_of_t<R>;
  const auto rho = ricci_form_of(c.ric);
  double m = 0.0;
  for (int a = 1; a <= 4; ++a) {
    for (int b = a + 1; b <= 4; ++b) {
      const auto x = frame_basis<R>(a), y = frame_basis<R>(b);
      const C lhs = ricci_two_form_part(c.ric, t, x, y);
      m = std::max(m, magnitude(lhs - imag_unit<C>() * rho.at(mask_of({a, b}))));
    }
  }
  return m;
}

// ---------------------------------------------------------------------------
// (4,0) curvature tensor

using ComplexFrameVector = std::array<Complex, 5>;

/// Z_a = (e_{2a-1} - i e_{2a}) / sqrt(2), a = 1, 2.
inline ComplexFrameVector z_vector(int a) {
  const double r = 1.0 / std::sqrt(2.0);
  ComplexFrameVector v{};
  v[static_cast<std::size_t>(2 * a - 2)] = r;
  v[static_cast<std::size_t>(2 * a - 1)] = Complex(0, -r);
  return v;
}

inline ComplexFrameVector conj(const ComplexFrameVector& v) {
  ComplexFrameVector r;
  for (std::size_t k = 0; k < 5; ++k) r[k] = std::conj(v[k]);
  return r;
}

/// Complex basis {Z_1, Z_2, conj Z_1, conj Z_2, xi}.
inline std::array<ComplexFrameVector, 5> complex_basis() {
  const auto xi = frame_basis<double>(5);
  return {z_vector(1), z_vector(2), conj(z_vector(1)), conj(z_vector(2)),
          ComplexFrameVector{xi[0], xi[1], xi[2], xi[3], xi[4]}};
}

struct CurvatureTensor4 {
  // entries[a][b][c][d] = R(e_a, e_b, e_c, e_d), zero-based frame indices.
  std::array<std::array<std::array<std::array<Complex, 5>, 5>, 5>, 5> entries{};

  Complex& operator()(int a, int b, int c, int d) {
    return entries[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]
                  [static_cast<std::size_t>(c)][static_cast<std::size_t>(d)];
  }
  const Complex& operator()(int a, int b, int c, int d) const {
    return entries[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]
                  [static_cast<std::size_t>(c)][static_cast<std::size_t>(d)];
  }

  /// Complex-multilinear evaluation.
  Complex operator()(const ComplexFrameVector& x, const ComplexFrameVector& y,
                     const ComplexFrameVector& z, const ComplexFrameVector& v) const {
    Complex s = 0;
    for (int a = 0; a < 5; ++a) {
      if (x[a] == 0.0) continue;
      for (int b = 0; b < 5; ++b) {
        if (y[b] == 0.0) continue;
        for (int c = 0; c < 5; ++c) {
          if (z[c] == 0.0) continue;
          for (int d = 0; d < 5; ++d) s += (*this)(a, b, c, d) * x[a] * y[b] * z[c] * v[d];
        }
      }
    }
    return s;
  }
};

/// A curvature tensor of Kaehler type whose Webster-Ricci contraction is
/// i rho_H for the given Ricci matrix (which must commute with J).
inline CurvatureTensor4 curvature_tensor_from(const CurvatureData<double>& c) {
  require_admissible(c.ric);
  const auto basis = complex_basis();
  // r_{mu nu} = R(Z_mu, conj Z_nu), complex-bilinear.
  std::array<std::array<Complex, 2>, 2> r{};
  Complex trace = 0;
  for (int m = 0; m < 2; ++m) {
    for (int n = 0; n < 2; ++n) {
      const auto& zm = basis[static_cast<std::size_t>(m)];
      const auto& zn = basis[static_cast<std::size_t>(n + 2)];
      for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t k = 0; k < 5; ++k) r[m][n] += zm[i] * c.ric[i][k] * zn[k];
    }
    trace += r[m][m];
  }
  auto delta = [](int a, int b) { return a == b ? 1.0 : 0.0; };
  // Tensor on the complex basis, index 0..1 = Z, 2..3 = conj Z, 4 = xi.
  std::array<std::array<std::array<std::array<Complex, 5>, 5>, 5>, 5> k{};
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      for (int g = 0; g < 2; ++g) {
        for (int d = 0; d < 2; ++d) {
          const Complex val =
              (r[a][b] * delta(g, d) + r[g][b] * delta(a, d) + r[a][d] * delta(g, b) +
               r[g][d] * delta(a, b)) / 4.0 -
              trace / 12.0 * (delta(a, b) * delta(g, d) + delta(g, b) * delta(a, d));
          k[a][b + 2][g][d + 2] = val;
          k[b + 2][a][g][d + 2] = -val;
          k[a][b + 2][d + 2][g] = -val;
          k[b + 2][a][d + 2][g] = val;
        }
      }
    }
  }
  // Dual coframe {theta^1, theta^2, conj theta^1, conj theta^2, eta} evaluated on e_j.
  std::array<ComplexFrameVector, 5> dual{};
  const double r2 = 1.0 / std::sqrt(2.0);
  dual[0] = {r2, Complex(0, r2), 0, 0, 0};
  dual[1] = {0, 0, r2, Complex(0, r2), 0};
  dual[2] = {r2, Complex(0, -r2), 0, 0, 0};
  dual[3] = {0, 0, r2, Complex(0, -r2), 0};
  dual[4] = {0, 0, 0, 0, 1};
  CurvatureTensor4 t;
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b)
      for (int cc = 0; cc < 5; ++cc)
        for (int d = 0; d < 5; ++d) {
          Complex s = 0;
          for (int m = 0; m < 4; ++m)
            for (int n = 0; n < 4; ++n)
              for (int p = 0; p < 4; ++p)
                for (int q = 0; q < 4; ++q) {
                  if (k[m][n][p][q] == 0.0) continue;
                  s += k[m][n][p][q] * dual[m][a] * dual[n][b] * dual[p][cc] * dual[q][d];
                }
          t(a, b, cc, d) = s;
        }
  return t;
}

/// Ric(X, Y) = sum_a R(X, Y, Z_a, conj Z_a).
inline Complex ricci_contraction(const CurvatureTensor4& t, const ComplexFrameVector& x,
                                 const ComplexFrameVector& y) {
  Complex s = 0;
  for (int a = 1; a <= 2; ++a) s += t(x, y, z_vector(a), conj(z_vector(a)));
  return s;
}

struct SymmetryReport {
  double antisymmetry = 0;  ///< first and second pair antisymmetry
  double conjugation = 0;   ///< conj R(X,Y,Z,V) = R(conj X, ..., conj V)
  double exchange = 0;      ///< R(A, conj B, C, conj D) = R(C, conj B, A, conj D)
  double vanishing = 0;     ///< R(A, B, ., .) = 0 for A, B of type (1,0)

  double max() const { return std::max({antisymmetry, conjugation, exchange, vanishing}); }
};

inline SymmetryReport symmetry_check(const CurvatureTensor4& t) {
  SymmetryReport rep;
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b)
      for (int c = 0; c < 5; ++c)
        for (int d = 0; d < 5; ++d) {
          rep.antisymmetry = std::max({rep.antisymmetry, std::abs(t(a, b, c, d) + t(b, a, c, d)),
                                       std::abs(t(a, b, c, d) + t(a, b, d, c))});
        }
  const auto basis = complex_basis();
  for (const auto& x : basis)
    for (const auto& y : basis)
      for (const auto& z : basis)
        for (const auto& v : basis)
          rep.conjugation = std::max(
              rep.conjugation, std::abs(std::conj(t(x, y, z, v)) - t(conj(x), conj(y), conj(z), conj(v))));
  for (int a = 1; a <= 2; ++a)
    for (int b = 1; b <= 2; ++b)
      for (int c = 1; c <= 2; ++c)
        for (int d = 1; d <= 2; ++d) {
          const auto za = z_vector(a), zb = conj(z_vector(b)), zc = z_vector(c), zd = conj(z_vector(d));
          rep.exchange = std::max(rep.exchange, std::abs(t(za, zb, zc, zd) - t(zc, zb, za, zd)));
        }
  for (int a = 1; a <= 2; ++a)
    for (int b = 1; b <= 2; ++b)
      for (const auto& z : basis)
        for (const auto& v : basis)
          rep.vanishing = std::max(rep.vanishing, std::abs(t(z_vector(a), z_vector(b), z, v)));
  return rep;
}

}  // namespace swcheck
