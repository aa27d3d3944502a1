#pragma once

// Spinor fields, the spinorial connection, Kohn-Dirac and Dirac operators,
// the identification of spinors with (0,*)-forms, and the Seiberg-Witten
// residuals.
//
// Local formula of the spinorial connection along a frame vector e_w:
//   nabla_w psi = e_w(psi) + 1/4 sum_{j != k} omega_jk(e_w) kappa_j kappa_k psi + 1/2 A(e_w) psi
// with omega_jk(e_w) = g(nabla_{e_w} e_j, e_k). Summing over ordered pairs is
// what makes the connection compatible with Clifford multiplication.

#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "swcheck/cliff5.hpp"
#include "swcheck/curvature.hpp"
#include "swcheck/extalg.hpp"
#include "swcheck/models.hpp"
#include "swcheck/poly_expr.hpp"
#include "swcheck/small_matrix.hpp"

namespace swcheck {

/// Weight of the U(1) connection in the spinorial connection (square root of
/// the determinant line).
inline constexpr double kLineBundleWeight = 0.5;

// ---------------------------------------------------------------------------
// Spinor fields

struct SpinorField {
  std::array<PolyExpr, 4> c;

  PolyExpr& operator[](std::size_t k) { return c[k]; }
  const PolyExpr& operator[](std::size_t k) const { return c[k]; }

  SpinorValue<Complex> evaluate(const ChartPoint& p) const {
    SpinorValue<Complex> v;
    for (std::size_t k = 0; k < 4; ++k) v[k] = c[k].evaluate(p);
    return v;
  }
  bool is_zero() const {
    for (const auto& x : c)
      if (!x.is_zero()) return false;
    return true;
  }

  SpinorField& operator+=(const SpinorField& o) {
    for (std::size_t k = 0; k < 4; ++k) c[k] += o.c[k];
    return *this;
  }
  SpinorField& operator-=(const SpinorField& o) {
    for (std::size_t k = 0; k < 4; ++k) c[k] -= o.c[k];
    return *this;
  }
  friend SpinorField operator+(SpinorField a, const SpinorField& b) { return a += b; }
  friend SpinorField operator-(SpinorField a, const SpinorField& b) { return a -= b; }
  friend SpinorField operator*(const PolyExpr& s, SpinorField a) {
    for (auto& x : a.c) x = s * x;
    return a;
  }
  friend bool operator==(const SpinorField&, const SpinorField&) = default;
};

inline SpinorField psi0_field() {
  SpinorField f;
  f[3] = 1.0;
  return f;
}

/// Constant matrix applied to a spinor field.
inline SpinorField mul(const Matrix4<Complex>& m, const SpinorField& f) {
  SpinorField r;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      if (m(i, j) != Complex{} && !f[j].is_zero()) r[i] += PolyExpr(m(i, j)) * f[j];
  return r;
}

/// Componentwise derivative of a spinor field along a vector field.
inline SpinorField directional(const PolyVector& x, const SpinorField& f) {
  SpinorField r;
  for (std::size_t k = 0; k < 4; ++k) r[k] = directional(x, f[k]);
  return r;
}

/// Random field whose components are polynomials of degree <= max_degree.
inline SpinorField random_spinor_field(std::mt19937_64& rng, int max_degree, int terms_per_component = 4) {
  std::uniform_int_distribution<int> var(0, kChartDim - 1);
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  SpinorField f;
  for (auto& comp : f.c) {
    for (int t = 0; t < terms_per_component; ++t) {
      Exponents e{};
      const int d = deg(rng);
      for (int k = 0; k < d; ++k) ++e[static_cast<std::size_t>(var(rng))];
      comp += PolyExpr::monomial(e, Complex(coef(rng), coef(rng)));
    }
  }
  return f;
}

/// 1/4 sum_{j != k} omega_jk kappa_j kappa_k for an so(5)-valued coefficient matrix.
template <class M>
Matrix4<Complex> spin_matrix(const M& omega) {
  Matrix4<Complex> s;
  for (int j = 1; j <= 5; ++j)
    for (int k = 1; k <= 5; ++k) {
      if (j == k) continue;
      const Complex w = omega[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(k - 1)];
      if (w == Complex{}) continue;
      s += (0.25 * w) * (gamma<Complex>(j) * gamma<Complex>(k));
    }
  return s;
}

// ---------------------------------------------------------------------------
// Spinorial connection on a chart model

class SpinConnection {
 public:
  explicit SpinConnection(ChartModel model) : model_(std::move(model)) {
    const auto& f = model_.fields;
    const PolyMatrix deta = exterior_derivative(f.eta);
    PolyMatrix g;
    for (int j = 1; j <= 5; ++j)
      for (int k = 1; k <= 5; ++k)
        g[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(k - 1)] =
            webster_metric(f, deta, f.field(j), f.field(k));
    const auto& gam = model_.connection.gamma;
    for (std::size_t w = 0; w < 5; ++w) {
      for (std::size_t j = 0; j < 5; ++j)
        for (std::size_t k = 0; k < 5; ++k)
          for (std::size_t l = 0; l < 5; ++l)
            if (!gam[w][j][l].is_zero()) omega_[w][j][k] += gam[w][j][l] * g[l][k];
      a_frame_[w] = pair(model_.connection.a, f.field(static_cast<int>(w) + 1));
    }
  }

  const ChartModel& model() const { return model_; }

  /// omega_jk(e_w) at p.
  RealMatrix5<Complex> omega(int w, const ChartPoint& p) const {
    check_index(w);
    RealMatrix5<Complex> m{};
    for (std::size_t j = 0; j < 5; ++j)
      for (std::size_t k = 0; k < 5; ++k) m[j][k] = omega_[static_cast<std::size_t>(w - 1)][j][k].evaluate(p);
    return m;
  }

  Complex a_on_frame(int w, const ChartPoint& p) const {
    check_index(w);
    return a_frame_[static_cast<std::size_t>(w - 1)].evaluate(p);
  }

  /// Zeroth-order part of nabla_w at p: spin term plus line-bundle term.
  Matrix4<Complex> potential(int w, const ChartPoint& p) const {
    return spin_matrix(omega(w, p)) + (kLineBundleWeight * a_on_frame(w, p)) * Matrix4<Complex>::identity();
  }

  /// nabla_w psi at p with e_w(psi) differentiated exactly.
  SpinorValue<Complex> covariant_derivative(int w, const SpinorField& psi, const ChartPoint& p) const {
    check_index(w);
    return directional(model_.fields.field(w), psi).evaluate(p) + potential(w, p) * psi.evaluate(p);
  }

  /// nabla_w psi at p with e_w(psi) from a central difference along e_w(p).
  SpinorValue<Complex> covariant_derivative_fd(int w, const SpinorField& psi, const ChartPoint& p, double h) const {
    check_index(w);
    const auto dir = swcheck::evaluate(model_.fields.field(w), p);
    ChartPoint plus = p, minus = p;
    for (std::size_t a = 0; a < 5; ++a) {
      plus[a] += h * dir[a].real();
      minus[a] -= h * dir[a].real();
    }
    const auto diff = psi.evaluate(plus) - psi.evaluate(minus);
    return Complex(1.0 / (2.0 * h)) * diff + potential(w, p) * psi.evaluate(p);
  }

  /// nabla_w psi as a polynomial spinor field.
  SpinorField covariant_derivative(int w, const SpinorField& psi) const {
    check_index(w);
    const auto wi = static_cast<std::size_t>(w - 1);
    SpinorField r = directional(model_.fields.field(w), psi);
    for (int j = 1; j <= 5; ++j)
      for (int k = 1; k <= 5; ++k) {
        if (j == k) continue;
        const PolyExpr& o = omega_[wi][static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(k - 1)];
        if (o.is_zero()) continue;
        r += PolyExpr(0.25) * o * mul(gamma<Complex>(j) * gamma<Complex>(k), psi);
      }
    if (!a_frame_[wi].is_zero()) r += PolyExpr(kLineBundleWeight) * a_frame_[wi] * psi;
    return r;
  }

  SpinorValue<Complex> kohn_dirac(const SpinorField& psi, const ChartPoint& p) const {
    SpinorValue<Complex> r;
    for (int i = 1; i <= 4; ++i) r += gamma<Complex>(i) * covariant_derivative(i, psi, p);
    return r;
  }
  SpinorValue<Complex> full_dirac(const SpinorField& psi, const ChartPoint& p) const {
    return kohn_dirac(psi, p) + gamma<Complex>(5) * covariant_derivative(5, psi, p);
  }

  SpinorValue<Complex> kohn_dirac_fd(const SpinorField& psi, const ChartPoint& p, double h) const {
    SpinorValue<Complex> r;
    for (int i = 1; i <= 4; ++i) r += gamma<Complex>(i) * covariant_derivative_fd(i, psi, p, h);
    return r;
  }
  SpinorValue<Complex> full_dirac_fd(const SpinorField& psi, const ChartPoint& p, double h) const {
    return kohn_dirac_fd(psi, p, h) + gamma<Complex>(5) * covariant_derivative_fd(5, psi, p, h);
  }

  SpinorField kohn_dirac(const SpinorField& psi) const {
    SpinorField r;
    for (int i = 1; i <= 4; ++i) r += mul(gamma<Complex>(i), covariant_derivative(i, psi));
    return r;
  }
  SpinorField full_dirac(const SpinorField& psi) const {
    return kohn_dirac(psi) + mul(gamma<Complex>(5), covariant_derivative(5, psi));
  }

 private:
  static void check_index(int w) {
    if (w < 1 || w > 5) throw std::out_of_range("spin connection: frame index must be in 1..5");
  }

  ChartModel model_;
  std::array<std::array<std::array<PolyExpr, 5>, 5>, 5> omega_;
  std::array<PolyExpr, 5> a_frame_;
};

// ---------------------------------------------------------------------------
// (0,*)-forms

/// Element of Λ^{0,0} ⊕ Λ^{0,1} ⊕ Λ^{0,2} in the basis
/// (1, conj theta^1, conj theta^2, conj theta^1 ∧ conj theta^2).
template <class C = Complex>
struct FormSpinor {
  C f0{};
  std::array<C, 2> f1{};
  C f2{};

  SpinorValue<C> to_vector() const {
    SpinorValue<C> v;
    v[0] = f0;
    v[1] = f1[0];
    v[2] = f1[1];
    v[3] = f2;
    return v;
  }
  static FormSpinor from_vector(const SpinorValue<C>& v) { return {v[0], {v[1], v[2]}, v[3]}; }
};

/// conj theta^a ∧ (.) on the form basis.
template <class C = GaussInt>
Matrix4<C> wedge_theta_bar(int a) {
  const C one = ScalarTraits<C>::from_ints(1);
  Matrix4<C> m;
  if (a == 1) {
    m(1, 0) = one;
    m(3, 2) = one;
  } else if (a == 2) {
    m(2, 0) = one;
    m(3, 1) = -one;
  } else {
    throw std::out_of_range("wedge_theta_bar: index must be 1 or 2");
  }
  return m;
}

/// Interior product with conj Z_a on the form basis.
template <class C = GaussInt>
Matrix4<C> contract_z_bar(int a) {
  const C one = ScalarTraits<C>::from_ints(1);
  Matrix4<C> m;
  if (a == 1) {
    m(0, 1) = one;
    m(2, 3) = one;
  } else if (a == 2) {
    m(0, 2) = one;
    m(1, 3) = -one;
  } else {
    throw std::out_of_range("contract_z_bar: index must be 1 or 2");
  }
  return m;
}

/// (-1)^{q+1} i on (0,q)-forms.
template <class C = GaussInt>
Matrix4<C> degree_sign() {
  Matrix4<C> m;
  m(0, 0) = ScalarTraits<C>::from_ints(0, -1);
  m(1, 1) = ScalarTraits<C>::from_ints(0, 1);
  m(2, 2) = ScalarTraits<C>::from_ints(0, 1);
  m(3, 3) = ScalarTraits<C>::from_ints(0, -1);
  return m;
}

/// Clifford multiplication by e_i on forms:
///   X . alpha = sum_a [conj(c_a) conj theta^a ∧ alpha - c_a conj Z_a ⌟ alpha] + (-1)^{q+1} i eta(X) alpha
/// with c_a = X_{2a-1} - i X_{2a} (that is sqrt 2 times the (0,1)-part of X).
template <class C = GaussInt>
Matrix4<C> form_clifford_matrix(int i) {
  if (i == 5) return degree_sign<C>();
  if (i < 1 || i > 5) throw std::out_of_range("form_clifford_matrix: frame index must be in 1..5");
  const int a = (i + 1) / 2;
  const C c = i % 2 == 1 ? ScalarTraits<C>::from_ints(1) : ScalarTraits<C>::from_ints(0, -1);
  return conj(c) * wedge_theta_bar<C>(a) - c * contract_z_bar<C>(a);
}

/// The unique linear Phi with Phi(X . alpha) = kappa(X) Phi(alpha) for all
/// frame X and Phi(1) = psi_0, obtained by exact elimination. Throws if no
/// such map exists, if it is not unique, or if it is not unitary.
inline Matrix4<ExactComplex> derive_identification() {
  using C = ExactComplex;
  // Unknowns: Phi(r, c) at index 4 r + c.
  std::vector<std::vector<C>> rows;
  std::vector<C> rhs;
  for (int i = 1; i <= 5; ++i) {
    const auto rho = form_clifford_matrix<C>(i);
    const auto kap = gamma<C>(i);
    // (Phi rho - kappa Phi)(r, c) = sum_m Phi(r, m) rho(m, c) - sum_m kappa(r, m) Phi(m, c)
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 4; ++c) {
        std::vector<C> row(16);
        for (std::size_t m = 0; m < 4; ++m) {
          row[4 * r + m] += rho(m, c);
          row[4 * m + c] -= kap(r, m);
        }
        rows.push_back(std::move(row));
        rhs.emplace_back();
      }
  }
  const auto p0 = psi0<C>();
  for (std::size_t r = 0; r < 4; ++r) {
    std::vector<C> row(16);
    row[4 * r + 0] = C(1);
    rows.push_back(std::move(row));
    rhs.push_back(p0[r]);
  }
  const auto sol = solve_exact(rows, rhs);
  if (!sol) throw std::runtime_error("derive_identification: no intertwiner with Phi(1) = psi0 exists");
  if (sol->nullity != 0) throw std::runtime_error("derive_identification: intertwiner is not unique");
  Matrix4<C> phi;
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) phi(r, c) = sol->x[4 * r + c];
  if (phi.adjoint() * phi != Matrix4<C>::identity())
    throw std::runtime_error("derive_identification: intertwiner is not unitary");
  return phi;
}

/// sqrt(2)-free pieces of dbar and its adjoint on a form-valued field, for a
/// model with vanishing connection coefficients and A = 0.
struct DbarResult {
  SpinorValue<Complex> dbar;          ///< sum_a conj theta^a ∧ nabla_{conj Z_a}
  SpinorValue<Complex> dbar_adjoint;  ///< - sum_a conj Z_a ⌟ nabla_{Z_a}
};

inline void require_flat_connection(const ChartModel& m, const char* who) {
  for (const auto& a : m.connection.gamma)
    for (const auto& b : a)
      for (const auto& c : b)
        if (!c.is_zero()) throw std::invalid_argument(std::string(who) + ": requires vanishing connection coefficients");
  for (const auto& c : m.connection.a)
    if (!c.is_zero()) throw std::invalid_argument(std::string(who) + ": requires A = 0");
}

inline DbarResult dbar_pair(const ChartModel& m, const SpinorField& form_field, const ChartPoint& p) {
  require_flat_connection(m, "dbar_pair");
  const double r2 = 1.0 / std::sqrt(2.0);
  DbarResult res;
  for (int a = 1; a <= 2; ++a) {
    const auto d_re = directional(m.fields.field(2 * a - 1), form_field).evaluate(p);
    const auto d_im = directional(m.fields.field(2 * a), form_field).evaluate(p);
    const auto along_zbar = Complex(r2) * (d_re + Complex(0, 1) * d_im);
    const auto along_z = Complex(r2) * (d_re - Complex(0, 1) * d_im);
    res.dbar += matrix_cast<Complex>(wedge_theta_bar<GaussInt>(a)) * along_zbar;
    res.dbar_adjoint -= matrix_cast<Complex>(contract_z_bar<GaussInt>(a)) * along_z;
  }
  return res;
}

/// max over points of |sqrt 2 (dbar + dbar^*) alpha - Phi^{-1} D_H Phi alpha|.
inline double dbar_identity_residual(const SpinConnection& conn, const Matrix4<Complex>& phi,
                                     const SpinorField& form_field, const std::vector<ChartPoint>& points) {
  const SpinorField spinor = mul(phi, form_field);
  const Matrix4<Complex> phi_inv = phi.adjoint();
  double worst = 0;
  for (const auto& p : points) {
    const auto d = dbar_pair(conn.model(), form_field, p);
    const auto lhs = Complex(std::sqrt(2.0)) * (d.dbar + d.dbar_adjoint);
    const auto rhs = phi_inv * conn.kohn_dirac(spinor, p);
    worst = std::max(worst, max_abs(lhs - rhs));
  }
  return worst;
}

// ---------------------------------------------------------------------------
// Seiberg-Witten residuals

struct SwResidual {
  double r_dirac = 0;
  double r_curv = 0;
  double sigma_vertical = 0;  ///< max-norm of the vertical part of sigma(psi), for reference
};

/// F_A^+ + 1/4 sigma(psi)^+, with sigma^+ the self-dual part of the horizontal component.
template <class C>
KForm<C> curvature_equation_defect(const KForm<C>& f_a, const KForm<C>& sigma_horizontal) {
  const C quarter = ScalarTraits<C>::ratio(1, 4);
  return sd_project(horizontal_split(f_a).horizontal).plus + quarter * sd_project(sigma_horizontal).plus;
}

/// Pair (A, psi) on a chart model; F_A = dA is evaluated on the frame.
inline SwResidual sw_residual(const SpinConnection& conn, const SpinorField& psi, const std::vector<ChartPoint>& points) {
  const auto& f = conn.model().fields;
  const PolyMatrix da = exterior_derivative(conn.model().connection.a);
  std::array<std::array<PolyExpr, 5>, 5> fa;
  for (int a = 1; a <= 5; ++a)
    for (int b = a + 1; b <= 5; ++b)
      fa[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)] = pair(da, f.field(a), f.field(b));
  SwResidual r;
  for (const auto& p : points) {
    r.r_dirac = std::max(r.r_dirac, max_abs(conn.full_dirac(psi, p)));
    KForm<Complex> fa_p(2);
    for (int a = 1; a <= 5; ++a)
      for (int b = a + 1; b <= 5; ++b)
        fa_p.set(mask_of({a, b}), fa[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)].evaluate(p));
    const auto split = horizontal_split(sigma_full(psi.evaluate(p)));
    r.r_curv = std::max(r.r_curv, max_norm(curvature_equation_defect(fa_p, split.horizontal)));
    r.sigma_vertical = std::max(r.sigma_vertical, max_norm(split.vertical));
  }
  return r;
}

/// D_A psi at the point of a synthetic model for a spinor with vanishing
/// frame derivatives: sum_w kappa_w (spin term + 1/2 A(e_w)) psi.
template <class R>
SpinorValue<Complex> synthetic_dirac(const SyntheticModel<R>& m, const SpinorValue<Complex>& psi,
                                     const std::optional<std::array<Complex, 5>>& a = std::nullopt) {
  std::array<Complex, 5> av{};
  if (a) {
    av = *a;
  } else {
    const auto ca = m.canonical_a();
    for (std::size_t w = 0; w < 5; ++w) av[w] = ScalarTraits<complex_of_t<R>>::to_complex(ca[w]);
  }
  SpinorValue<Complex> r;
  for (int w = 1; w <= 5; ++w) {
    RealMatrix5<Complex> om{};
    for (std::size_t j = 0; j < 5; ++j)
      for (std::size_t k = 0; k < 5; ++k) om[j][k] = Complex(to_double(m.omega[static_cast<std::size_t>(w - 1)][j][k]));
    const auto pot = spin_matrix(om) + (kLineBundleWeight * av[static_cast<std::size_t>(w - 1)]) * Matrix4<Complex>::identity();
    r += gamma<Complex>(w) * (pot * psi);
  }
  return r;
}

/// Residuals of a constant spinor on a synthetic model, with F_A = Ric.
template <class R>
SwResidual sw_residual(const SyntheticModel<R>& m, const SpinorValue<Complex>& psi) {
  SwResidual r;
  r.r_dirac = max_abs(synthetic_dirac(m, psi));
  KForm<Complex> fa = form_cast<Complex>(m.f_a());
  const auto split = horizontal_split(sigma_full(psi));
  r.r_curv = max_norm(curvature_equation_defect(fa, split.horizontal));
  r.sigma_vertical = max_norm(split.vertical);
  return r;
}

template <class R>
struct CanonicalSolution {
  SyntheticModel<R> model;
  R s{};
  SpinorValue<Complex> psi;              ///< sqrt(-s) psi_0
  Matrix4<complex_of_t<R>> density;      ///< psi psi^H = -s psi_0 psi_0^H, exact when R is
  KForm<complex_of_t<R>> sigma_H;        ///< i s d eta
  KForm<complex_of_t<R>> rho_plus;       ///< -(s/4) d eta
  KForm<complex_of_t<R>> f_a_plus;       ///< -i (s/4) d eta
  KForm<complex_of_t<R>> curvature_defect;  ///< F_A^+ + sigma^+/4, zero for a solution
};

/// The pair (A, sqrt(-s) psi_0) on the synthetic model with Ric = (s/4) diag(1, 1, 1, 1, 0).
template <class R>
CanonicalSolution<R> canonical_solution(R s, const ConnectionForm<R>& omega = {}) {
  using C = complex_of_t<R>;
  if (!(s < R(0))) throw std::invalid_argument("canonical_solution: scalar curvature must be negative");
  const R quarter = s / R(4);
  CanonicalSolution<R> sol;
  sol.model = synthetic_model(make_curvature_data(admissible_ricci<R>(quarter, quarter, R(0), R(0))),
                              TorsionEndomorphism<R>{}, omega);
  sol.s = s;
  sol.psi = Complex(std::sqrt(-to_double(s))) * psi0<Complex>();
  sol.density = C(-s) * outer(psi0<C>(), psi0<C>());
  sol.sigma_H = sigma_H_from_density(sol.density);
  sol.rho_plus = swcheck::rho_plus(sol.model.curvature);
  sol.f_a_plus = sd_project(sol.model.f_a()).plus;
  sol.curvature_defect = curvature_equation_defect(sol.model.f_a(), sol.sigma_H);
  return sol;
}

/// r_dirac from the literal spinor; r_curv from the exact density route.
template <class R>
SwResidual sw_residual(const CanonicalSolution<R>& sol) {
  SwResidual r = sw_residual(sol.model, sol.psi);
  r.r_curv = max_norm(sol.curvature_defect);
  return r;
}

}  // namespace swcheck
