#pragma once

// Contact metric 5-manifolds given on a single chart (x1, y1, x2, y2, t) by
// polynomial data, plus a pointwise model with prescribed curvature.
//
// Conventions:
//   * vector fields are coordinate 5-tuples, 1-forms are coefficient 5-tuples;
//   * J acts on coordinate components: (JV)^r = sum_c J[r][c] V^c;
//   * d(eta)(X, Y) = sum_{a,b} (d_a eta_b - d_b eta_a) X^a Y^b;
//   * [X, Y]^k = X(Y^k) - Y(X^k);
//   * the connection is given by frame coefficients, nabla_{e_i} e_j = sum_k gamma[i][j][k] e_k
//     with e_5 = xi;
//   * torsion T(X, Y) = [X, Y] - nabla_X Y + nabla_Y X, so that T(e_1, e_2) = -xi on the
//     Heisenberg group (the opposite sign convention would give +xi for every connection that
//     preserves eta).

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "swcheck/curvature.hpp"
#include "swcheck/extalg.hpp"
#include "swcheck/poly_expr.hpp"

namespace swcheck {

using PolyVector = std::array<PolyExpr, 5>;
using PolyMatrix = std::array<PolyVector, 5>;
using GammaTable = std::array<std::array<std::array<PolyExpr, 5>, 5>, 5>;
using ComplexVector5 = std::array<Complex, 5>;

// ---------------------------------------------------------------------------
// Symbolic vector calculus on the chart

inline PolyVector operator+(PolyVector a, const PolyVector& b) {
  for (std::size_t k = 0; k < 5; ++k) a[k] += b[k];
  return a;
}
inline PolyVector operator-(PolyVector a, const PolyVector& b) {
  for (std::size_t k = 0; k < 5; ++k) a[k] -= b[k];
  return a;
}
inline PolyVector operator*(const PolyExpr& s, PolyVector a) {
  for (auto& x : a) x = s * x;
  return a;
}
inline PolyVector operator*(const PolyMatrix& m, const PolyVector& v) {
  PolyVector r;
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j)
      if (!m[i][j].is_zero() && !v[j].is_zero()) r[i] += m[i][j] * v[j];
  return r;
}

/// X(f) = sum_a X^a d_a f.
inline PolyExpr directional(const PolyVector& x, const PolyExpr& f) {
  PolyExpr r;
  for (int a = 0; a < 5; ++a)
    if (!x[static_cast<std::size_t>(a)].is_zero()) r += x[static_cast<std::size_t>(a)] * f.derivative(a);
  return r;
}

/// Componentwise X(V^k).
inline PolyVector directional(const PolyVector& x, const PolyVector& v) {
  PolyVector r;
  for (std::size_t k = 0; k < 5; ++k) r[k] = directional(x, v[k]);
  return r;
}

inline PolyVector lie_bracket(const PolyVector& x, const PolyVector& y) { return directional(x, y) - directional(y, x); }

/// Pairing of a 1-form with a vector field.
inline PolyExpr pair(const PolyVector& form, const PolyVector& v) {
  PolyExpr r;
  for (std::size_t a = 0; a < 5; ++a)
    if (!form[a].is_zero() && !v[a].is_zero()) r += form[a] * v[a];
  return r;
}

/// Exterior derivative of a 1-form as an antisymmetric coefficient matrix.
inline PolyMatrix exterior_derivative(const PolyVector& form) {
  PolyMatrix d;
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b)
      d[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
          form[static_cast<std::size_t>(b)].derivative(a) - form[static_cast<std::size_t>(a)].derivative(b);
  return d;
}

/// Evaluates a 2-form coefficient matrix on a pair of vector fields.
inline PolyExpr pair(const PolyMatrix& two_form, const PolyVector& x, const PolyVector& y) {
  PolyExpr r;
  for (std::size_t a = 0; a < 5; ++a)
    for (std::size_t b = 0; b < 5; ++b)
      if (!two_form[a][b].is_zero() && !x[a].is_zero() && !y[b].is_zero()) r += two_form[a][b] * x[a] * y[b];
  return r;
}

inline ComplexVector5 evaluate(const PolyVector& v, const ChartPoint& p) {
  ComplexVector5 r;
  for (std::size_t k = 0; k < 5; ++k) r[k] = v[k].evaluate(p);
  return r;
}

inline double max_abs(const ComplexVector5& v) {
  double m = 0;
  for (const auto& x : v) m = std::max(m, std::abs(x));
  return m;
}

// ---------------------------------------------------------------------------
// Model data

struct FrameFieldSet {
  std::string chart = "R5";
  PolyVector eta;                 ///< coefficients of dx1, dy1, dx2, dy2, dt
  PolyVector xi;                  ///< Reeb field
  std::array<PolyVector, 4> frame;  ///< e_1 .. e_4
  PolyMatrix j;                   ///< J on coordinate components

  /// e_1 .. e_4 for i = 1..4, xi for i = 5.
  const PolyVector& field(int i) const {
    if (i < 1 || i > 5) throw std::out_of_range("FrameFieldSet::field: index must be in 1..5");
    return i == 5 ? xi : frame[static_cast<std::size_t>(i - 1)];
  }
  PolyVector& field(int i) {
    if (i < 1 || i > 5) throw std::out_of_range("FrameFieldSet::field: index must be in 1..5");
    return i == 5 ? xi : frame[static_cast<std::size_t>(i - 1)];
  }
};

struct ConnectionCoefficients {
  GammaTable gamma;  ///< gamma[i][j][k]: coefficient of e_k in nabla_{e_i} e_j (zero-based)
  PolyVector a;      ///< U(1) connection 1-form (imaginary-valued coefficients)
};

struct ChartModel {
  FrameFieldSet fields;
  ConnectionCoefficients connection;
};

inline PolyExpr var(int k) { return PolyExpr::variable(k); }

/// The Heisenberg group with eta = dt - y1 dx1 - y2 dx2 and its left-invariant frame.
inline ChartModel heisenberg5() {
  enum { x1, y1, x2, y2, t };
  ChartModel m;
  auto& f = m.fields;
  f.chart = "heisenberg";
  f.eta[t] = 1.0;
  f.eta[x1] = -var(y1);
  f.eta[x2] = -var(y2);
  f.xi[t] = 1.0;
  f.frame[0][x1] = 1.0;
  f.frame[0][t] = var(y1);
  f.frame[1][y1] = 1.0;
  f.frame[2][x2] = 1.0;
  f.frame[2][t] = var(y2);
  f.frame[3][y2] = 1.0;
  // J d_x1 = d_y1, J d_y1 = -d_x1 - y1 d_t, and likewise for the second pair.
  f.j[y1][x1] = 1.0;
  f.j[x1][y1] = -1.0;
  f.j[t][y1] = -var(y1);
  f.j[y2][x2] = 1.0;
  f.j[x2][y2] = -1.0;
  f.j[t][y2] = -var(y2);
  return m;
}

/// Webster metric g(X, Y) = d eta(X, J Y) + eta(X) eta(Y), symbolic.
inline PolyExpr webster_metric(const FrameFieldSet& f, const PolyMatrix& deta, const PolyVector& x,
                               const PolyVector& y) {
  return pair(deta, x, f.j * y) + pair(f.eta, x) * pair(f.eta, y);
}

/// Uniform sample points in [-1, 1]^5.
inline std::vector<ChartPoint> sample_points(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<ChartPoint> pts(n);
  for (auto& p : pts)
    for (auto& x : p) x = u(rng);
  return pts;
}

// ---------------------------------------------------------------------------
// Pointwise numeric helpers

namespace detail {

using Mat5 = Eigen::Matrix<Complex, 5, 5>;
using Vec5 = Eigen::Matrix<Complex, 5, 1>;

inline Vec5 to_eigen(const ComplexVector5& v) {
  Vec5 r;
  for (int k = 0; k < 5; ++k) r(k) = v[static_cast<std::size_t>(k)];
  return r;
}
inline ComplexVector5 from_eigen(const Vec5& v) {
  ComplexVector5 r;
  for (int k = 0; k < 5; ++k) r[static_cast<std::size_t>(k)] = v(k);
  return r;
}
inline Mat5 evaluate(const PolyMatrix& m, const ChartPoint& p) {
  Mat5 r;
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b) r(a, b) = m[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)].evaluate(p);
  return r;
}
inline double max_abs(const Vec5& v) { return v.cwiseAbs().maxCoeff(); }

/// Numeric snapshot of the frame data at one point.
struct PointFrame {
  Mat5 e;     // columns e_1..e_4, xi
  Mat5 j;
  Mat5 deta;
  Vec5 eta;

  Complex d(const Vec5& x, const Vec5& y) const { return x.transpose() * deta * y; }
  Complex g(const Vec5& x, const Vec5& y) const {
    return d(x, j * y) + Complex(eta.transpose() * x) * Complex(eta.transpose() * y);
  }
};

inline PointFrame point_frame(const FrameFieldSet& f, const PolyMatrix& deta, const ChartPoint& p) {
  PointFrame pf;
  for (int i = 1; i <= 5; ++i) pf.e.col(i - 1) = to_eigen(evaluate(f.field(i), p));
  pf.j = evaluate(f.j, p);
  pf.deta = evaluate(deta, p);
  pf.eta = to_eigen(evaluate(f.eta, p));
  return pf;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Contact / metric validator

struct ContactReport {
  double eta_xi = 0;          ///< |eta(xi) - 1|
  double eta_frame = 0;       ///< max |eta(e_i)|
  double reeb = 0;            ///< max |d eta(xi, e_j)|
  double contact_volume = 0;  ///< max |eta ∧ (d eta)^2 (e_1, .., e_4, xi) - 2|
  double coordinate_volume_min = 0;  ///< min |eta ∧ (d eta)^2 / dx1∧dy1∧dx2∧dy2∧dt|
  double coordinate_volume_max = 0;
  double metric_j = 0;        ///< g(JX, JY) - g(X, Y) + eta(X) eta(Y)
  double metric_deta = 0;     ///< g(JX, Y) - d eta(X, Y)
  double j_squared = 0;       ///< J^2 + Id - xi ⊗ eta
  double orthonormality = 0;  ///< g(e_i, e_j) - delta_ij
  double frame_j = 0;         ///< e_2 - J e_1, e_4 - J e_3, J xi

  double max_residual() const {
    return std::max({eta_xi, eta_frame, reeb, contact_volume, metric_j, metric_deta, j_squared,
                     orthonormality, frame_j});
  }
};

/// eta ∧ d eta ∧ d eta as a multiple of the coordinate volume form.
inline Complex contact_volume_density(const detail::PointFrame& pf) {
  KForm<Complex> eta(1), d(2);
  for (int a = 1; a <= 5; ++a) eta.set(mask_of({a}), pf.eta(a - 1));
  for (int a = 1; a <= 5; ++a)
    for (int b = a + 1; b <= 5; ++b) d.set(mask_of({a, b}), pf.deta(a - 1, b - 1));
  return wedge(wedge(eta, d), d).at(kFullMask);
}

inline ContactReport contact_check(const FrameFieldSet& f, const std::vector<ChartPoint>& points) {
  if (points.empty()) throw std::invalid_argument("contact_check: empty sample set");
  const PolyMatrix deta = exterior_derivative(f.eta);
  ContactReport rep;
  rep.coordinate_volume_min = std::numeric_limits<double>::infinity();
  const detail::Mat5 id = detail::Mat5::Identity();
  for (const auto& p : points) {
    const auto pf = detail::point_frame(f, deta, p);
    const detail::Vec5 xi = pf.e.col(4);
    rep.eta_xi = std::max(rep.eta_xi, std::abs(Complex(pf.eta.transpose() * xi) - 1.0));
    for (int i = 0; i < 4; ++i)
      rep.eta_frame = std::max(rep.eta_frame, std::abs(Complex(pf.eta.transpose() * pf.e.col(i))));
    for (int i = 0; i < 5; ++i) rep.reeb = std::max(rep.reeb, std::abs(pf.d(xi, pf.e.col(i))));

    const Complex density = contact_volume_density(pf);
    rep.coordinate_volume_min = std::min(rep.coordinate_volume_min, std::abs(density));
    rep.coordinate_volume_max = std::max(rep.coordinate_volume_max, std::abs(density));
    rep.contact_volume = std::max(rep.contact_volume, std::abs(density * pf.e.determinant() - 2.0));

    for (int a = 0; a < 5; ++a) {
      for (int b = 0; b < 5; ++b) {
        const detail::Vec5 x = pf.e.col(a), y = pf.e.col(b);
        const Complex ex = pf.eta.transpose() * x, ey = pf.eta.transpose() * y;
        rep.metric_j = std::max(rep.metric_j, std::abs(pf.g(pf.j * x, pf.j * y) - pf.g(x, y) + ex * ey));
        rep.metric_deta = std::max(rep.metric_deta, std::abs(pf.g(pf.j * x, y) - pf.d(x, y)));
        rep.orthonormality = std::max(rep.orthonormality, std::abs(pf.g(x, y) - (a == b ? 1.0 : 0.0)));
      }
    }
    const detail::Mat5 j2 = pf.j * pf.j + id - xi * pf.eta.transpose();
    rep.j_squared = std::max(rep.j_squared, j2.cwiseAbs().maxCoeff());
    rep.frame_j = std::max({rep.frame_j, detail::max_abs(pf.e.col(1) - pf.j * pf.e.col(0)),
                            detail::max_abs(pf.e.col(3) - pf.j * pf.e.col(2)), detail::max_abs(pf.j * xi)});
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Tanaka-Webster axioms

struct TwReport {
  double a_eta = 0;         ///< (nabla_{e_i} eta)(e_j)
  double a_xi = 0;          ///< nabla_{e_i} xi
  double b_metric = 0;      ///< (nabla_{e_i} g)(e_j, e_k)
  double c_horizontal = 0;  ///< T(e_i, e_j) + d eta(e_i, e_j) xi, i < j <= 4
  double c_reeb = 0;        ///< T(xi, e_j) - (1/2) J (L_xi J) e_j
  double d_nijenhuis = 0;   ///< g((nabla_{e_i} J) e_j, e_k) - (1/2) d eta(e_i, N(e_j, e_k))
  double tau_norm = 0;      ///< max entry of the torsion endomorphism T(xi, .) in the frame

  double max_residual() const { return std::max({a_eta, a_xi, b_metric, c_horizontal, c_reeb, d_nijenhuis}); }
};

/// N(Y, Z) = J^2[Y, Z] + [JY, JZ] - J[Y, JZ] - J[JY, Z] + d eta(Y, Z) xi.
inline PolyVector nijenhuis_contact(const FrameFieldSet& f, const PolyMatrix& deta, const PolyVector& y,
                                    const PolyVector& z) {
  const PolyVector jy = f.j * y, jz = f.j * z;
  return f.j * (f.j * lie_bracket(y, z)) + lie_bracket(jy, jz) - f.j * lie_bracket(y, jz) -
         f.j * lie_bracket(jy, z) + pair(deta, y, z) * f.xi;
}

inline TwReport tw_axiom_check(const FrameFieldSet& f, const ConnectionCoefficients& c,
                               const std::vector<ChartPoint>& points) {
  if (points.empty()) throw std::invalid_argument("tw_axiom_check: empty sample set");
  const PolyMatrix deta = exterior_derivative(f.eta);
  std::array<PolyVector, 5> e;
  for (int i = 0; i < 5; ++i) e[static_cast<std::size_t>(i)] = f.field(i + 1);

  // Symbolic ingredients, indexed by zero-based frame indices.
  std::array<std::array<PolyExpr, 5>, 5> d_eta_e, g;
  std::array<std::array<std::array<PolyExpr, 5>, 5>, 5> dg;
  std::array<std::array<PolyVector, 5>, 5> bracket, de, dje, nij;
  std::array<PolyVector, 5> je, lxi_j;
  for (std::size_t j = 0; j < 5; ++j) {
    je[j] = f.j * e[j];
    lxi_j[j] = lie_bracket(f.xi, je[j]) - f.j * lie_bracket(f.xi, e[j]);
  }
  for (std::size_t j = 0; j < 5; ++j)
    for (std::size_t k = 0; k < 5; ++k) g[j][k] = webster_metric(f, deta, e[j], e[k]);
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = 0; j < 5; ++j) {
      d_eta_e[i][j] = directional(e[i], pair(f.eta, e[j]));
      bracket[i][j] = lie_bracket(e[i], e[j]);
      de[i][j] = directional(e[i], e[j]);
      dje[i][j] = directional(e[i], je[j]);
      nij[i][j] = nijenhuis_contact(f, deta, e[i], e[j]);
      for (std::size_t k = 0; k < 5; ++k) dg[i][j][k] = directional(e[i], g[j][k]);
    }
  }

  TwReport rep;
  for (const auto& p : points) {
    const auto pf = detail::point_frame(f, deta, p);
    const auto lu = pf.e.partialPivLu();
    const detail::Vec5 xi = pf.e.col(4);
    std::array<detail::Mat5, 5> gam;  // gam[i](k, j) = Gamma^k_{ij}
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = 0; j < 5; ++j)
        for (std::size_t k = 0; k < 5; ++k)
          gam[i](static_cast<int>(k), static_cast<int>(j)) = c.gamma[i][j][k].evaluate(p);
    detail::Mat5 gv;
    for (std::size_t j = 0; j < 5; ++j)
      for (std::size_t k = 0; k < 5; ++k) gv(static_cast<int>(j), static_cast<int>(k)) = g[j][k].evaluate(p);
    auto nabla_frame = [&](std::size_t i, std::size_t j) -> detail::Vec5 {
      return pf.e * gam[i].col(static_cast<int>(j));
    };
    // nabla_{e_i} V for a coordinate field V with value v and e_i(V) = dv at p.
    auto nabla = [&](std::size_t i, const detail::Vec5& v, const detail::Vec5& dv) -> detail::Vec5 {
      const detail::Vec5 coeff = lu.solve(v);
      detail::Vec5 r = dv;
      for (std::size_t j = 0; j < 5; ++j) {
        r -= detail::to_eigen(evaluate(de[i][j], p)) * coeff(static_cast<int>(j));
        r += nabla_frame(i, j) * coeff(static_cast<int>(j));
      }
      return r;
    };

    for (std::size_t i = 0; i < 5; ++i) {
      for (std::size_t j = 0; j < 5; ++j) {
        Complex a = d_eta_e[i][j].evaluate(p);
        for (std::size_t k = 0; k < 5; ++k)
          a -= gam[i](static_cast<int>(k), static_cast<int>(j)) * Complex(pf.eta.transpose() * pf.e.col(static_cast<int>(k)));
        rep.a_eta = std::max(rep.a_eta, std::abs(a));
        rep.a_xi = std::max(rep.a_xi, std::abs(gam[i](static_cast<int>(j), 4)));
        for (std::size_t k = 0; k < 5; ++k) {
          Complex b = dg[i][j][k].evaluate(p);
          for (int l = 0; l < 5; ++l) {
            b -= gam[i](l, static_cast<int>(j)) * gv(l, static_cast<int>(k));
            b -= gam[i](l, static_cast<int>(k)) * gv(static_cast<int>(j), l);
          }
          rep.b_metric = std::max(rep.b_metric, std::abs(b));
        }
      }
    }

    auto torsion = [&](std::size_t i, std::size_t j) -> detail::Vec5 {
      return detail::to_eigen(evaluate(bracket[i][j], p)) - nabla_frame(i, j) + nabla_frame(j, i);
    };
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i + 1; j < 4; ++j) {
        const detail::Vec5 r = torsion(i, j) + pf.d(pf.e.col(static_cast<int>(i)), pf.e.col(static_cast<int>(j))) * xi;
        rep.c_horizontal = std::max(rep.c_horizontal, detail::max_abs(r));
      }
    for (std::size_t j = 0; j < 4; ++j) {
      const detail::Vec5 t = torsion(4, j);
      const detail::Vec5 r = t - 0.5 * (pf.j * detail::to_eigen(evaluate(lxi_j[j], p)));
      rep.c_reeb = std::max(rep.c_reeb, detail::max_abs(r));
      rep.tau_norm = std::max(rep.tau_norm, detail::max_abs(lu.solve(t)));
    }

    for (std::size_t i = 0; i < 5; ++i) {
      for (std::size_t j = 0; j < 5; ++j) {
        const detail::Vec5 nabla_je = nabla(i, detail::to_eigen(evaluate(je[j], p)), detail::to_eigen(evaluate(dje[i][j], p)));
        const detail::Vec5 dj = nabla_je - pf.j * nabla_frame(i, j);
        for (std::size_t k = 0; k < 5; ++k) {
          const Complex lhs = pf.g(dj, pf.e.col(static_cast<int>(k)));
          const Complex rhs = 0.5 * pf.d(pf.e.col(static_cast<int>(i)), detail::to_eigen(evaluate(nij[j][k], p)));
          rep.d_nijenhuis = std::max(rep.d_nijenhuis, std::abs(lhs - rhs));
        }
      }
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// CR integrability

struct CrReport {
  double nijenhuis = 0;  ///< max |J([JX, Y] + [X, JY]) - [JX, JY] + [X, Y]|
  double levi = 0;       ///< max |eta([JX, Y]) + eta([X, JY])|

  double max_residual() const { return std::max(nijenhuis, levi); }
};

inline PolyVector nijenhuis_cr(const FrameFieldSet& f, const PolyVector& x, const PolyVector& y) {
  const PolyVector jx = f.j * x, jy = f.j * y;
  return f.j * (lie_bracket(jx, y) + lie_bracket(x, jy)) - lie_bracket(jx, jy) + lie_bracket(x, y);
}

inline CrReport cr_check(const FrameFieldSet& f, const std::vector<ChartPoint>& points) {
  if (points.empty()) throw std::invalid_argument("cr_check: empty sample set");
  std::vector<PolyVector> ns;
  std::vector<PolyExpr> levis;
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t b = a + 1; b < 4; ++b) {
      const auto& x = f.frame[a];
      const auto& y = f.frame[b];
      ns.push_back(nijenhuis_cr(f, x, y));
      levis.push_back(pair(f.eta, lie_bracket(f.j * x, y)) + pair(f.eta, lie_bracket(x, f.j * y)));
    }
  }
  CrReport rep;
  for (const auto& p : points) {
    for (const auto& n : ns) rep.nijenhuis = std::max(rep.nijenhuis, max_abs(evaluate(n, p)));
    for (const auto& l : levis) rep.levi = std::max(rep.levi, std::abs(l.evaluate(p)));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Pointwise model with prescribed curvature

/// so(4)-valued connection 1-form at a point: omega[w][j][k] = omega_{jk}(e_w),
/// antisymmetric in (j, k); only horizontal j, k are used.
template <class R = double>
using ConnectionForm = std::array<RealMatrix5<R>, 5>;

template <class R = double>
struct SyntheticModel {
  CurvatureData<R> curvature;
  TorsionEndomorphism<R> tau;
  ConnectionForm<R> omega{};  ///< unitary (u(2)) connection form of the frame

  RealMatrix5<R> j() const { return frame_j<R>(); }
  KForm<complex_of_t<R>> deta() const { return deta_form<complex_of_t<R>>(); }
  R s() const { return curvature.s; }
  const KForm<complex_of_t<R>>& rho_H() const { return curvature.rho_H; }

  /// The 2-form part of Ric, i.e. F_A = Ric, on horizontal frame pairs.
  KForm<complex_of_t<R>> f_a() const {
    KForm<complex_of_t<R>> f(2);
    for (int a = 1; a <= 4; ++a)
      for (int b = a + 1; b <= 4; ++b)
        f.set(mask_of({a, b}), ricci_two_form_part(curvature.ric, tau, frame_basis<R>(a), frame_basis<R>(b)));
    return f;
  }

  /// Canonical U(1) connection on the determinant line: A(e_w) = i (omega_12 + omega_34)(e_w).
  std::array<complex_of_t<R>, 5> canonical_a() const {
    using C = complex_of_t<R>;
    std::array<C, 5> a{};
    for (std::size_t w = 0; w < 5; ++w) a[w] = imag_unit<C>() * C(omega[w][0][1] + omega[w][2][3]);
    return a;
  }
};

template <class R>
std::optional<std::string> connection_form_violation(const ConnectionForm<R>& omega) {
  const auto j = frame_j<R>();
  for (std::size_t w = 0; w < 5; ++w) {
    const auto& m = omega[w];
    for (std::size_t a = 0; a < 5; ++a)
      for (std::size_t b = 0; b < 5; ++b) {
        if (m[a][b] != -m[b][a]) return std::string("connection form is not antisymmetric");
        if ((a == 4 || b == 4) && m[a][b] != R{}) return std::string("connection form does not preserve xi");
      }
    if (j * m != m * j) return std::string("connection form does not commute with J");
  }
  return std::nullopt;
}

template <class R>
SyntheticModel<R> synthetic_model(const CurvatureData<R>& c, const TorsionEndomorphism<R>& tau = {},
                                  const ConnectionForm<R>& omega = {}) {
  require_admissible(c.ric);
  if (auto v = torsion_violation(tau)) throw std::invalid_argument("inadmissible torsion: " + *v);
  if (auto v = connection_form_violation(omega)) throw std::invalid_argument("inadmissible connection: " + *v);
  SyntheticModel<R> m;
  m.curvature = make_curvature_data(c.ric);
  m.tau = tau;
  m.omega = omega;
  return m;
}

/// Random u(2) connection form: per direction, a1 (e12) + a2 (e34) + b (e13 + e24) + c (e14 - e23).
inline ConnectionForm<double> random_unitary_connection(std::uint64_t seed, double scale) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-scale, scale);
  ConnectionForm<double> omega{};
  for (auto& m : omega) {
    const double a1 = u(rng), a2 = u(rng), b = u(rng), c = u(rng);
    auto set = [&m](int i, int k, double v) {
      m[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] = v;
      m[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)] = -v;
    };
    set(0, 1, a1);
    set(2, 3, a2);
    set(0, 2, b);
    set(1, 3, b);
    set(0, 3, c);
    set(1, 2, -c);
  }
  return omega;
}

}  // namespace swcheck
