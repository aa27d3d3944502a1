#include <random>

#include <gtest/gtest.h>

#include "swcheck/models.hpp"

namespace swcheck {
namespace {

enum { X1, Y1, X2, Y2, T };

PolyVector coord(int k) {
  PolyVector v;
  v[static_cast<std::size_t>(k)] = 1.0;
  return v;
}

const std::vector<ChartPoint>& points100() {
  static const auto pts = sample_points(100, 2024);
  return pts;
}

TEST(Heisenberg, DetaOnFrame) {
  const auto m = heisenberg5();
  const auto d = exterior_derivative(m.fields.eta);
  EXPECT_EQ(pair(d, m.fields.frame[0], m.fields.frame[1]), PolyExpr(1.0));
  EXPECT_EQ(pair(d, m.fields.frame[2], m.fields.frame[3]), PolyExpr(1.0));
  EXPECT_TRUE(pair(d, m.fields.frame[0], m.fields.frame[2]).is_zero());
  // d eta = dx1 ∧ dy1 + dx2 ∧ dy2
  EXPECT_EQ(d[X1][Y1], PolyExpr(1.0));
  EXPECT_EQ(d[Y1][X1], PolyExpr(-1.0));
  EXPECT_TRUE(d[X1][T].is_zero());
}

TEST(Heisenberg, ReebNormalization) {
  const auto m = heisenberg5();
  EXPECT_EQ(pair(m.fields.eta, m.fields.xi), PolyExpr(1.0));
  for (const auto& e : m.fields.frame) EXPECT_TRUE(pair(m.fields.eta, e).is_zero());
}

TEST(Heisenberg, BracketOfFirstPair) {
  // [d_x1 + y1 d_t, d_y1] = -d_t, written out by hand.
  const auto m = heisenberg5();
  PolyVector expected;
  expected[T] = -1.0;
  EXPECT_EQ(lie_bracket(m.fields.frame[0], m.fields.frame[1]), expected);
  EXPECT_EQ(lie_bracket(m.fields.frame[2], m.fields.frame[3]), expected);
}

TEST(Heisenberg, ContactVolumeIsTwo) {
  const auto m = heisenberg5();
  const auto rep = contact_check(m.fields, points100());
  EXPECT_LE(rep.contact_volume, 1e-12);
  EXPECT_DOUBLE_EQ(rep.coordinate_volume_min, 2.0);
  EXPECT_DOUBLE_EQ(rep.coordinate_volume_max, 2.0);
}

TEST(Heisenberg, PassesContactCheck) {
  const auto rep = contact_check(heisenberg5().fields, points100());
  EXPECT_LE(rep.max_residual(), 1e-12);
  EXPECT_EQ(rep.eta_xi, 0.0);
}

TEST(Heisenberg, PassesTwAxioms) {
  const auto m = heisenberg5();
  const auto rep = tw_axiom_check(m.fields, m.connection, points100());
  EXPECT_LE(rep.max_residual(), 1e-12);
  EXPECT_LE(rep.tau_norm, 1e-12);
}

TEST(Heisenberg, PassesCrCheck) {
  EXPECT_LE(cr_check(heisenberg5().fields, points100()).max_residual(), 1e-12);
}

TEST(Heisenberg, NijenhuisVanishesSymbolically) {
  const auto m = heisenberg5();
  const auto d = exterior_derivative(m.fields.eta);
  for (int i = 1; i <= 5; ++i)
    for (int k = 1; k <= 5; ++k)
      for (const auto& c : nijenhuis_contact(m.fields, d, m.fields.field(i), m.fields.field(k)))
        EXPECT_TRUE(c.is_zero()) << i << k;
}

TEST(Heisenberg, LieDerivativeOfJVanishes) {
  const auto m = heisenberg5();
  for (int k = 0; k < 5; ++k) {
    const auto y = coord(k);
    const auto l = lie_bracket(m.fields.xi, m.fields.j * y) - m.fields.j * lie_bracket(m.fields.xi, y);
    for (const auto& c : l) EXPECT_TRUE(c.is_zero());
  }
}

TEST(LieBracket, AntisymmetryAndJacobiExact) {
  const auto f = heisenberg5().fields;
  for (int a = 1; a <= 5; ++a)
    for (int b = 1; b <= 5; ++b) {
      const auto& x = f.field(a);
      const auto& y = f.field(b);
      const auto s = lie_bracket(x, y) + lie_bracket(y, x);
      for (const auto& c : s) EXPECT_TRUE(c.is_zero());
      for (int c = 1; c <= 5; ++c) {
        const auto& z = f.field(c);
        const auto jac = lie_bracket(x, lie_bracket(y, z)) + lie_bracket(y, lie_bracket(z, x)) +
                         lie_bracket(z, lie_bracket(x, y));
        for (const auto& comp : jac) EXPECT_TRUE(comp.is_zero());
      }
    }
}

TEST(LieBracket, JacobiOnPolynomialFields) {
  const PolyVector x = {parse_poly("x1*t"), parse_poly("y2^2"), 0.0, parse_poly("1 + x2"), parse_poly("y1")};
  const PolyVector y = {parse_poly("t"), 0.0, parse_poly("x1*y1"), 0.0, parse_poly("x2^2 - t")};
  const PolyVector z = {0.0, parse_poly("x1"), parse_poly("t*y2"), parse_poly("y1"), 1.0};
  const auto jac = lie_bracket(x, lie_bracket(y, z)) + lie_bracket(y, lie_bracket(z, x)) +
                   lie_bracket(z, lie_bracket(x, y));
  const auto pts = sample_points(20, 5);
  for (const auto& p : pts) EXPECT_LT(max_abs(evaluate(jac, p)), 1e-12);
}

TEST(NegativeControl, DoubledE2BreaksMetric) {
  auto f = heisenberg5().fields;
  f.frame[1] = PolyExpr(2.0) * f.frame[1];
  const auto rep = contact_check(f, points100());
  EXPECT_GE(rep.orthonormality, 1.0);
  EXPECT_GE(rep.frame_j, 1.0);
  EXPECT_GE(rep.max_residual(), 1.0);
}

TEST(NegativeControl, NonconstantScalingBreaksMetricCompatibility) {
  auto m = heisenberg5();
  m.fields.frame[0] = parse_poly("2 + x2") * m.fields.frame[0];
  const auto rep = tw_axiom_check(m.fields, m.connection, points100());
  EXPECT_GT(rep.b_metric, 1.0);
}

TEST(NegativeControl, ConstantScalingIsInvisibleToNablaG) {
  // g(e1, e1) = 4 everywhere, so its derivatives vanish and the torsion
  // identity is homogeneous in e1; only the metric validator sees the defect.
  auto m = heisenberg5();
  m.fields.frame[0] = PolyExpr(2.0) * m.fields.frame[0];
  const auto rep = tw_axiom_check(m.fields, m.connection, points100());
  EXPECT_EQ(rep.b_metric, 0.0);
  EXPECT_LE(rep.c_horizontal, 1e-12);
  EXPECT_GE(contact_check(m.fields, points100()).orthonormality, 1.0);
}

TEST(NegativeControl, NonzeroGammaBreaksParallelEta) {
  auto m = heisenberg5();
  m.connection.gamma[0][1][4] = 1.0;  // nabla_{e1} e2 = xi
  const auto rep = tw_axiom_check(m.fields, m.connection, points100());
  EXPECT_GE(rep.a_eta, 1.0);
}

TEST(NegativeControl, GammaOnXiBreaksParallelXi) {
  auto m = heisenberg5();
  m.connection.gamma[2][4][0] = 0.5;
  EXPECT_GE(tw_axiom_check(m.fields, m.connection, points100()).a_xi, 0.5);
}

TEST(NegativeControl, PerturbedJBreaksIntegrability) {
  auto f = heisenberg5().fields;
  f.j[Y2][X1] += 0.1;
  const auto rep = cr_check(f, points100());
  EXPECT_GT(rep.nijenhuis, 0.01);
}

TEST(CrCheck, NijenhuisOfFieldWithItselfIsZero) {
  auto f = heisenberg5().fields;
  f.j[Y2][X1] += 0.1;
  for (const auto& x : f.frame)
    for (const auto& c : nijenhuis_cr(f, x, x)) EXPECT_TRUE(c.is_zero());
}

TEST(TwAxioms, TorsionSignOnHeisenberg) {
  // T(e1, e2) = [e1, e2] with a flat connection, and equals -d eta(e1, e2) xi.
  const auto m = heisenberg5();
  const auto br = lie_bracket(m.fields.frame[0], m.fields.frame[1]);
  const auto d = exterior_derivative(m.fields.eta);
  const auto rhs = -pair(d, m.fields.frame[0], m.fields.frame[1]) * m.fields.xi;
  EXPECT_EQ(br, rhs);
}

TEST(SamplePoints, DeterministicAndInRange) {
  const auto a = sample_points(50, 9), b = sample_points(50, 9);
  EXPECT_EQ(a, b);
  for (const auto& p : a)
    for (double x : p) {
      EXPECT_GE(x, -1.0);
      EXPECT_LE(x, 1.0);
    }
}

TEST(Synthetic, NegativeFourGivesIDeta) {
  const auto c = make_curvature_data(admissible_ricci<Rational>(Rational(-1), Rational(-1), Rational(0), Rational(0)));
  const auto m = synthetic_model(c);
  EXPECT_EQ(m.s(), Rational(-4));
  EXPECT_EQ(sd_project(m.f_a()).plus, ExactComplex(Rational(0), Rational(1)) * deta_form<ExactComplex>());
}

TEST(Synthetic, ZeroCurvature) {
  const auto m = synthetic_model(CurvatureData<double>{});
  EXPECT_EQ(max_norm(m.f_a()), 0.0);
  EXPECT_EQ(max_norm(m.rho_H()), 0.0);
  EXPECT_EQ(m.s(), 0.0);
}

TEST(Synthetic, FieldStrengthIsImaginary) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto m = synthetic_model(random_admissible_ricci(seed, 2.0), random_admissible_torsion(seed, 1.0));
    for (const auto& x : m.f_a().coeffs()) EXPECT_LT(std::abs(x.real()), 1e-15);
    EXPECT_LT(max_norm(m.f_a() - Complex(0, 1) * m.rho_H()), 1e-12);
  }
}

TEST(Synthetic, RejectsInadmissibleInput) {
  CurvatureData<double> c;
  c.ric[0][1] = c.ric[1][0] = 1.0;
  EXPECT_THROW(synthetic_model(c), std::invalid_argument);
  EXPECT_THROW(synthetic_model(CurvatureData<double>{}, TorsionEndomorphism<double>{frame_j<double>()}),
               std::invalid_argument);
  ConnectionForm<double> omega{};
  omega[0][0][2] = 1.0;
  omega[0][2][0] = -1.0;  // e13 alone does not commute with J
  EXPECT_THROW(synthetic_model(CurvatureData<double>{}, {}, omega), std::invalid_argument);
}

TEST(Synthetic, RandomUnitaryConnectionIsAdmissible) {
  for (std::uint64_t seed = 0; seed < 20; ++seed)
    EXPECT_EQ(connection_form_violation(random_unitary_connection(seed, 1.0)), std::nullopt);
}

}  // namespace
}  // namespace swcheck
