#include <random>

#include <gtest/gtest.h>

#include "swcheck/curvature.hpp"

namespace swcheck {
namespace {

using EC = ExactComplex;
using Q = Rational;

// The displayed expansion
//   rho_H = -R11 e12 - R33 e34 - R24 (e14 - e23) - R23 (e13 + e24),
// written out coefficient by coefficient.
template <class R>
KForm<complex_of_t<R>> displayed_rho(const RealMatrix5<R>& r) {
  using C = complex_of_t<R>;
  KForm<C> f(2);
  f.set(mask_of({1, 2}), C(-r[0][0]));
  f.set(mask_of({3, 4}), C(-r[2][2]));
  f.set(mask_of({1, 4}), C(-r[1][3]));
  f.set(mask_of({2, 3}), C(r[1][3]));
  f.set(mask_of({1, 3}), C(-r[1][2]));
  f.set(mask_of({2, 4}), C(-r[1][2]));
  return f;
}

// Closed form of the Bianchi correction for horizontal X, Y:
// (i/2) [deta(X,Y) tr(J^T tau) + X.tau Y - Y.tau X].
Complex bianchi_closed_form(const RealMatrix5<double>& tau, const FrameVector<double>& x,
                            const FrameVector<double>& y) {
  // J^T entries read off J e_1 = e_2, J e_3 = e_4.
  const double jt[4][4] = {{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}};
  double tr = 0, deta = 0, xty = 0, ytx = 0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      tr += jt[a][b] * tau[b][a];
      deta += x[a] * jt[a][b] * y[b];
      xty += x[a] * tau[a][b] * y[b];
      ytx += y[a] * tau[a][b] * x[b];
    }
  return Complex(0, 0.5) * (deta * tr + xty - ytx);
}

FrameVector<double> random_horizontal(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1, 1);
  return {u(rng), u(rng), u(rng), u(rng), 0.0};
}

TEST(FrameJ, SquaresToMinusIdentityOnH) {
  const auto j2 = frame_j<int>() * frame_j<int>();
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b) EXPECT_EQ(j2[a][b], (a == b && a < 4) ? -1 : 0);
}

TEST(Admissible, SamplerSatisfiesConstraints) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto c = random_admissible_ricci(seed, 1.0);
    EXPECT_EQ(ricci_violation(c.ric), std::nullopt);
    EXPECT_EQ(c.s, scalar_curvature(c.ric));
  }
}

TEST(Admissible, SamplerIsDeterministic) {
  const auto a = random_admissible_ricci(42, 2.0);
  const auto b = random_admissible_ricci(42, 2.0);
  EXPECT_EQ(a.ric, b.ric);
  EXPECT_NE(a.ric, random_admissible_ricci(43, 2.0).ric);
}

TEST(Admissible, ScalarIsTwiceFreeDiagonal) {
  const auto r = admissible_ricci<Q>(Q(3, 2), Q(-5), Q(7), Q(1, 3));
  EXPECT_EQ(scalar_curvature(r), Q(2) * Q(3, 2) + Q(2) * Q(-5));
}

TEST(Admissible, RejectsNonPositiveScale) {
  EXPECT_THROW(random_admissible_ricci(1, 0.0), std::invalid_argument);
  EXPECT_THROW(random_admissible_torsion(1, -1.0), std::invalid_argument);
}

TEST(Admissible, ViolationMessages) {
  auto r = admissible_ricci<Q>(Q(1), Q(2), Q(0), Q(0));
  r[0][1] = r[1][0] = Q(1);
  EXPECT_EQ(ricci_violation(r), std::string("constraint R12=0 violated"));
  r = admissible_ricci<Q>(Q(1), Q(2), Q(0), Q(0));
  r[1][1] = Q(5);
  EXPECT_EQ(ricci_violation(r), std::string("constraint R11=R22 violated"));
  r = admissible_ricci<Q>(Q(1), Q(2), Q(0), Q(0));
  r[4][4] = Q(1);
  EXPECT_EQ(ricci_violation(r), std::string("constraint R55=0 violated"));
  r = admissible_ricci<Q>(Q(1), Q(2), Q(0), Q(0));
  r[0][2] = Q(1);
  EXPECT_EQ(ricci_violation(r), std::string("constraint R13=R31 violated"));
  EXPECT_THROW(make_curvature_data(r), std::invalid_argument);
}

TEST(Admissible, RicciCommutesWithJ) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> u(-9, 9);
    const auto r = admissible_ricci<Q>(Q(u(rng)), Q(u(rng), 7), Q(u(rng), 3), Q(u(rng)));
    EXPECT_EQ(frame_j<Q>() * r, r * frame_j<Q>());
  }
}

TEST(RicciForm, DiagonalGivesMinusCDeta) {
  const auto c = make_curvature_data(admissible_ricci<Q>(Q(3), Q(3), Q(0), Q(0)));
  EXPECT_EQ(ricci_form(c), EC(Q(-3)) * deta_form<EC>());
}

TEST(RicciForm, ZeroTensor) {
  const auto c = make_curvature_data(RealMatrix5<Q>{});
  EXPECT_EQ(ricci_form(c), KForm<EC>(2));
  EXPECT_EQ(rho_plus(c), KForm<EC>(2));
}

TEST(RicciForm, MatchesDisplayedExpansionExactly) {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> u(-20, 20);
  for (int trial = 0; trial < 200; ++trial) {
    const auto r = admissible_ricci<Q>(Q(u(rng), 3), Q(u(rng)), Q(u(rng), 5), Q(u(rng)));
    const auto c = make_curvature_data(r);
    EXPECT_EQ(ricci_form(c), displayed_rho(r));
    EXPECT_EQ(ricci_form(c).at(mask_of({1, 2})), EC(-r[0][0]));
  }
}

TEST(RicciForm, ConventionsAgreeOnAdmissibleData) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto c = random_admissible_ricci(seed, 1.0);
    EXPECT_LT(max_norm(ricci_form(c, RicciFormConvention::metric_j_ric) -
                       ricci_form(c, RicciFormConvention::ric_j)),
              1e-15);
  }
}

TEST(RicciForm, ConventionsDifferWhenJDoesNotCommute) {
  auto r = admissible_ricci<Q>(Q(1), Q(1), Q(0), Q(0));
  r[0][0] = Q(2);
  EXPECT_NE(ricci_form_of(r, RicciFormConvention::metric_j_ric),
            ricci_form_of(r, RicciFormConvention::ric_j));
}

TEST(RicciForm, LinearInScaling) {
  const auto r = admissible_ricci<Q>(Q(1, 2), Q(3), Q(-2), Q(5, 7));
  RealMatrix5<Q> scaled = r;
  for (auto& row : scaled)
    for (auto& x : row) x *= Q(-7, 3);
  EXPECT_EQ(ricci_form_of(scaled), EC(Q(-7, 3)) * ricci_form_of(r));
}

TEST(RicciForm, JInvariance) {
  // Ric(JX, JY) = Ric(X, Y) on H, checked through rho_H.
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const auto c = random_admissible_ricci(rng(), 1.0);
    const auto x = random_horizontal(rng), y = random_horizontal(rng);
    const auto j = frame_j<double>();
    EXPECT_LT(std::abs(evaluate(c.rho_H, j * x, j * y) - evaluate(c.rho_H, x, y)), 1e-14);
  }
}

TEST(RhoPlus, ExampleS4) {
  const auto c = make_curvature_data(admissible_ricci<Q>(Q(1), Q(1), Q(0), Q(0)));
  EXPECT_EQ(c.s, Q(4));
  EXPECT_EQ(rho_plus(c), -deta_form<EC>());
}

TEST(RhoPlus, ExactForRationalData) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> u(-50, 50);
  for (int trial = 0; trial < 500; ++trial) {
    const auto c = make_curvature_data(
        admissible_ricci<Q>(Q(u(rng), 7), Q(u(rng), 3), Q(u(rng), 11), Q(u(rng), 13)));
    EXPECT_EQ(rho_plus(c), EC(-c.s / Q(4)) * deta_form<EC>());
    EXPECT_EQ(rho_plus_residual(c), 0.0);
  }
}

TEST(RhoPlus, RandomSamplesWithinTolerance) {
  double worst = 0;
  for (std::uint64_t seed = 0; seed < 10000; ++seed)
    worst = std::max(worst, rho_plus_residual(random_admissible_ricci(seed, 1.0)));
  EXPECT_LE(worst, 1e-12);
}

TEST(Torsion, SamplerIsAdmissible) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto t = random_admissible_torsion(seed, 1.0);
    // Exact identities can be spoiled by rounding in (S + JSJ)/2; J only
    // permutes and negates entries, so they hold exactly here.
    EXPECT_EQ(torsion_violation(t), std::nullopt) << seed;
  }
}

TEST(Torsion, ViolationMessages) {
  TorsionEndomorphism<Q> t;
  for (int i = 0; i < 4; ++i) t.tau[i][i] = Q(1);
  EXPECT_EQ(torsion_violation(t), std::string("torsion does not anticommute with J"));
  t = {};
  t.tau[0][1] = Q(1);
  EXPECT_EQ(torsion_violation(t), std::string("torsion is not self-adjoint"));
}

TEST(Bianchi, VanishesForAdmissibleTorsion) {
  double worst = 0;
  for (std::uint64_t seed = 0; seed < 10000; ++seed)
    worst = std::max(worst, bianchi_residual(random_admissible_torsion(seed, 1.0)));
  EXPECT_LE(worst, 1e-12);
}

TEST(Bianchi, ZeroTorsion) {
  EXPECT_EQ(bianchi_residual(TorsionEndomorphism<Q>{}), 0.0);
}

TEST(Bianchi, MatchesClosedFormOnArbitraryEndomorphisms) {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int trial = 0; trial < 200; ++trial) {
    TorsionEndomorphism<double> t;
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) t.tau[a][b] = u(rng);
    const auto x = random_horizontal(rng), y = random_horizontal(rng);
    EXPECT_LT(std::abs(bianchi_B(t, x, y) - bianchi_closed_form(t.tau, x, y)), 1e-13);
    EXPECT_LT(std::abs(bianchi_B(t, x, y) + bianchi_B(t, y, x)), 1e-13);
  }
}

TEST(Bianchi, TorsionEqualToJIsDetected) {
  TorsionEndomorphism<Q> t{frame_j<Q>()};
  // B(e1, e2) = -i g(e1, J e2) = i
  EXPECT_EQ(bianchi_B(t, frame_basis<Q>(1), frame_basis<Q>(2)), EC(Q(0), Q(1)));
  EXPECT_GT(bianchi_residual(t), 0.5);
}

TEST(Bianchi, IdentityOnHIsNotDetected) {
  // Symmetric and trace-free against J, so the correction vanishes even
  // though the identity commutes with J.
  TorsionEndomorphism<Q> t;
  for (int i = 0; i < 4; ++i) t.tau[i][i] = Q(1);
  EXPECT_EQ(bianchi_residual(t), 0.0);
}

TEST(Bianchi, RejectsVerticalArguments) {
  EXPECT_THROW(bianchi_B(TorsionEndomorphism<Q>{}, frame_basis<Q>(5), frame_basis<Q>(1)),
               std::invalid_argument);
}

TEST(RicIdentity, AdmissibleDataExact) {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<int> u(-30, 30);
  for (int trial = 0; trial < 200; ++trial) {
    const auto c = make_curvature_data(
        admissible_ricci<Q>(Q(u(rng), 3), Q(u(rng)), Q(u(rng), 4), Q(u(rng), 9)));
    EXPECT_EQ(ric_identity_check(c), 0.0);
  }
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    EXPECT_LE(ric_identity_check(random_admissible_ricci(seed, 1.0), random_admissible_torsion(seed, 1.0)),
              1e-12);
  }
  EXPECT_EQ(ric_identity_check(CurvatureData<Q>{}), 0.0);
}

TEST(RicIdentity, BrokenConstraintsDetected) {
  CurvatureData<Q> c;
  c.ric = admissible_ricci<Q>(Q(1), Q(1), Q(0), Q(0));
  c.ric[0][0] = Q(3);  // breaks R11 = R22
  EXPECT_EQ(ric_identity_check(c), 1.0);
  c.ric = admissible_ricci<Q>(Q(1), Q(1), Q(0), Q(0));
  c.ric[0][2] = c.ric[2][0] = Q(2);  // breaks R24 = R13
  EXPECT_GT(ric_identity_check(c), 0.5);
}

TEST(RicIdentity, NonAdmissibleTorsionDetected) {
  const auto c = make_curvature_data(admissible_ricci<Q>(Q(1), Q(1), Q(0), Q(0)));
  EXPECT_GT(ric_identity_check(c, TorsionEndomorphism<Q>{frame_j<Q>()}), 0.5);
}

TEST(CurvatureTensor, ContractsToRicciForm) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto c = random_admissible_ricci(seed, 1.0);
    const auto t = curvature_tensor_from(c);
    for (int a = 1; a <= 4; ++a)
      for (int b = 1; b <= 4; ++b) {
        ComplexFrameVector x{}, y{};
        x[a - 1] = 1;
        y[b - 1] = 1;
        const Complex expected = Complex(0, 1) * evaluate(c.rho_H, x, y);
        EXPECT_LT(std::abs(ricci_contraction(t, x, y) - expected), 1e-13);
      }
  }
}

TEST(CurvatureTensor, RealFrameEntriesAreReal) {
  const auto t = curvature_tensor_from(random_admissible_ricci(5, 1.0));
  for (const auto& a : t.entries)
    for (const auto& b : a)
      for (const auto& c : b)
        for (const auto& d : c) EXPECT_LT(std::abs(d.imag()), 1e-15);
}

TEST(CurvatureTensor, SatisfiesSymmetries) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto rep = symmetry_check(curvature_tensor_from(random_admissible_ricci(seed, 1.0)));
    EXPECT_LE(rep.max(), 1e-12) << seed;
  }
}

TEST(CurvatureTensor, ZeroTensorHasZeroResiduals) {
  EXPECT_EQ(symmetry_check(CurvatureTensor4{}).max(), 0.0);
}

TEST(CurvatureTensor, PerturbedEntryDetected) {
  auto t = curvature_tensor_from(random_admissible_ricci(9, 1.0));
  t(4, 0, 0, 1) += 1e-3;
  EXPECT_GE(symmetry_check(t).max(), 1e-3);
}

TEST(CurvatureTensor, ExchangeSymmetryBreakDetected) {
  // A T10-only perturbation that respects pair antisymmetry and reality but
  // not the exchange rule: shift R(e1, e3, e1, e3) and its antisymmetric images.
  auto t = curvature_tensor_from(random_admissible_ricci(10, 1.0));
  for (const auto& [a, b, s] : {std::tuple{0, 2, 1.0}, std::tuple{2, 0, -1.0}}) {
    t(a, b, 0, 2) += 0.1 * s;
    t(a, b, 2, 0) -= 0.1 * s;
  }
  const auto rep = symmetry_check(t);
  EXPECT_LT(rep.antisymmetry, 1e-15);
  EXPECT_GT(std::max(rep.exchange, rep.vanishing), 1e-3);
}

}  // namespace
}  // namespace swcheck
