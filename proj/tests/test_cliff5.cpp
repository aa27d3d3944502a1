#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "swcheck/cliff5.hpp"

namespace swcheck {
namespace {

using EC = ExactComplex;

EC ec(std::int64_t re, std::int64_t im = 0) { return EC(Rational(re), Rational(im)); }

SpinorValue<Complex> random_spinor(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  SpinorValue<Complex> s;
  for (auto& x : s.c) x = Complex(u(rng), u(rng));
  return s;
}

TEST(Gamma, MatchesPrintedMatrices) {
  const auto g1 = gamma<GaussInt>(1);
  const auto expected1 = Matrix4<GaussInt>::from_ints({{{{{0, 0}, {0, 1}, {0, 0}, {0, 0}}},
                                                        {{{0, 1}, {0, 0}, {0, 0}, {0, 0}}},
                                                        {{{0, 0}, {0, 0}, {0, 0}, {0, 1}}},
                                                        {{{0, 0}, {0, 0}, {0, 1}, {0, 0}}}}});
  EXPECT_EQ(g1, expected1);
  const auto g5 = gamma<GaussInt>(5);
  Matrix4<GaussInt> diag;
  diag(0, 0) = {0, 1};
  diag(1, 1) = {0, -1};
  diag(2, 2) = {0, 1};
  diag(3, 3) = {0, -1};
  EXPECT_EQ(g5, diag);
}

TEST(Gamma, AgreesWithOracleLiterals) {
  for (int i = 1; i <= 5; ++i) {
    const auto g = gamma<Complex>(i);
    const auto o = oracle::kappa(i);
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) EXPECT_EQ(g(r, c), o[r][c]) << i << ' ' << r << ' ' << c;
  }
}

TEST(Gamma, SquaresToMinusIdentity) {
  EXPECT_EQ(gamma<GaussInt>(2) * gamma<GaussInt>(2), -Matrix4<GaussInt>::identity());
}

TEST(Gamma, CliffordRelationsExact) {
  const auto id = Matrix4<GaussInt>::identity();
  for (int i = 1; i <= 5; ++i) {
    for (int j = 1; j <= 5; ++j) {
      const auto ac = gamma<GaussInt>(i) * gamma<GaussInt>(j) + gamma<GaussInt>(j) * gamma<GaussInt>(i);
      const auto expected = i == j ? GaussInt(-2) * id : Matrix4<GaussInt>{};
      EXPECT_EQ(ac, expected) << i << ',' << j;
    }
  }
}

TEST(Gamma, SkewHermitianAndUnitary) {
  for (int i = 1; i <= 5; ++i) {
    const auto g = gamma<GaussInt>(i);
    EXPECT_EQ(g.adjoint(), -g);
    EXPECT_EQ(g.adjoint() * g, Matrix4<GaussInt>::identity());
  }
}

TEST(Gamma, RejectsIndexOutOfRange) {
  EXPECT_THROW(gamma<GaussInt>(0), std::out_of_range);
  EXPECT_THROW(gamma<GaussInt>(6), std::out_of_range);
}

TEST(CliffordVector, ReebOnPsi0) {
  const FrameVector<std::int64_t> xi{0, 0, 0, 0, 1};
  const auto r = clifford_vector(xi, psi0<GaussInt>());
  EXPECT_EQ(r, GaussInt(0, -1) * psi0<GaussInt>());
}

TEST(CliffordVector, ZeroVectorGivesZero) {
  std::mt19937_64 rng(3);
  const auto r = clifford_vector(FrameVector<double>{}, random_spinor(rng));
  EXPECT_EQ(r, SpinorValue<Complex>{});
}

TEST(CliffordVector, E1OnFirstBasisSpinor) {
  SpinorValue<GaussInt> s;
  s[0] = 1;
  SpinorValue<GaussInt> expected;
  expected[1] = {0, 1};
  EXPECT_EQ(clifford_vector(FrameVector<std::int64_t>{1, 0, 0, 0, 0}, s), expected);
}

TEST(CliffordVector, LinearInVector) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int trial = 0; trial < 20; ++trial) {
    FrameVector<double> a, b;
    for (auto& x : a) x = u(rng);
    for (auto& x : b) x = u(rng);
    FrameVector<double> sum;
    for (int k = 0; k < 5; ++k) sum[k] = 2.0 * a[k] - b[k];
    const auto psi = random_spinor(rng);
    const auto lhs = clifford_vector(sum, psi);
    const auto rhs = Complex(2.0) * clifford_vector(a, psi) - clifford_vector(b, psi);
    EXPECT_LT(max_abs(lhs - rhs), 1e-14);
  }
}

TEST(CliffordTwoForm, DetaOnPsi0) {
  EXPECT_EQ(clifford_two_form(deta_form<EC>(), psi0<EC>()), ec(0, -2) * psi0<EC>());
}

TEST(CliffordTwoForm, DetaOnSecondBasisSpinor) {
  SpinorValue<EC> s;
  s[1] = ec(1);
  SpinorValue<EC> expected;
  expected[1] = ec(0, 2);
  EXPECT_EQ(clifford_two_form(deta_form<EC>(), s), expected);
}

TEST(CliffordTwoForm, ZeroForm) {
  EXPECT_EQ(clifford_two_form(KForm<EC>(2), psi0<EC>()), SpinorValue<EC>{});
}

TEST(CliffordTwoForm, DetaMatrixIsPrintedDiagonal) {
  Matrix4<EC> expected;
  expected(1, 1) = ec(0, 2);
  expected(3, 3) = ec(0, -2);
  EXPECT_EQ(clifford_matrix(deta_form<EC>()), expected);
}

TEST(CliffordTwoForm, RejectsWrongDegree) {
  EXPECT_THROW(clifford_two_form(KForm<EC>(1), psi0<EC>()), std::invalid_argument);
}

TEST(DetaProjectors, MatchEigenspaces) {
  const auto p = deta_eigenprojectors<EC>();
  Matrix4<EC> minus;
  minus(3, 3) = ec(1);
  Matrix4<EC> zero;
  zero(0, 0) = ec(1);
  zero(2, 2) = ec(1);
  Matrix4<EC> plus;
  plus(1, 1) = ec(1);
  EXPECT_EQ(p.minus_2i, minus);
  EXPECT_EQ(p.zero, zero);
  EXPECT_EQ(p.plus_2i, plus);
  EXPECT_EQ(p.plus_2i + p.zero + p.minus_2i, Matrix4<EC>::identity());
  EXPECT_EQ(p.plus_2i.trace(), ec(1));
  EXPECT_EQ(p.zero.trace(), ec(2));
  EXPECT_EQ(p.minus_2i.trace(), ec(1));
  EXPECT_EQ(p.zero * p.zero, p.zero);
  EXPECT_EQ(p.zero * p.minus_2i, Matrix4<EC>{});
}

TEST(SigmaH, Psi0GivesMinusIDeta) {
  EXPECT_EQ(sigma_H(psi0<EC>()), ec(0, -1) * deta_form<EC>());
}

TEST(SigmaH, ZeroSpinor) { EXPECT_EQ(sigma_H(SpinorValue<EC>{}), KForm<EC>(2)); }

TEST(SigmaH, ScaledPsi0GivesISDeta) {
  // sqrt(-s) is rational for s = -1, -4; s = -2 goes through the density matrix.
  for (const auto& [s, root] : {std::pair{-1, 1}, std::pair{-4, 2}}) {
    const auto psi = ec(root) * psi0<EC>();
    EXPECT_EQ(sigma_H(psi), ec(0, s) * deta_form<EC>()) << s;
  }
  for (int s : {-1, -2, -4}) {
    const auto rho = ec(-s) * outer(psi0<EC>(), psi0<EC>());
    EXPECT_EQ(sigma_H_from_density(rho), ec(0, s) * deta_form<EC>()) << s;
    const auto psi = Complex(std::sqrt(static_cast<double>(-s))) * psi0<Complex>();
    EXPECT_LT(max_norm(sigma_H(psi) - Complex(0, s) * deta_form<Complex>()), 1e-14);
  }
}

TEST(SigmaH, MatchesOracleOnRandomSpinors) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const auto psi = random_spinor(rng);
    const oracle::V4 v{psi[0], psi[1], psi[2], psi[3]};
    const auto f = sigma_H(psi);
    for (int i = 1; i <= 4; ++i)
      for (int j = i + 1; j <= 4; ++j)
        EXPECT_LT(std::abs(f.at(mask_of({i, j})) - oracle::sigma_entry(i, j, v)), 1e-14);
  }
}

TEST(SigmaH, EntriesArePurelyImaginary) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const auto f = sigma_full(random_spinor(rng));
    for (const auto& x : f.coeffs()) EXPECT_LT(std::abs(x.real()), 1e-14);
  }
}

TEST(SigmaH, QuadraticInSpinor) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-2, 2);
  for (int trial = 0; trial < 100; ++trial) {
    const auto psi = random_spinor(rng);
    const Complex lambda(u(rng), u(rng));
    const auto lhs = sigma_H(lambda * psi);
    const auto rhs = Complex(std::norm(lambda)) * sigma_H(psi);
    EXPECT_LT(max_norm(lhs - rhs), 1e-12);
  }
}

TEST(SigmaFull, DiagonalPairsVanish) {
  std::mt19937_64 rng(13);
  const auto psi = random_spinor(rng);
  for (int i = 0; i < 5; ++i) {
    FrameVector<double> e{};
    e[i] = 1.0;
    EXPECT_LT(std::abs(sigma_pair(psi, e, e)), 1e-15);
  }
}

TEST(SigmaFull, HorizontalRestrictionOfPsi0) {
  const auto split = horizontal_split(sigma_full(psi0<EC>()));
  EXPECT_EQ(split.horizontal, ec(0, -1) * deta_form<EC>());
}

TEST(SigmaFull, BruteForceAllPairs) {
  // psi = (1, 0, 0, 0); the (1,5) entry is the example value.
  const oracle::V4 v{1, 0, 0, 0};
  SpinorValue<Complex> psi;
  psi[0] = 1;
  const auto f = sigma_full(psi);
  for (int i = 1; i <= 5; ++i)
    for (int j = i + 1; j <= 5; ++j)
      EXPECT_EQ(f.at(mask_of({i, j})), oracle::sigma_entry(i, j, v)) << i << j;
  EXPECT_EQ(f.at(mask_of({1, 5})), oracle::sigma_entry(1, 5, v));
}

TEST(SigmaFull, RestrictsToSigmaH) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const auto psi = random_spinor(rng);
    EXPECT_EQ(horizontal_split(sigma_full(psi)).horizontal, sigma_H(psi));
  }
}

TEST(SigmaFull, AntisymmetricOnRandomPairs) {
  std::mt19937_64 rng(19);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int trial = 0; trial < 100; ++trial) {
    const auto psi = random_spinor(rng);
    FrameVector<double> x, y;
    for (auto& a : x) a = u(rng);
    for (auto& a : y) a = u(rng);
    EXPECT_LT(std::abs(sigma_pair(psi, x, y) + sigma_pair(psi, y, x)), 1e-13);
    EXPECT_LT(std::abs(sigma_pair(psi, x, y) - evaluate(sigma_full(psi), x, y)), 1e-13);
  }
}

}  // namespace
}  // namespace swcheck
