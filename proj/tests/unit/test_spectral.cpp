#include "test_support.hpp"

#include <cmath>

#include "peircelab/harness/oracles.hpp"
#include "peircelab/spectral.hpp"

namespace peircelab {
namespace {

using namespace testing;

const TripleModel kM2 = TripleModel::cstar(2);
const ComplexMatrix kNil = rows({{0, 2}, {0, 0}});

TEST(TripleSpectrum, Diagonal) {
  const TripleSpectrum s = triple_spectrum(kM2, diag({3, 1}));
  ASSERT_EQ(s.values.size(), 2u);
  EXPECT_NEAR(s.values[0], 1.0, 1e-14);
  EXPECT_NEAR(s.values[1], 3.0, 1e-14);
  EXPECT_FALSE(s.includes_zero);
}

TEST(TripleSpectrum, ZeroElement) {
  const TripleSpectrum s = triple_spectrum(kM2, ComplexMatrix::Zero(2, 2));
  EXPECT_TRUE(s.values.empty());
  EXPECT_FALSE(s.includes_zero);
}

TEST(TripleSpectrum, TripotentHasSpectrumOne) {
  const TripleSpectrum s = triple_spectrum(TripleModel::rect(2, 3), unit(2, 3, 0, 2));
  ASSERT_EQ(s.values.size(), 1u);
  EXPECT_NEAR(s.values[0], 1.0, 1e-14);
  EXPECT_TRUE(s.includes_zero);
}

TEST(OddCalculus, CubeFixesTripotent) {
  const ComplexMatrix e = E(2, 1, 2);
  EXPECT_MAT_NEAR(odd_calculus(kM2, e, [](double t) { return t * t * t; }), e, 1e-14);
}

TEST(OddCalculus, CubeRoot) {
  EXPECT_MAT_NEAR(odd_calculus(kM2, 8.0 * E(2, 1, 2), [](double t) { return std::cbrt(t); }), 2.0 * E(2, 1, 2), 1e-13);
}

TEST(OddCalculus, IdentityFunction) {
  auto g = rng(41);
  const ComplexMatrix a = rnd::ginibre(g, 2, 2);
  EXPECT_MAT_NEAR(odd_calculus(kM2, a, [](double t) { return t; }), a, 1e-13);
}

TEST(RangeTripotent, NilpotentExample) {
  EXPECT_MAT_NEAR(range_tripotent(kM2, kNil).element(), E(2, 1, 2), 1e-14);
}

TEST(RangeTripotent, FixesTripotentsAndZero) {
  EXPECT_MAT_NEAR(range_tripotent(kM2, E(2, 2, 1)).element(), E(2, 2, 1), 1e-14);
  EXPECT_MAT_NEAR(range_tripotent(kM2, ComplexMatrix::Zero(2, 2)).element(), ComplexMatrix::Zero(2, 2), 0.0);
}

TEST(RangeTripotent, MatchesOracleOnRandomInput) {
  auto g = rng(42);
  const TripleModel m = TripleModel::rect(3, 4);
  for (int t = 0; t < 10; ++t) {
    const ComplexMatrix a = rnd::ginibre(g, 3, 2) * rnd::ginibre(g, 2, 4);
    EXPECT_MAT_NEAR(range_tripotent(m, a).element(), oracle::range_tripotent(a), 1e-10);
  }
}

TEST(SupportTripotent, Examples) {
  EXPECT_MAT_NEAR(support_tripotent(kM2, E(2, 1, 2)).element(), E(2, 1, 2), 1e-14);
  EXPECT_MAT_NEAR(support_tripotent(kM2, diag({1, 0.5})).element(), diag({1, 0}), 1e-14);
  EXPECT_MAT_NEAR(support_tripotent(kM2, I(2)).element(), I(2), 1e-14);
}

TEST(SupportTripotent, NeedsNormOne) {
  try {
    support_tripotent(kM2, diag({2, 1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotNormOne);
  }
}

TEST(Polar, NilpotentExample) {
  const PolarData p = polar_decomposition(kM2, kNil);
  EXPECT_MAT_NEAR(p.isometry.element(), E(2, 1, 2), 1e-14);
  EXPECT_MAT_NEAR(p.modulus, diag({0, 2}), 1e-14);
  EXPECT_MAT_NEAR(p.lp, E(2, 1, 1), 1e-14);
  EXPECT_MAT_NEAR(p.rp, E(2, 2, 2), 1e-14);
}

TEST(Polar, PositiveElement) {
  const ComplexMatrix a = diag({2, 0.5, 0});
  const PolarData p = polar_decomposition(TripleModel::cstar(3), a);
  EXPECT_MAT_NEAR(p.isometry.element(), diag({1, 1, 0}), 1e-14);
  EXPECT_MAT_NEAR(p.modulus, a, 1e-14);
}

TEST(Polar, Unitary) {
  auto g = rng(43);
  const ComplexMatrix u = rnd::haar_unitary(g, 3);
  const PolarData p = polar_decomposition(TripleModel::cstar(3), u);
  EXPECT_MAT_NEAR(p.isometry.element(), u, 1e-12);
  EXPECT_MAT_NEAR(p.modulus, I(3), 1e-12);
}

TEST(Polar, MatchesOracles) {
  auto g = rng(44);
  const TripleModel m = TripleModel::cstar(4);
  for (int t = 0; t < 10; ++t) {
    const ComplexMatrix x = rnd::ginibre(g, 4, 2) * rnd::ginibre(g, 2, 4);
    const PolarData p = polar_decomposition(m, x);
    EXPECT_MAT_NEAR(p.isometry.element() * p.modulus, x, 1e-11);
    EXPECT_MAT_NEAR(p.modulus, oracle::modulus(x), 1e-10);
    EXPECT_MAT_NEAR(p.lp, oracle::psd_support(x * x.adjoint()), 1e-10);
  }
}

TEST(GeneralizedInverse, RankDeficientDiagonalIsRegular) {
  const ComplexMatrix a = diag({2, 0});
  EXPECT_TRUE(is_regular(kM2, a));
  EXPECT_MAT_NEAR(generalized_inverse(kM2, a), diag({0.5, 0}), 1e-14);
}

TEST(GeneralizedInverse, TripotentIsSelfInverse) {
  EXPECT_MAT_NEAR(generalized_inverse(kM2, E(2, 1, 2)), E(2, 1, 2), 1e-14);
}

TEST(GeneralizedInverse, InvertibleDiagonal) {
  EXPECT_MAT_NEAR(generalized_inverse(kM2, diag({2, 1})), diag({0.5, 1}), 1e-14);
}

TEST(GeneralizedInverse, MatchesMoorePenroseOracle) {
  auto g = rng(45);
  const TripleModel m = TripleModel::rect(2, 4);
  for (int t = 0; t < 10; ++t) {
    const ComplexMatrix a = rnd::ginibre(g, 2, 4);
    const ComplexMatrix ai = generalized_inverse(m, a);
    EXPECT_MAT_NEAR(ai, oracle::generalized_inverse(a), 1e-9);
    // In the rectangular triple the inverse of a is (a^+)* for the Moore-Penrose a^+.
    const ComplexMatrix mp = a.completeOrthogonalDecomposition().pseudoInverse();
    EXPECT_MAT_NEAR(ai, mp.adjoint(), 1e-9);
    EXPECT_LE(check_generalized_inverse(m, a, ai).worst(), 1e-10);
  }
}

TEST(GeneralizedInverse, ZeroIsItsOwnInverse) {
  EXPECT_MAT_NEAR(generalized_inverse(kM2, ComplexMatrix::Zero(2, 2)), ComplexMatrix::Zero(2, 2), 0.0);
}

}  // namespace
}  // namespace peircelab
