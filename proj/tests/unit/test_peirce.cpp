#include "test_support.hpp"

#include <numbers>

#include "peircelab/harness/oracles.hpp"
#include "peircelab/peirce.hpp"

namespace peircelab {
namespace {

using namespace testing;

const TripleModel kM2 = TripleModel::cstar(2);

TEST(Tripotent, Identity) { EXPECT_TRUE(is_tripotent(TripleModel::cstar(3), I(3))); }

TEST(Tripotent, ScaledUnitIsNot) {
  // {a,a,a} = 8 E11
  EXPECT_MAT_NEAR(triple_product(kM2, 2.0 * E(2, 1, 1), 2.0 * E(2, 1, 1), 2.0 * E(2, 1, 1)), 8.0 * E(2, 1, 1), 1e-14);
  EXPECT_FALSE(is_tripotent(kM2, 2.0 * E(2, 1, 1)));
  try {
    Tripotent(kM2, 2.0 * E(2, 1, 1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotTripotent);
  }
}

TEST(Tripotent, SingularValuesZeroOrOne) {
  auto g = rng(31);
  const TripleModel m = TripleModel::rect(3, 4);
  for (int t = 0; t < 10; ++t) {
    const SvdResult d = svd(rnd::ginibre(g, 3, 4));
    const ComplexMatrix e = d.left.leftCols(2) * d.right.leftCols(2).adjoint();
    EXPECT_TRUE(is_tripotent(m, e));
    EXPECT_FALSE(is_tripotent(m, 0.5 * e));
  }
}

TEST(PeirceDecompose, MatrixUnit) {
  const PeirceDecomposition d = peirce_decompose(Tripotent(kM2, E(2, 1, 1)));
  EXPECT_EQ(d.s2.dimension(), 1);
  EXPECT_EQ(d.s1.dimension(), 2);
  EXPECT_EQ(d.s0.dimension(), 1);
  EXPECT_TRUE(d.s2.contains(E(2, 1, 1), 1e-12));
  EXPECT_TRUE(d.s1.contains(E(2, 1, 2), 1e-12));
  EXPECT_TRUE(d.s1.contains(E(2, 2, 1), 1e-12));
  EXPECT_TRUE(d.s0.contains(E(2, 2, 2), 1e-12));
}

TEST(PeirceDecompose, UnitaryTripotent) {
  const PeirceDecomposition d = peirce_decompose(Tripotent(kM2, I(2)));
  EXPECT_EQ(d.s2.dimension(), 4);
  EXPECT_TRUE(d.s1.is_zero());
  EXPECT_TRUE(d.s0.is_zero());
}

TEST(PeirceDecompose, ZeroTripotent) {
  const PeirceDecomposition d = peirce_decompose(Tripotent::zero(kM2));
  EXPECT_EQ(d.s0.dimension(), 4);
  EXPECT_TRUE(d.s2.is_zero());
}

TEST(PeirceDecompose, FullRankRectangularTripotentHasNoPeirceZero) {
  const TripleModel m = TripleModel::rect(2, 3);
  auto g = rng(32);
  const SvdResult d = svd(rnd::ginibre(g, 2, 3));
  const ComplexMatrix e = d.left * d.right.leftCols(2).adjoint();
  const PeirceDecomposition p = peirce_decompose(Tripotent(m, e));
  EXPECT_TRUE(p.s0.is_zero());
  EXPECT_EQ(p.s2.dimension(), 4);
  EXPECT_EQ(p.s1.dimension(), 2);
}

TEST(PeirceDecompose, MatchesCornerOracle) {
  auto g = rng(33);
  for (const TripleModel m : {TripleModel::rect(3, 4), TripleModel::cstar(3), TripleModel::jbstar(3)}) {
    for (Index r = 0; r <= 3; ++r) {
      const SvdResult d = svd(rnd::ginibre(g, m.m, m.n));
      const ComplexMatrix e = d.left.leftCols(r) * d.right.leftCols(r).adjoint();
      const PeirceDecomposition p = peirce_decompose(Tripotent(m, e));
      const ComplexMatrix x = rnd::ginibre(g, m.m, m.n);
      for (int k = 0; k < 3; ++k) {
        EXPECT_MAT_NEAR(p.projection(k).apply(x), oracle::peirce_part(e, x, k), 1e-12);
        EXPECT_TRUE(same_subspace(p.subspace(k), oracle::peirce_space(e, k), 1e-9));
      }
      EXPECT_MAT_NEAR(peirce2_project(Tripotent(m, e), x), oracle::peirce_part(e, x, 2), 1e-12);
    }
  }
}

TEST(Peirce2Algebra, UnitBehaves) {
  const Tripotent e(kM2, E(2, 1, 1));
  const Peirce2Algebra alg(e);
  EXPECT_MAT_NEAR(alg.involution(E(2, 1, 1)), E(2, 1, 1), 1e-15);
  EXPECT_MAT_NEAR(alg.product(E(2, 1, 1), E(2, 1, 1)), E(2, 1, 1), 1e-15);
  EXPECT_MAT_NEAR(alg.unit(), E(2, 1, 1), 0.0);
}

TEST(Peirce2Algebra, OffDiagonalTripotent) {
  // {E12, E12, E12} = E12
  const Peirce2Algebra alg(Tripotent(kM2, E(2, 1, 2)));
  EXPECT_MAT_NEAR(alg.involution(E(2, 1, 2)), E(2, 1, 2), 1e-15);
}

TEST(Peirce2Algebra, IdentityGivesJordanStructure) {
  auto g = rng(34);
  const Peirce2Algebra alg(Tripotent(kM2, I(2)));
  const ComplexMatrix x = rnd::ginibre(g, 2, 2), y = rnd::ginibre(g, 2, 2);
  EXPECT_MAT_NEAR(alg.product(x, y), jordan_product(x, y), 1e-13);
  EXPECT_MAT_NEAR(alg.involution(x), x.adjoint(), 1e-13);
  EXPECT_MAT_NEAR(alg.cstar_product(x, y), x * y, 1e-13);
  EXPECT_MAT_NEAR(alg.cstar_involution(x), x.adjoint(), 1e-13);
}

TEST(Peirce2Algebra, RejectsOutsiders) {
  const Peirce2Algebra alg(Tripotent(kM2, E(2, 1, 1)));
  try {
    alg.product(E(2, 1, 2), E(2, 1, 1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotInPeirce2);
  }
}

TEST(TripotentOrder, Examples) {
  const Tripotent e11(kM2, E(2, 1, 1)), e22(kM2, E(2, 2, 2)), id(kM2, I(2));
  EXPECT_TRUE(tripotent_leq(e11, id));
  EXPECT_TRUE(tripotent_leq(e11, e11));
  EXPECT_FALSE(tripotent_leq(e11, e22));
  EXPECT_FALSE(tripotent_leq(id, e11));
  EXPECT_TRUE(tripotent_leq(Tripotent::zero(kM2), e22));
}

TEST(PeirceAutomorphism, TrivialAngleIsIdentity) {
  auto g = rng(35);
  const SvdResult d = svd(rnd::ginibre(g, 3, 3));
  const Tripotent e(TripleModel::cstar(3), d.left.leftCols(2) * d.right.leftCols(2).adjoint());
  for (auto v : {AutomorphismVariant::kS, AutomorphismVariant::kR})
    EXPECT_LE(distance(peirce_automorphism(e, 1.0, v), RealifiedMap::identity({3, 3})), 1e-12);
}

TEST(PeirceAutomorphism, SignFlipOnPeirceOne) {
  const Tripotent e(kM2, E(2, 1, 1));
  EXPECT_MAT_NEAR(peirce_automorphism(e, -1.0, AutomorphismVariant::kS).apply(E(2, 1, 2)), -E(2, 1, 2), 1e-14);
  EXPECT_MAT_NEAR(peirce_automorphism(e, -1.0, AutomorphismVariant::kS).apply(E(2, 2, 2)), E(2, 2, 2), 1e-14);
}

TEST(PeirceAutomorphism, PreservesTripleProduct) {
  auto g = rng(36);
  const TripleModel m = TripleModel::rect(2, 3);
  const SvdResult d = svd(rnd::ginibre(g, 2, 3));
  const Tripotent e(m, d.left.leftCols(1) * d.right.leftCols(1).adjoint());
  const ComplexMatrix a = rnd::ginibre(g, 2, 3), b = rnd::ginibre(g, 2, 3), c = rnd::ginibre(g, 2, 3);
  for (int k = 0; k < 8; ++k) {
    const Complex lam = std::polar(1.0, k * std::numbers::pi / 4.0);
    for (auto v : {AutomorphismVariant::kS, AutomorphismVariant::kR}) {
      const RealifiedMap f = peirce_automorphism(e, lam, v);
      EXPECT_MAT_NEAR(f.apply(triple_product(m, a, b, c)),
                      triple_product(m, f.apply(a), f.apply(b), f.apply(c)), 1e-11);
    }
  }
}

TEST(PeirceAutomorphism, RejectsOffCircle) {
  try {
    peirce_automorphism(Tripotent(kM2, I(2)), 0.5, AutomorphismVariant::kR);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotUnitModulus);
  }
}

}  // namespace
}  // namespace peircelab
