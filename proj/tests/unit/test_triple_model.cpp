#include "test_support.hpp"

#include "peircelab/subspace.hpp"
#include "peircelab/triple_model.hpp"

namespace peircelab {
namespace {

using namespace testing;

ComplexMatrix associative(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& c) {
  return 0.5 * (a * b.adjoint() * c + c * b.adjoint() * a);
}

TEST(TripleProduct, IdentityTripotent) {
  const TripleModel m = TripleModel::cstar(2);
  EXPECT_MAT_NEAR(triple_product(m, I(2), I(2), I(2)), I(2), 0.0);
}

TEST(TripleProduct, RectangularRowVectors) {
  const TripleModel m = TripleModel::rect(1, 2);
  const ComplexMatrix a = rows({{1, 0}}), b = rows({{0, 1}});
  // a b* = 0 and b b* = 1, so only the second term survives.
  EXPECT_MAT_NEAR(triple_product(m, a, b, b), rows({{0.5, 0}}), 1e-15);
}

TEST(TripleProduct, JordanFormulaOnOrthogonalUnits) {
  const TripleModel m = TripleModel::jbstar(2);
  EXPECT_MAT_NEAR(triple_product(m, E(2, 1, 1), I(2), E(2, 2, 2)), ComplexMatrix::Zero(2, 2), 1e-15);
}

TEST(TripleProduct, JordanFormulaAgreesWithAssociativeOne) {
  auto g = rng(21);
  const TripleModel m = TripleModel::jbstar(3);
  for (int t = 0; t < 20; ++t) {
    const ComplexMatrix a = rnd::ginibre(g, 3, 3), b = rnd::ginibre(g, 3, 3), c = rnd::ginibre(g, 3, 3);
    EXPECT_MAT_NEAR(triple_product(m, a, b, c), associative(a, b, c), 1e-12);
  }
}

TEST(TripleProduct, ShapeMismatch) {
  const TripleModel m = TripleModel::cstar(2);
  try {
    triple_product(m, I(2), I(3), I(2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kShapeMismatch);
  }
}

TEST(TripleModel, NamesRoundTrip) {
  for (ModelKind k : {ModelKind::kRect, ModelKind::kCStar, ModelKind::kJBStar})
    EXPECT_EQ(parse_kind(kind_name(k)), k);
  EXPECT_THROW(parse_kind("octonions"), Error);
  EXPECT_FALSE(TripleModel::rect(2, 3).square());
  EXPECT_EQ(TripleModel::cstar(3).shape(), (Shape{3, 3}));
}

TEST(Jordan, MatrixUnitProduct) {
  EXPECT_MAT_NEAR(jordan_product(E(2, 1, 1), E(2, 1, 2)), 0.5 * E(2, 1, 2), 1e-15);
}

TEST(Jordan, UOfProjectionIsCompression) {
  auto g = rng(22);
  for (int t = 0; t < 10; ++t) {
    const ComplexMatrix p = rnd::projection(g, 3, 2);
    const ComplexMatrix b = rnd::ginibre(g, 3, 3);
    EXPECT_MAT_NEAR(jordan_u(p, b), p * b * p, 1e-12);
  }
}

TEST(Jordan, UOfIdentity) {
  auto g = rng(23);
  const ComplexMatrix b = rnd::ginibre(g, 3, 3);
  EXPECT_MAT_NEAR(jordan_u(I(3), b), b, 1e-14);
}

TEST(Jordan, UIsAssociativeSandwich) {
  auto g = rng(24);
  const ComplexMatrix a = rnd::ginibre(g, 3, 3), b = rnd::ginibre(g, 3, 3);
  EXPECT_MAT_NEAR(jordan_u(a, b), a * b * a, 1e-12);
  const ComplexMatrix c = rnd::ginibre(g, 3, 3), x = rnd::ginibre(g, 3, 3);
  EXPECT_MAT_NEAR(jordan_u2(a, c, x), 0.5 * (a * x * c + c * x * a), 1e-12);
}

TEST(Jordan, RectangularModelIsUnsupported) {
  try {
    jordan_ops(TripleModel::rect(2, 3), I(2), I(2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnsupportedModel);
  }
}

TEST(Materialize, LOfZeroIsZero) {
  const TripleModel m = TripleModel::cstar(2);
  EXPECT_EQ(materialize_L(m, ComplexMatrix::Zero(2, 2), I(2)).norm(), 0.0);
}

TEST(Materialize, QOfE11HasOneDimensionalImage) {
  const TripleModel m = TripleModel::cstar(2);
  const RealifiedMap q = materialize_Q(m, E(2, 1, 1));
  const Subspace im = image(q);
  EXPECT_EQ(im.dimension(), 1);
  EXPECT_TRUE(im.contains(E(2, 1, 1), 1e-12));
  EXPECT_MAT_NEAR(q.apply(rows({{Complex(1, 2), 3}, {4, 5}})), Complex(1, -2) * E(2, 1, 1), 1e-14);
}

TEST(Materialize, LOfUnitaryTripotentIsIdentity) {
  const TripleModel m = TripleModel::cstar(2);
  EXPECT_LE(distance(materialize_L(m, I(2), I(2)), RealifiedMap::identity({2, 2})), 1e-14);
}

TEST(Materialize, UAndTMatchJordanMaps) {
  auto g = rng(25);
  const TripleModel m = TripleModel::jbstar(2);
  const ComplexMatrix a = rnd::ginibre(g, 2, 2), x = rnd::ginibre(g, 2, 2);
  EXPECT_MAT_NEAR(materialize_U(m, a).apply(x), jordan_u(a, x), 1e-12);
  EXPECT_MAT_NEAR(materialize_T(m, a).apply(x), jordan_product(a, x), 1e-12);
}

TEST(Quadratic, IsConjugateLinear) {
  auto g = rng(26);
  const TripleModel m = TripleModel::rect(2, 3);
  const ComplexMatrix a = rnd::ginibre(g, 2, 3), x = rnd::ginibre(g, 2, 3);
  const Complex lam(0.3, -1.2);
  EXPECT_MAT_NEAR(quadratic(m, a, lam * x), std::conj(lam) * quadratic(m, a, x), 1e-12);
  EXPECT_MAT_NEAR(quadratic(m, a, x), a * x.adjoint() * a, 1e-12);
}

}  // namespace
}  // namespace peircelab
