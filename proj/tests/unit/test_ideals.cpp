#include "test_support.hpp"

#include "peircelab/harness/oracles.hpp"
#include "peircelab/ideals.hpp"
#include "peircelab/peirce.hpp"

namespace peircelab {
namespace {

using namespace testing;

const TripleModel kM2 = TripleModel::cstar(2);

Subspace annihilator_of(const TripleModel& m, std::initializer_list<ComplexMatrix> s) {
  const std::vector<ComplexMatrix> v(s);
  return orthogonal_annihilator(m, v);
}

TEST(Orthogonality, DiagonalUnits) {
  EXPECT_TRUE(is_orthogonal(kM2, E(2, 1, 1), E(2, 2, 2)));
  EXPECT_TRUE(is_orthogonal(kM2, E(2, 2, 2), E(2, 1, 1)));
}

TEST(Orthogonality, SharedRow) {
  const OrthogonalityReport r = orthogonality_report(kM2, E(2, 1, 1), E(2, 1, 2));
  EXPECT_FALSE(r.orthogonal);
  EXPECT_GT(r.cstar_residual, 0.5);
}

TEST(Orthogonality, ZeroIsOrthogonalToAll) {
  auto g = rng(51);
  EXPECT_TRUE(is_orthogonal(kM2, rnd::ginibre(g, 2, 2), ComplexMatrix::Zero(2, 2)));
}

TEST(Orthogonality, AgreesWithCStarCriterion) {
  auto g = rng(52);
  const TripleModel m = TripleModel::rect(3, 4);
  for (int t = 0; t < 20; ++t) {
    const ComplexMatrix u = rnd::haar_unitary(g, 3), v = rnd::haar_unitary(g, 4);
    const ComplexMatrix a = u.leftCols(1) * rnd::ginibre(g, 1, 2) * v.leftCols(2).adjoint();
    const ComplexMatrix b = t % 2 ? ComplexMatrix(u.rightCols(2) * rnd::ginibre(g, 2, 2) * v.rightCols(2).adjoint())
                                  : rnd::ginibre(g, 3, 4);
    const bool expected = oracle::cstar_orthogonality(a, b) <= 1e-9;
    EXPECT_EQ(is_orthogonal(m, a, b), expected);
    EXPECT_EQ(expected, t % 2 == 1);
  }
}

TEST(Annihilator, MatrixUnit) {
  const Subspace a = annihilator_of(kM2, {E(2, 1, 1)});
  EXPECT_EQ(a.dimension(), 1);
  EXPECT_TRUE(a.contains(E(2, 2, 2), 1e-12));
}

TEST(Annihilator, ZeroAndIdentity) {
  EXPECT_EQ(annihilator_of(kM2, {ComplexMatrix::Zero(2, 2)}).dimension(), 4);
  EXPECT_TRUE(annihilator_of(kM2, {I(2)}).is_zero());
  EXPECT_EQ(orthogonal_annihilator(kM2, std::span<const ComplexMatrix>()).dimension(), 4);
}

TEST(Annihilator, MatchesCornerOracle) {
  auto g = rng(53);
  for (const TripleModel m : {TripleModel::rect(2, 3), TripleModel::cstar(3), TripleModel::jbstar(4)}) {
    for (Index r = 0; r <= std::min(m.m, m.n); ++r) {
      const ComplexMatrix x = rnd::ginibre(g, m.m, r) * rnd::ginibre(g, r, m.n);
      EXPECT_TRUE(same_subspace(annihilator_of(m, {x}), oracle::annihilator(x), 1e-9))
          << m.name() << " rank " << r;
    }
  }
}

TEST(QuadraticAnnihilator, Examples) {
  const ComplexMatrix s[] = {E(2, 1, 1)};
  EXPECT_TRUE(in_outer_quadratic_annihilator(kM2, E(2, 2, 2), s));
  EXPECT_TRUE(in_outer_quadratic_annihilator(kM2, ComplexMatrix::Zero(2, 2), s));
  EXPECT_FALSE(in_outer_quadratic_annihilator(kM2, I(2), s));
  EXPECT_TRUE(in_inner_quadratic_annihilator(kM2, E(2, 2, 2), s));
  EXPECT_THROW(in_outer_quadratic_annihilator(TripleModel::rect(2, 3), unit(2, 3, 0, 0),
                                              std::span<const ComplexMatrix>()),
               Error);
}

TEST(InnerIdealGenerated, Examples) {
  const Subspace e11 = inner_ideal_generated(kM2, E(2, 1, 1));
  EXPECT_EQ(e11.dimension(), 1);
  EXPECT_TRUE(e11.contains(E(2, 1, 1), 1e-12));
  EXPECT_EQ(inner_ideal_generated(kM2, diag({2, 1})).dimension(), 4);
  EXPECT_TRUE(inner_ideal_generated(kM2, ComplexMatrix::Zero(2, 2)).is_zero());
}

TEST(InnerIdealGenerated, IsCornerOfSupportProjections) {
  auto g = rng(54);
  const TripleModel m = TripleModel::rect(3, 4);
  for (int t = 0; t < 10; ++t) {
    const ComplexMatrix x = rnd::ginibre(g, 3, 2) * rnd::ginibre(g, 2, 4);
    const Subspace ex = inner_ideal_generated(m, x);
    EXPECT_EQ(ex.dimension(), 4);
    EXPECT_TRUE(same_subspace(ex, oracle::corner(oracle::psd_support(x * x.adjoint()),
                                                 oracle::psd_support(x.adjoint() * x)),
                              1e-9));
    EXPECT_TRUE(is_inner_ideal(m, ex));
  }
}

TEST(InnerIdeal, PeirceTwoAndWholeSpace) {
  auto g = rng(55);
  const SvdResult d = svd(rnd::ginibre(g, 3, 3));
  const Tripotent e(TripleModel::cstar(3), d.left.leftCols(2) * d.right.leftCols(2).adjoint());
  EXPECT_TRUE(is_inner_ideal(TripleModel::cstar(3), peirce_decompose(e).s2));
  EXPECT_TRUE(is_inner_ideal(kM2, Subspace::whole({2, 2})));
}

TEST(InnerIdeal, SymmetricOffDiagonalLineIsNot) {
  const ComplexMatrix u[] = {E(2, 1, 2) + E(2, 2, 1)};
  const Subspace s = Subspace::span({2, 2}, u);
  EXPECT_FALSE(is_inner_ideal(kM2, s));
  // {u, E11, u} = (u E11 u) = E22 lies outside the line.
  EXPECT_MAT_NEAR(triple_product(kM2, u[0], E(2, 1, 1), u[0]), E(2, 2, 2), 1e-14);
}

TEST(SubspaceOrthogonality, GeneratedIdeals) {
  EXPECT_TRUE(subspaces_orthogonal(kM2, inner_ideal_generated(kM2, E(2, 1, 1)),
                                   inner_ideal_generated(kM2, E(2, 2, 2))));
  EXPECT_FALSE(subspaces_orthogonal(kM2, inner_ideal_generated(kM2, E(2, 1, 1)),
                                    inner_ideal_generated(kM2, E(2, 1, 2))));
}

}  // namespace
}  // namespace peircelab
