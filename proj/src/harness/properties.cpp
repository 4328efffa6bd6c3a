#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "peircelab/approximation.hpp"
#include "peircelab/harness/harness.hpp"
#include "peircelab/harness/oracles.hpp"
#include "peircelab/ideals.hpp"
#include "peircelab/peirce.hpp"
#include "peircelab/random.hpp"
#include "peircelab/spectral.hpp"
#include "peircelab/witnesses.hpp"

namespace peircelab::harness {

namespace {

constexpr ModelKind kRect = ModelKind::kRect;
constexpr ModelKind kCStar = ModelKind::kCStar;
constexpr ModelKind kJB = ModelKind::kJBStar;

double flag(bool ok) { return ok ? 0.0 : 1.0; }

double nrm(const ComplexMatrix& a) { return op_norm(a); }

// ||d|| / max(tiny, scale)
double rel(const ComplexMatrix& d, double scale) {
  return op_norm(d) / std::max(scale, 1e-300);
}

double rel1(const ComplexMatrix& d, double scale) { return op_norm(d) / std::max(1.0, scale); }

ComplexMatrix identity(Index n) { return ComplexMatrix::Identity(n, n); }

ComplexMatrix eye_like(const ComplexMatrix& a) { return identity(a.rows()); }

// Partial isometry U V* from the singular pairs above kRankTol * max(||a||, scale).
ComplexMatrix sign_of(const ComplexMatrix& a, double scale = 0.0) {
  const SvdResult d = svd(a);
  Index r = 0;
  const double cut = kRankTol * std::max(d.singular.size() ? d.singular(0) : 0.0, scale);
  while (r < d.singular.size() && d.singular(r) > cut) ++r;
  if (r == 0) return ComplexMatrix::Zero(a.rows(), a.cols());
  return d.left.leftCols(r) * d.right.leftCols(r).adjoint();
}

RealifiedMap u2_map(const TripleModel& model, const ComplexMatrix& a, const ComplexMatrix& b) {
  const Shape s = model.shape();
  return RealifiedMap::materialize(s, s, [&](const ComplexMatrix& x) { return jordan_u2(a, b, x); });
}

ComplexMatrix power(const ComplexMatrix& a, int k) {
  ComplexMatrix out = identity(a.rows());
  for (int i = 0; i < k; ++i) out = out * a;
  return out;
}

// Orthogonal projection pairs (l1, l2) on C^m and (r1, r2) on C^n.
struct Corners {
  ComplexMatrix l1, l2, r1, r2;
};

Corners split_corners(TrialContext& ctx) {
  const TripleModel& model = ctx.model();
  const ComplexMatrix u = ctx.unitary(model.m);
  const ComplexMatrix v = ctx.unitary(model.n);
  const Index km = ctx.uniform(0, model.m);
  const Index kn = ctx.uniform(0, model.n);
  Corners c;
  // Complements from the remaining columns, so an empty corner is exactly zero.
  c.l1 = u.leftCols(km) * u.leftCols(km).adjoint();
  c.l2 = u.rightCols(model.m - km) * u.rightCols(model.m - km).adjoint();
  c.r1 = v.leftCols(kn) * v.leftCols(kn).adjoint();
  c.r2 = v.rightCols(model.n - kn) * v.rightCols(model.n - kn).adjoint();
  return c;
}

// Element of E_0(e) that is a partial isometry, possibly zero.
ComplexMatrix tripotent_below_complement(TrialContext& ctx, const ComplexMatrix& e) {
  const ComplexMatrix g = ctx.low_rank();
  return sign_of(oracle::peirce_part(e, g, 0), nrm(g));
}

// Projection onto ker h for h >= 0, built from eigenvectors so it is exactly
// zero when h is invertible.
ComplexMatrix kernel_projection(const ComplexMatrix& h) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(0.5 * (h + h.adjoint()));
  const double top = std::max(0.0, es.eigenvalues().maxCoeff());
  Index k = 0;
  while (k < h.rows() && es.eigenvalues()(k) <= oracle::kEigenCut * top) ++k;
  if (top == 0.0) k = h.rows();
  return es.eigenvectors().leftCols(k) * es.eigenvectors().leftCols(k).adjoint();
}

ComplexMatrix herm(const ComplexMatrix& a) { return 0.5 * (a + a.adjoint()); }

Tripotent certified(const TripleModel& model, const ComplexMatrix& e) {
  return Tripotent(model, e, 1e-8);
}

// Element with rank in [1, k] and retained singular values in [lo, hi].
ComplexMatrix conditioned(TrialContext& ctx, double lo, double hi) {
  const Index k = std::min(ctx.model().m, ctx.model().n);
  const Index r = ctx.uniform(1, k);
  std::vector<double> s(static_cast<std::size_t>(k), 0.0);
  for (Index i = 0; i < r; ++i) s[static_cast<std::size_t>(i)] = ctx.uniform_real(lo, hi);
  std::sort(s.rbegin(), s.rend());
  return ctx.with_singular_values(s);
}

// ---------------------------------------------------------------- backend

double svd_reconstruction(TrialContext& ctx) {
  const ComplexMatrix a = ctx.ginibre() * std::pow(10.0, ctx.uniform_real(-2.0, 2.0));
  const SvdResult d = svd(a);
  double r = rel1(d.reconstruct() - a, nrm(a));
  r = std::max(r, nrm(d.left.adjoint() * d.left - eye_like(d.left)));
  r = std::max(r, nrm(d.right.adjoint() * d.right - eye_like(d.right)));
  for (Index i = 1; i < d.singular.size(); ++i) r += flag(d.singular(i) <= d.singular(i - 1));
  return r;
}

double eigen_unitary(TrialContext& ctx) {
  const Index n = ctx.model().m;
  const ComplexMatrix h = herm(ctx.ginibre(n, n)) * std::pow(10.0, ctx.uniform_real(-2.0, 2.0));
  const EigenResult e = hermitian_eigen(h);
  double r = nrm(e.vectors.adjoint() * e.vectors - identity(n));
  const ComplexMatrix rebuilt =
      e.vectors * e.values.cast<Complex>().asDiagonal() * e.vectors.adjoint();
  r = std::max(r, rel1(rebuilt - h, nrm(h)));
  for (Index i = 1; i < e.values.size(); ++i) r += flag(e.values(i) <= e.values(i - 1));
  return r;
}

double rank_nullity(TrialContext& ctx) {
  const TripleModel& model = ctx.model();
  const Index n2 = 2 * model.shape().size();
  const ComplexMatrix a = ctx.low_rank();
  const ComplexMatrix b = ctx.low_rank();
  double r = 0.0;
  for (const RealifiedMap& f : {materialize_L(model, a, b), materialize_Q(model, a)}) {
    const Index k = kernel(f).dimension();
    const Index rank = real_rank(f);
    r += std::abs(static_cast<double>(2 * k + rank - n2));
  }
  return r;
}

// ---------------------------------------------------------------- triple models

double jordan_identity(TrialContext& ctx) {
  const TripleModel& model = ctx.model();
  const ComplexMatrix a = ctx.ginibre();
  const ComplexMatrix b = ctx.ginibre();
  const ComplexMatrix a2 = jordan_ops(model, a, a).product;
  const ComplexMatrix lhs = jordan_product(jordan_ops(model, a, b).product, a2);
  const ComplexMatrix rhs = jordan_product(a, jordan_product(b, a2));
  return rel(lhs - rhs, std::pow(nrm(a), 3) * nrm(b));
}

double fundamental_identity(TrialContext& ctx) {
  const TripleModel& model = ctx.model();
  const ComplexMatrix a = ctx.ginibre();
  const ComplexMatrix b = ctx.ginibre();
  const RealifiedMap qa = materialize_Q(model, a);
  const RealifiedMap qb = materialize_Q(model, b);
  const RealifiedMap qqab = materialize_Q(model, quadratic(model, a, b));
  double r = (qa * qb * qa - qqab).norm() / std::max(1.0, qa.norm() * qa.norm() * qb.norm());
  if (model.square()) {
    const RealifiedMap ua = materialize_U(model, a);
    const RealifiedMap ub = materialize_U(model, b);
    const RealifiedMap uuab = materialize_U(model, jordan_u(a, b));
    r = std::max(r, (ua * ub * ua - uuab).norm() / std::max(1.0, ua.norm() * ua.norm() * ub.norm()));
  }
  return r;
}

double ternary_identity(TrialContext& ctx) {
  const TripleModel& m = ctx.model();
  const ComplexMatrix x = ctx.ginibre(), y = ctx.ginibre(), a = ctx.ginibre(), b = ctx.ginibre(),
                      c = ctx.ginibre();
  auto t = [&](const ComplexMatrix& p, const ComplexMatrix& q, const ComplexMatrix& s) {
    return triple_product(m, p, q, s);
  };
  const ComplexMatrix lhs = t(x, y, t(a, b, c));
  const ComplexMatrix rhs = t(t(x, y, a), b, c) - t(a, t(y, x, b), c) + t(a, b, t(x, y, c));
  return rel(lhs - rhs, nrm(x) * nrm(y) * nrm(a) * nrm(b) * nrm(c));
}

double power_identities(TrialContext& ctx) {
  const TripleModel& model = ctx.model();
  const ComplexMatrix a = ctx.ginibre();
  const double na = std::max(1.0, nrm(a));
  double r = 0.0;
  const RealifiedMap ua = materialize_U(model, a);
  RealifiedMap un = RealifiedMap::identity(model.shape());
  for (int n = 1; n <= 4; ++n) {
    un = un * ua;
    const RealifiedMap uan = materialize_U(model, power(a, n));
    r = std::max(r, (un - uan).norm() / std::pow(na, 2 * n));
  }
  for (int l = 1; l <= 2; ++l) {
    for (int m = 1; m <= 2; ++m) {
      for (int n = 1; n <= 2; ++n) {
        const RealifiedMap t = materialize_T(model, power(a, l));
        const RealifiedMap u = u2_map(model, power(a, m), power(a, n));
        const RealifiedMap rhs =
            u2_map(model, power(a, m + l), power(a, n)) + u2_map(model, power(a, m), power(a, n + l));
        const double scale = std::pow(na, l + m + n);
        r = std::max(r, ((t * u) * 2.0 - rhs).norm() / scale);
        r = std::max(r, ((u * t) * 2.0 - rhs).norm() / scale);
      }
    }
  }
  return r;
}

double non_expansive(TrialContext& ctx) {
  const TripleModel& m = ctx.model();
  ComplexMatrix a = ctx.ginibre(), b = ctx.ginibre(), c = ctx.ginibre();
  if (ctx.coin()) b = a, c = a;
  const double bound = nrm(a) * nrm(b) * nrm(c);
  return std::max(0.0, nrm(triple_product(m, a, b, c)) / bound - 1.0);
}

double sesquilinearity(TrialContext& ctx) {
  const TripleModel& m = ctx.model();
  const ComplexMatrix a = ctx.ginibre(), a2 = ctx.ginibre(), b = ctx.ginibre(), c = ctx.ginibre();
  const Complex lam(ctx.uniform_real(-2, 2), ctx.uniform_real(-2, 2));
  const double scale = (nrm(a) + nrm(a2)) * nrm(b) * nrm(c) * (1.0 + std::abs(lam));
  const ComplexMatrix abc = triple_product(m, a, b, c);
  double r = rel(abc - triple_product(m, c, b, a), scale);
  r = std::max(r, rel(triple_product(m, lam * a + a2, b, c) -
                          (lam * abc + triple_product(m, a2, b, c)),
                      scale));
  r = std::max(r, rel(triple_product(m, a, lam * b, c) - std::conj(lam) * abc, scale));
  return r;
}

double materialize_consistency(TrialContext& ctx) {
  const TripleModel& m = ctx.model();
  const ComplexMatrix a = ctx.ginibre(), b = ctx.ginibre(), z = ctx.ginibre();
  const double scale = nrm(a) * nrm(b) * nrm(z);
  double r = rel(materialize_L(m, a, b).apply(z) - triple_product(m, a, b, z), scale);
  r = std::max(r, rel(materialize_Q(m, a).apply(z) - triple_product(m, a, z, a), nrm(a) * nrm(a) * nrm(z)));
  // Every model agrees with the associative formula.
  r = std::max(r, rel(triple_product(m, a, b, z) - 0.5 * (a * b.adjoint() * z + z * b.adjoint() * a), scale));
  return r;
}

double gelfand_naimark(TrialContext& ctx) {
  const TripleModel& m = ctx.model();
  const ComplexMatrix a = ctx.ginibre();
  const double n3 = std::pow(nrm(a), 3);
  double r = std::abs(nrm(triple_product(m, a, a, a)) - n3) / n3;
  if (m.square()) r = std::max(r, std::abs(nrm(jordan_u(a, a.adjoint())) - n3) / n3);
  return r;
}

// ---------------------------------------------------------------- Peirce

double peirce_projections(TrialContext& ctx) {
  const TripleModel& m = ctx.model();
  const Tripotent e = certified(m, ctx.tripotent());
  const PeirceDecomposition d = peirce_decompose(e);
  const RealifiedMap id = RealifiedMap::identity(m.shape());
  double r = (d.p0 + d.p1 + d.p2 - id).norm();
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const RealifiedMap pp = d.projection(i) * d.projection(j);
      r = std::max(r, (i == j ? pp - d.projection(i) : pp).norm());
    }
  }
  const ComplexMatrix x = ctx.ginibre();
  for (int k = 0; k < 3; ++k) {
    r = std::max(r, rel1(d.projection(k).apply(x) - oracle::peirce_part(e.element(), x, k), nrm(x)));
    r += flag(same_subspace(d.subspace(k), oracle::peirce_space(e.element(), k), 1e-8));
  }
  r += flag(d.s0.dimension() + d.s1.dimension() + d.s2.dimension() == m.shape().size());
  return r;
}

double peirce_rules(TrialContext& ctx) {
  const TripleModel& m = ctx.model();
  const Tripotent e = certified(m, ctx.tripotent());
  const PeirceDecomposition d = peirce_decompose(e);
  ComplexMatrix xs[3];
  for (int k = 0; k < 3; ++k) xs[k] = ctx.note(d.subspace(k).sample(ctx.rng()));
  const ComplexMatrix z = ctx.ginibre();
  auto scale = [](const ComplexMatrix& a) { return std::max(1e-300, op_norm(a)); };
  double r = rel(triple_product(m, xs[2], xs[0], z), scale(xs[2]) * scale(xs[0]) * scale(z));
  r = std::max(r, rel(triple_product(m, xs[0], xs[2], z), scale(xs[2]) * scale(xs[0]) * scale(z)));
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      for (int k = 0; k < 3; ++k) {
        const ComplexMatrix t = triple_product(m, xs[i], xs[j], xs[k]);
        const double s = scale(xs[i]) * scale(xs[j]) * scale(xs[k]);
        const int target = i - j + k;
        const ComplexMatrix outside =
            (target >= 0 && target <= 2) ? ComplexMatrix(t - d.projection(target).apply(t)) : t;
        r = std::max(r, rel(outside, s));
      }
    }
  }
  return r;
}

double peirce_non_expansive(TrialContext& ctx) {
  const Tripotent e = certified(ctx.model(), ctx.tripotent());
  const PeirceDecomposition d = peirce_decompose(e);
  double r = 0.0;
  for (int k = 0; k < 3; ++k) r = std::max(r, d.projection(k).norm() - 1.0);
  return std::max(r, 0.0);
}

double idempotent_order(TrialContext& ctx) {
  const TripleModel& m = ctx.model();
  const Index n = m.n;
  const ComplexMatrix f = ctx.projection();
  const bool below = ctx.coin();
  ComplexMatrix e;
  if (below) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(f);
    const Index rank = static_cast<Index>(std::llround(f.trace().real()));
    e = ctx.note(rnd::projection_within(ctx.rng(), es.eigenvectors().rightCols(rank),
                                        ctx.uniform(0, rank)));
  } else {
    e = ctx.projection();
  }
  const double tol = 1e-8;
  const bool t1 = nrm(jordan_product(e, f) - e) <= tol;
  const Subspace uf = image(materialize_U(m, f), kRankTol, 1.0);
  const bool t2 = uf.residual(e) <= tol;
  const bool t3 = uf.contains(image(materialize_U(m, e), kRankTol, 1.0), tol);
  (void)n;
  return flag(t1 == t2 && t2 == t3 && (!below || t1));
}

double peirce2_compression(TrialContext& ctx) {
  const TripleModel& m = ctx.model();
  const ComplexMatrix p = ctx.projection(ctx.uniform(1, m.n));
  const ComplexMatrix x = p * ctx.ginibre() * p;
  const ComplexMatrix y = p * ctx.ginibre() * p;
  const Peirce2Algebra alg(certified(m, p));
  const double s = nrm(x) * nrm(y);
  double r = rel1(alg.product(x, y) - jordan_product(x, y), s);
  r = std::max(r, rel1(alg.involution(x) - x.adjoint(), nrm(x)));
  r = std::max(r, rel1(alg.cstar_product(x, y) - x * y, s));
  return r;
}

double peirce_automorphism_law(TrialContext& ctx) {
  const TripleModel& m = ctx.model();
  const Tripotent e = certified(m, ctx.tripotent());
  const PeirceDecomposition d = peirce_decompose(e);
  const ComplexMatrix a = ctx.ginibre(), b = ctx.ginibre(), c = ctx.ginibre();
  const double s = nrm(a) * nrm(b) * nrm(c);
  const ComplexMatrix abc = triple_product(m, a, b, c);
  double r = 0.0;
  for (int k = 0; k < 8; ++k) {
    const Complex lam = std::polar(1.0, 2.0 * std::numbers::pi * k / 8.0);
    for (auto v : {AutomorphismVariant::kS, AutomorphismVariant::kR}) {
      const RealifiedMap f = peirce_automorphism(d, lam, v);
      r = std::max(r, rel(f.apply(abc) - triple_product(m, f.apply(a), f.apply(b), f.apply(c)), s));
    }
  }
  return r;
}

// x o_e y, spelled out through the algebra's product.
double peirce2_axioms(TrialContext& ctx) {
  const TripleModel& m = ctx.model();
  const Index k = std::min(m.m, m.n);
  const Tripotent e = certified(m, ctx.tripotent(ctx.uniform(1, k)));
  const Peirce2Algebra alg(e, 1e-8);
  const ComplexMatrix x = peirce2_project(e, ctx.ginibre());
  const ComplexMatrix y = peirce2_project(e, ctx.ginibre());
  const Complex lam(ctx.uniform_real(-1, 1), ctx.uniform_real(-1, 1));
  const double nx = std::max(1.0, nrm(x)), ny = std::max(1.0, nrm(y));
  auto p = [&](const ComplexMatrix& u, const ComplexMatrix& v) { return alg.product(u, v); };
  auto s = [&](const ComplexMatrix& u) { return alg.involution(u); };
  const ComplexMatrix xy = p(x, y);
  const ComplexMatrix x2 = p(x, x);
  double r = alg.membership_residual(xy);
  r = std::max(r, rel1(xy - p(y, x), nx * ny));
  r = std::max(r, rel1(p(e.element(), x) - x, nx));
  r = std::max(r, rel1(p(xy, x2) - p(x, p(y, x2)), std::pow(nx, 3) * ny));
  r = std::max(r, rel1(s(s(x)) - x, nx));
  r = std::max(r, rel1(s(lam * x) - std::conj(lam) * s(x), nx));
  r = std::max(r, rel1(s(xy) - p(s(x), s(y)), nx * ny));
  r = std::max(r, std::max(0.0, nrm(xy) - nrm(x) * nrm(y)) / (nx * ny));
  return r;
}

double peirce2_gelfand_naimark(TrialContext& ctx) {
  const TripleModel& m = ctx.model();
  const Index k = std::min(m.m, m.n);
  const Tripotent e = certified(m, ctx.tripotent(ctx.uniform(1, k)));
  const Peirce2Algebra alg(e, 1e-8);
  const ComplexMatrix x = peirce2_project(e, ctx.ginibre());
  auto p = [&](const ComplexMatrix& u, const ComplexMatrix& v) { return alg.product(u, v); };
  const ComplexMatrix xs = alg.involution(x);
  // U_x(y) = 2 (x o y) o x - x^2 o y in the Peirce-2 algebra.
  const ComplexMatrix u = 2.0 * p(p(x, xs), x) - p(p(x, x), xs);
  const double n3 = std::pow(nrm(x), 3);
  return std::abs(nrm(u) - n3) / n3;
}

double tripotent_order(TrialContext& ctx) {
  const TripleModel& m = ctx.model();
  const ComplexMatrix e = ctx.tripotent();
  const bool built = ctx.coin();
  const ComplexMatrix v = built ? ComplexMatrix(e + tripotent_below_complement(ctx, e)) : ctx.tripotent();
  const Tripotent te = certified(m, e), tv = certified(m, v);
  const bool leq = tripotent_leq(te, tv, 1e-8);
  const bool peirce = nrm(oracle::peirce_part(e, v, 2) - e) <= 1e-8;
  return flag(leq == peirce && (!built || leq) && tripotent_leq(te, te, 1e-8));
}

// ---------------------------------------------------------------- spectral

double ginv_identities(TrialContext& ctx) {
  const TripleModel& m = ctx.model();
  const ComplexMatrix a = conditioned(ctx, 0.2, 2.0) * std::pow(10.0, ctx.uniform_real(-1, 1));
  const ComplexMatrix ai = generalized_inverse(m, a);
  double r = check_generalized_inverse(m, a, ai).worst();
  r = std::max(r, rel1(ai - oracle::generalized_inverse(a), nrm(ai)));
  r += flag(is_regular(m, a));
  return r;
}

double ginv_l_operator(TrialContext& ctx) {
  const TripleModel& m = ctx.model();
  const ComplexMatrix a = conditioned(ctx, 0.2, 2.0);
  const ComplexMatrix ai = generalized_inverse(m, a);
  const ComplexMatrix r = range_tripotent(m, a).element();
  const RealifiedMap lrr = materialize_L(m, r, r);
  return std::max((materialize_L(m, a, ai) - lrr).norm(), (materialize_L(m, ai, a) - lrr).norm());
}

double range_tripotent_minimality(TrialContext& ctx) {
  const TripleModel& m = ctx.model();
  const ComplexMatrix a = ctx.low_rank();
  const Tripotent r = range_tripotent(m, a);
  const Tripotent v = certified(m, r.element() + tripotent_below_complement(ctx, r.element()));
  const Peirce2Positivity pos = peirce2_positivity(v, a);
  double res = std::max({pos.membership, pos.involution, -pos.min_eigen, 0.0});
  res = std::max(res, rel1(r.element() - oracle::range_tripotent(a), 1.0));
  return res + flag(tripotent_leq(r, v));
}

double invertible_peirce2_regular(TrialContext& ctx) {
  const TripleModel& m = ctx.model();
  const Index k = std::min(m.m, m.n);
  const ComplexMatrix e = ctx.tripotent(ctx.uniform(1, k));
  const SvdResult d = svd(e);
  const Index rank = d.rank();
  // x = U_r C V_r* with C invertible.
  std::vector<double> s(static_cast<std::size_t>(rank));
  for (auto& v : s) v = ctx.uniform_real(0.2, 2.0);
  ComplexMatrix c = ctx.unitary(rank) * RealVector::Map(s.data(), rank).cast<Complex>().asDiagonal() *
                    ctx.unitary(rank).adjoint();
  const ComplexMatrix x = d.left.leftCols(rank) * c * d.right.leftCols(rank).adjoint();
  const Tripotent te = certified(m, e);
  const Tripotent u = range_tripotent(m, x);
  double r = flag(is_regular(m, x));
  r = std::max(r, rel1(peirce2_project(te, u.element()) - u.element(), 1.0));
  // u is unitary in E_2(e): E_2(u) = E_2(e).
  const PeirceDecomposition de = peirce_decompose(te);
  const PeirceDecomposition du = peirce_decompose(u);
  r = std::max(r, (du.p2 - de.p2).norm());
  return r;
}

double regular_range_tripotent(TrialContext& ctx) {
  const TripleModel& m = ctx.model();
  const ComplexMatrix a = conditioned(ctx, 0.2, 2.0);
  const Tripotent r = range_tripotent(m, a);
  const WitnessReport w = wor_witness(m, a, Subspace(m.shape()));
  const ComplexMatrix ai = generalized_inverse(m, a);
  const Peirce2Algebra alg(r, 1e-8);
  double res = rel1(r.element() - w.witness, 1.0);
  res = std::max(res, alg.membership_residual(ai));
  res = std::max(res, rel1(alg.product(a, ai) - r.element(), 1.0));
  res = std::max(res, rel1(alg.product(alg.product(a, a), ai) - a, nrm(a)));
  res = std::max(res, rel1(range_tripotent(m, ai).element() - r.element(), 1.0));
  return res;
}

double support_below_range(TrialContext& ctx) {
  const TripleModel& m = ctx.model();
  const Index k = std::min(m.m, m.n);
  std::vector<double> s(static_cast<std::size_t>(k));
  for (auto& v : s) {
    const Index pick = ctx.uniform(0, 2);
    v = pick == 0 ? 1.0 : pick == 1 ? ctx.uniform_real(0.05, 0.95) : 0.0;
  }
  s[0] = 1.0;
  std::sort(s.rbegin(), s.rend());
  const ComplexMatrix a = ctx.with_singular_values(s);
  const Tripotent u = support_tripotent(m, a, 1e-9);
  const Tripotent r = range_tripotent(m, a);
  const Index ones = std::count(s.begin(), s.end(), 1.0);
  return flag(tripotent_leq(u, r, 1e-8)) + flag(svd(u.element()).rank() == ones);
}

double spectrum_shape(TrialContext& ctx) {
  const TripleModel& m = ctx.model();
  const Index k = std::min(m.m, m.n);
  std::vector<double> pool{0.0, ctx.uniform_real(0.1, 1.0), ctx.uniform_real(1.0, 3.0)};
  std::vector<double> s(static_cast<std::size_t>(k));
  for (auto& v : s) v = pool[static_cast<std::size_t>(ctx.uniform(0, 2))];
  std::sort(s.rbegin(), s.rend());
  const ComplexMatrix a = ctx.with_singular_values(s);
  const TripleSpectrum sp = triple_spectrum(m, a);
  std::vector<double> distinct;
  for (double v : s)
    if (v > 0.0 && std::find(distinct.begin(), distinct.end(), v) == distinct.end()) distinct.push_back(v);
  const bool zero = std::count(s.begin(), s.end(), 0.0) > 0 && !distinct.empty();
  double r = flag(sp.values.size() == distinct.size()) + flag(sp.includes_zero == zero);
  r += flag(std::is_sorted(sp.values.begin(), sp.values.end()));
  if (!sp.values.empty()) r += std::abs(sp.values.back() - nrm(a)) + flag(sp.values.front() > 0.0);
  return r;
}

double polar_decomposition_prop(TrialContext& ctx) {
  const TripleModel& m = ctx.model();
  const ComplexMatrix x = ctx.low_rank();
  const PolarData p = polar_decomposition(m, x);
  const ComplexMatrix& e = p.isometry.element();
  double r = rel1(e * p.modulus - x, nrm(x));
  r = std::max(r, nrm(p.lp - oracle::psd_support(x * x.adjoint())));
  r = std::max(r, nrm(p.rp - oracle::psd_support(x.adjoint() * x)));
  r = std::max(r, rel1(p.modulus - oracle::modulus(x), nrm(x)));
  r = std::max(r, nrm(e * e.adjoint() - p.lp) + nrm(e.adjoint() * e - p.rp));
  return r;
}

double odd_calculus_roots(TrialContext& ctx) {
  const TripleModel& m = ctx.model();
  const ComplexMatrix a = ctx.low_rank();
  const ComplexMatrix c = odd_calculus(m, a, [](double t) { return std::cbrt(t); });
  double r = rel1(triple_product(m, c, c, c) - a, nrm(a));
  r = std::max(r, rel1(odd_calculus(m, a, [](double t) { return t; }) - a, nrm(a)));
  return r;
}

// ---------------------------------------------------------------- ideals

double orthogonality_symmetry(TrialContext& ctx) {
  const TripleModel& m = ctx.model();
  const Corners c = split_corners(ctx);
  const ComplexMatrix a = c.l1 * ctx.ginibre() * c.r1;
  const bool built = ctx.coin();
  const ComplexMatrix b = built ? ComplexMatrix(c.l2 * ctx.ginibre() * c.r2) : ctx.ginibre();
  const bool ab = is_orthogonal(m, a, b);
  const bool ba = is_orthogonal(m, b, a);
  const bool cstar = oracle::cstar_orthogonality(a, b) <= 1e-9;
  return flag(ab == ba && ab == cstar && (!built || ab));
}

double orthogonal_inner_ideals(TrialContext& ctx) {
  const TripleModel& m = ctx.model();
  const Corners c = split_corners(ctx);
  const ComplexMatrix a = c.l1 * ctx.ginibre() * c.r1;
  const ComplexMatrix b = ctx.coin() ? ComplexMatrix(c.l2 * ctx.ginibre() * c.r2) : ctx.ginibre();
  const bool elements = is_orthogonal(m, a, b);
  const bool ideals = subspaces_orthogonal(m, inner_ideal_generated(m, a), inner_ideal_generated(m, b));
  return flag(elements == ideals);
}

double annihilator_lattice(TrialContext& ctx) {
  const TripleModel& m = ctx.model();
  const std::vector<ComplexMatrix> s1{ctx.low_rank()};
  const std::vector<ComplexMatrix> s2{s1[0], ctx.low_rank()};
  const Subspace a1 = orthogonal_annihilator(m, s1);
  const Subspace a2 = orthogonal_annihilator(m, s2);
  const Subspace span2 = Subspace::span(m.shape(), s2);
  double r = a1.containment_residual(a2);
  r += static_cast<double>(intersection_dimension(span2, a2, 1e-8));
  r = std::max(r, orthogonal_annihilator(m, a2).containment_residual(span2));
  r = std::max(r, inner_ideal_residual(m, a2));
  r += flag(same_subspace(a1, oracle::annihilator(s1[0]), 1e-8));
  return r;
}

double positive_annihilator_equivalence(TrialContext& ctx) {
  const TripleModel& m = ctx.model();
  const Index n = m.n;
  std::vector<ComplexMatrix> s{ctx.positive_low_rank(ctx.uniform(0, n - 1))};
  if (ctx.coin()) s.push_back(ctx.positive_low_rank(ctx.uniform(0, n - 1)));
  ComplexMatrix total = ComplexMatrix::Zero(n, n);
  for (const auto& x : s) total += x;
  const ComplexMatrix q = kernel_projection(total);
  const Subspace ann = orthogonal_annihilator(m, s);
  const double tol = 1e-8;
  double bad = 0.0;
  auto unit = [](ComplexMatrix z) {
    const double nz = op_norm(z);
    return nz > 0.0 ? ComplexMatrix(z / nz) : z;
  };
  for (int k = 0; k < kDefaultSamples; ++k) {
    // Self-adjoint members of the orthogonal annihilator are outer quadratic annihilators.
    if (!ann.is_zero()) {
      const ComplexMatrix z = unit(herm(ann.sample(ctx.rng())));
      bad += flag(in_outer_quadratic_annihilator(m, z, s, tol));
      const ComplexMatrix w = ann.sample(ctx.rng());
      const ComplexMatrix zp = unit(w * w.adjoint());
      bad += flag(in_inner_quadratic_annihilator(m, zp, s, tol));
    }
    // Self-adjoint z with U_z(s) = 0 are exactly q h q; they lie in S^perp.
    const ComplexMatrix h = rnd::hermitian(ctx.rng(), n);
    const ComplexMatrix z = unit(q * h * q);
    bad += flag(!in_outer_quadratic_annihilator(m, z, s, tol) || ann.contains(z, tol));
    const ComplexMatrix g = rnd::ginibre(ctx.rng(), n, n);
    const ComplexMatrix zp = unit(q * g * g.adjoint() * q);
    bad += flag(!in_inner_quadratic_annihilator(m, zp, s, tol) || ann.contains(zp, tol));
    // Outside both sets at once.
    const ComplexMatrix y = unit(rnd::hermitian(ctx.rng(), n));
    bad += flag(in_outer_quadratic_annihilator(m, y, s, tol) == ann.contains(y, tol));
  }
  return bad;
}

double positive_product_orthogonality(TrialContext& ctx) {
  const TripleModel& m = ctx.model();
  const Index n = m.n;
  const ComplexMatrix h = ctx.positive_low_rank(ctx.uniform(0, n));
  const ComplexMatrix q = kernel_projection(h);
  const bool built = ctx.coin();
  const ComplexMatrix x = built ? ComplexMatrix(q * ctx.ginibre() * q) : ctx.ginibre();
  const bool product = nrm(jordan_product(h, x)) <= 1e-9 * std::max(1.0, nrm(h) * nrm(x));
  const bool orth = is_orthogonal(m, x, h);
  return flag(product == orth && (!built || orth));
}

double generated_inner_ideal(TrialContext& ctx) {
  const TripleModel& m = ctx.model();
  const ComplexMatrix x = ctx.low_rank();
  const Subspace ex = inner_ideal_generated(m, x);
  const ComplexMatrix l = oracle::psd_support(x * x.adjoint());
  const ComplexMatrix r = oracle::psd_support(x.adjoint() * x);
  return inner_ideal_residual(m, ex) + flag(same_subspace(ex, oracle::corner(l, r), 1e-8));
}

// ---------------------------------------------------------------- Rickart

double positive_unit_equivalences(TrialContext& ctx) {
  const Index n = ctx.model().n;
  const ComplexMatrix v = ctx.unitary(n);
  RealVector alpha(n), xi(n);
  const bool built = ctx.coin();
  bool truth = true;
  for (Index i = 0; i < n; ++i) {
    const bool one = ctx.coin();
    alpha(i) = one ? 1.0 : (ctx.coin() ? ctx.uniform_real(0.0, 0.9) : ctx.uniform_real(1.1, 2.0));
    xi(i) = (built && !one) ? 0.0 : ctx.uniform_real(0.0, 1.5);
    if (!one && xi(i) != 0.0) truth = false;
  }
  const ComplexMatrix a = v * alpha.cast<Complex>().asDiagonal() * v.adjoint();
  const ComplexMatrix x = v * xi.cast<Complex>().asDiagonal() * v.adjoint();
  const double s = std::max(1.0, nrm(x));
  const double tol = 1e-9;
  const bool t1 = nrm(a * x - x) <= tol * s;
  const bool t2 = nrm(jordan_product(a, x) - x) <= tol * s;
  const bool t3 = nrm(jordan_u(a, x) - x) <= tol * s;
  return flag(t1 == t2 && t2 == t3 && t1 == truth);
}

double range_projection_commutation(TrialContext& ctx) {
  const TripleModel& m = ctx.model();
  const Index n = m.n;
  const ComplexMatrix v = ctx.unitary(n);
  // Eigenvalue groups: group 0 is the kernel.
  std::vector<Index> group(static_cast<std::size_t>(n));
  const double values[] = {0.0, ctx.uniform_real(0.5, 1.5), ctx.uniform_real(1.5, 3.0)};
  for (auto& g : group) g = ctx.uniform(0, 2);
  RealVector alpha(n);
  for (Index i = 0; i < n; ++i) alpha(i) = values[group[static_cast<std::size_t>(i)]];
  ComplexMatrix blocks = ctx.ginibre(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      if (group[static_cast<std::size_t>(i)] != group[static_cast<std::size_t>(j)]) blocks(i, j) = 0.0;
  const ComplexMatrix a = v * alpha.cast<Complex>().asDiagonal() * v.adjoint();
  const ComplexMatrix b = v * blocks * v.adjoint();
  const ComplexMatrix p = jordan_range_projection(m, herm(a)).projection;
  double pre = 0.0, post = 0.0;
  ComplexMatrix x = ComplexMatrix::Zero(n, n);
  for (Index k = 0; k < n * n; ++k) {
    x(k / n, k % n) = 1.0;
    pre = std::max(pre, nrm(jordan_product(a, jordan_product(b, x)) - jordan_product(jordan_product(a, x), b)));
    post = std::max(post, nrm(jordan_product(p, jordan_product(b, x)) - jordan_product(jordan_product(p, x), b)));
    x(k / n, k % n) = 0.0;
  }
  const double s = std::max(1.0, nrm(b));
  return (pre + post) / s;
}

double peirce2_range_projection(TrialContext& ctx) {
  const TripleModel& m = ctx.model();
  const Index n = m.n;
  const Index rank = ctx.uniform(1, n);
  const ComplexMatrix p = ctx.projection(rank);
  const ComplexMatrix g = ctx.ginibre(n, ctx.uniform(0, rank));
  const ComplexMatrix a = p * g * g.adjoint() * p;
  // Range projection computed inside M_2(p) through a basis of p C^n.
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(p);
  const ComplexMatrix basis = es.eigenvectors().rightCols(rank);
  const ComplexMatrix local = basis * oracle::psd_support(basis.adjoint() * a * basis) * basis.adjoint();
  const ComplexMatrix global = jordan_range_projection(m, herm(a)).projection;
  return nrm(local - global) + nrm(jordan_u(p, global) - global);
}

double wor_range_tripotent_projection(TrialContext& ctx) {
  const TripleModel& m = ctx.model();
  const ComplexMatrix a = ctx.coin() ? ctx.positive() : ctx.positive_low_rank(ctx.uniform(0, m.n));
  const ComplexMatrix r = range_tripotent(m, a).element();
  return nrm(r - r.adjoint()) + nrm(r * r - r);
}

double peirce2_rickart_compatibility(TrialContext& ctx) {
  const TripleModel& m = ctx.model();
  const Index k = std::min(m.m, m.n);
  const ComplexMatrix e = ctx.tripotent(ctx.uniform(1, k));
  const ComplexMatrix rp = e.adjoint() * e;
  const ComplexMatrix g = ctx.ginibre(m.n, ctx.uniform(0, m.n));
  const ComplexMatrix a = e * (rp * g * g.adjoint() * rp);
  const Tripotent te = certified(m, e);
  const Peirce2Positivity pos = peirce2_positivity(te, a);
  const ComplexMatrix r = range_tripotent(m, a).element();
  return std::max({pos.membership, pos.involution, -pos.min_eigen,
                   nrm(peirce2_project(te, r) - r)});
}

// x positive in E_2(v) and {x}^perp = E_0(v).
bool wor_condition(const TripleModel& m, const ComplexMatrix& x, const Tripotent& v, double tol) {
  const Peirce2Positivity pos = peirce2_positivity(v, x);
  if (pos.membership > tol || pos.involution > tol || pos.min_eigen < -tol) return false;
  const ComplexMatrix xs[] = {x};
  const Subspace ann = orthogonal_annihilator(m, std::span<const ComplexMatrix>(xs));
  const Subspace s0 = peirce_decompose(v).s0;
  return ann.dimension() == s0.dimension() && same_subspace(ann, s0, tol);
}

double wor_uniqueness(TrialContext& ctx) {
  const TripleModel& m = ctx.model();
  const double tol = 1e-8;
  const ComplexMatrix x = ctx.low_rank();
  const ComplexMatrix e = wor_witness(m, x, Subspace(m.shape())).witness;
  // Independent candidate.
  const Tripotent v1 = certified(m, oracle::range_tripotent(x));
  double r = 0.0;
  if (wor_condition(m, x, v1, tol)) r = std::max(r, nrm(v1.element() - e));
  else r += 1.0;
  // Strictly larger candidate.
  const ComplexMatrix w = tripotent_below_complement(ctx, e);
  const Tripotent v2 = certified(m, e + w);
  if (wor_condition(m, x, v2, tol)) r = std::max(r, nrm(v2.element() - e));
  // Rotated candidate.
  const Tripotent v3 = certified(m, ctx.unit() * e);
  if (wor_condition(m, x, v3, tol)) r = std::max(r, nrm(v3.element() - e));
  return r;
}

double polar_characterization(TrialContext& ctx) {
  const TripleModel& m = ctx.model();
  const ComplexMatrix x = ctx.low_rank();
  const Tripotent e = polar_decomposition(m, x).isometry;
  double bad = flag(polar_isometry_characterization(m, x, e));
  const std::vector<ComplexMatrix> others{
      e.element() + tripotent_below_complement(ctx, e.element()),
      ctx.unit() * e.element(),
      ctx.tripotent(),
      oracle::range_tripotent(x)};
  for (const auto& c : others) {
    const Tripotent t = certified(m, c);
    const bool same = nrm(c - e.element()) <= 1e-8;
    bad += flag(polar_isometry_characterization(m, x, t) == same);
  }
  return bad;
}

double report_residual(const WitnessReport& w) {
  return std::max(w.worst_residual(), -w.positivity_margin);
}

double weakly_rickart(TrialContext& ctx) {
  const TripleModel& m = ctx.model();
  const ComplexMatrix x = ctx.low_rank();
  const ComplexMatrix xs[] = {x};
  const Subspace j = orthogonal_annihilator(m, std::span<const ComplexMatrix>(xs));
  const WitnessReport w = weakly_rickart_witness(m, x, j);
  return report_residual(w) + flag(w.verified);
}

double finite_reversed(TrialContext& ctx) {
  const TripleModel& m = ctx.model();
  std::vector<ComplexMatrix> family;
  if (ctx.coin()) {
    family.push_back(ctx.low_rank());
  } else {
    const Corners c = split_corners(ctx);
    family.push_back(c.l1 * ctx.low_rank() * c.r1);
    family.push_back(c.l2 * ctx.low_rank() * c.r2);
  }
  const Subspace j = orthogonal_annihilator(m, family);
  const WitnessReport w = finite_reversed_witness(m, family, j);
  return report_residual(w) + flag(w.verified);
}

double wor_witness_prop(TrialContext& ctx) {
  const TripleModel& m = ctx.model();
  const ComplexMatrix x = ctx.low_rank();
  const ComplexMatrix xs[] = {x};
  Subspace j = orthogonal_annihilator(m, std::span<const ComplexMatrix>(xs));
  if (ctx.coin() && !j.is_zero()) j = inner_ideal_generated(m, ctx.note(j.sample(ctx.rng())));
  const WitnessReport w = wor_witness(m, x, j);
  return report_residual(w) + flag(w.verified);
}

double jordan_range_projection_prop(TrialContext& ctx) {
  const TripleModel& m = ctx.model();
  const ComplexMatrix a = ctx.positive_low_rank(ctx.uniform(0, m.n));
  const RangeProjection rp = jordan_range_projection(m, a, 1e-9, ctx.seed());
  return std::max(report_residual(rp.report), nrm(rp.projection - oracle::psd_support(a))) +
         flag(rp.report.verified);
}

double pedersen(TrialContext& ctx) {
  const TripleModel& m = ctx.model();
  const Index n = m.n;
  const ComplexMatrix u = ctx.unitary(n);
  const Index kp = ctx.uniform(0, n);
  const Index kq = ctx.uniform(0, n - kp);
  const ComplexMatrix p = u.leftCols(kp) * u.leftCols(kp).adjoint();
  const ComplexMatrix q = u.middleCols(kp, kq) * u.middleCols(kp, kq).adjoint();
  auto generator = [&](const ComplexMatrix& proj) {
    const ComplexMatrix g = ctx.ginibre(n, n);
    return ComplexMatrix(proj * g * g.adjoint() * proj);
  };
  const Subspace b = inner_ideal_generated(m, generator(p));
  const Subspace c = inner_ideal_generated(m, generator(q));
  double r = 0.0;
  for (PedersenCase pc : {PedersenCase::kSAJBW, PedersenCase::kWeaklyRickart, PedersenCase::kRickart,
                          PedersenCase::kBaer}) {
    const WitnessReport w = pedersen_witness(m, pc, b, c, 1e-9, ctx.seed());
    const ComplexMatrix expected = pc == PedersenCase::kRickart ? ComplexMatrix(identity(n) - q) : p;
    r = std::max(r, report_residual(w) + flag(w.verified));
    r = std::max(r, nrm(w.witness - expected));
  }
  return r;
}

// ---------------------------------------------------------------- approximation

double regular_density(TrialContext& ctx) {
  const TripleModel& m = ctx.model();
  const ComplexMatrix x = ctx.low_rank();
  const ComplexMatrix y = quadratic(m, x, ctx.ginibre());
  const Subspace ex = inner_ideal_generated(m, x);
  double r = 0.0;
  for (double eps : {1e-1, 1e-2, 1e-3}) {
    const RegularApproximation ra = regular_approximation(m, y, eps);
    r = std::max(r, ex.residual(ra.y) + flag(ra.error < eps) + flag(ra.y_regular));
  }
  return r;
}

double ginv_closure(TrialContext& ctx) {
  const TripleModel& m = ctx.model();
  const ComplexMatrix x = ctx.low_rank();
  const ComplexMatrix y = quadratic(m, x, ctx.ginibre());
  const Subspace ex = inner_ideal_generated(m, x);
  return std::max(ex.residual(generalized_inverse_candidate(m, y)),
                  ex.residual(range_tripotent(m, y).element()));
}

double projection_monotone(TrialContext& ctx) {
  const TripleModel& m = ctx.model();
  const ComplexMatrix a = ctx.positive() * ctx.uniform_real(0.5, 3.0);
  double eps = ctx.uniform_real(0.05, 1.0);
  double prev = projection_approximation(m, a, eps).error;
  double r = 0.0;
  for (int k = 0; k < 6; ++k) {
    eps /= 2.0;
    const double err = projection_approximation(m, a, eps).error;
    r = std::max(r, err - prev);
    prev = err;
  }
  return std::max(r, 0.0);
}

double projection_bound(TrialContext& ctx) {
  const TripleModel& m = ctx.model();
  const Index n = m.n;
  const ComplexMatrix a = (ctx.coin() ? ctx.positive() : ctx.positive_low_rank(ctx.uniform(0, n))) *
                          ctx.uniform_real(0.2, 3.0);
  double r = 0.0;
  for (double eps : {0.5, 0.1, 0.01}) {
    const ProjectionCombo c = projection_approximation(m, a, eps);
    r = std::max(r, c.error - eps);
    const double cap = std::ceil(nrm(a) / eps) + 1.0;
    r += flag(static_cast<double>(c.terms.size()) <= cap);
    for (std::size_t i = 0; i < c.terms.size(); ++i) {
      const ComplexMatrix& p = c.terms[i].projection;
      r = std::max(r, nrm(p * p - p) + nrm(p - p.adjoint()));
      for (std::size_t j = i + 1; j < c.terms.size(); ++j) r = std::max(r, nrm(p * c.terms[j].projection));
    }
    // a - combo is positive
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(herm(a - c.sum(m.shape())), Eigen::EigenvaluesOnly);
    r = std::max(r, -es.eigenvalues().minCoeff() - 1e-12);
  }
  return std::max(r, 0.0);
}

double regular_approximation_prop(TrialContext& ctx) {
  const TripleModel& m = ctx.model();
  const ComplexMatrix a = ctx.coin() ? ctx.ginibre() : ctx.low_rank();
  double r = 0.0;
  for (double eps : {0.5, 0.1}) {
    const RegularApproximation ra = regular_approximation(m, a, eps);
    r = std::max(r, ra.residuals.at("square_root"));
    r += flag(ra.error < eps) + flag(ra.below_range) + flag(ra.y_regular);
  }
  return r;
}

const std::vector<ModelKind> kAll{kRect, kCStar, kJB};
const std::vector<ModelKind> kSquare{kCStar, kJB};
const std::vector<ModelKind> kCStarOnly{kCStar};
const std::vector<ModelKind> kJBOnly{kJB};

std::vector<PropertyInfo> build_registry() {
  return {
      {"svd-reconstruction", "U diag(s) V* reconstructs a; U, V unitary; s non-increasing", kAll, 1e-10, 10, svd_reconstruction},
      {"eigen-unitary", "Hermitian eigenvectors are unitary and reconstruct the input", kAll, 1e-10, 10, eigen_unitary},
      {"rank-nullity", "2 dim_C ker f + rank_R f = dim_R of the domain", kAll, 0.0, 10, rank_nullity},

      {"jordan-identity", "(a o b) o a^2 = a o (b o a^2)", kSquare, 1e-10, 10, jordan_identity},
      {"fundamental-identity", "U_a U_b U_a = U_{U_a(b)} and Q(a) Q(b) Q(a) = Q(Q(a) b)", kAll, 1e-9, 10, fundamental_identity},
      {"ternary-identity", "L(x,y){a,b,c} = {L(x,y)a,b,c} - {a,L(y,x)b,c} + {a,b,L(x,y)c}", kAll, 1e-9, 10, ternary_identity},
      {"power-identities", "U_a^n = U_{a^n}; 2 T_{a^l} U_{a^m,a^n} = 2 U_{a^m,a^n} T_{a^l} = U_{a^{m+l},a^n} + U_{a^m,a^{n+l}}", kSquare, 1e-9, 10, power_identities},
      {"non-expansive", "||{a,b,c}|| <= ||a|| ||b|| ||c||", kAll, 1e-12, 10, non_expansive},
      {"triple-product-sesquilinearity", "symmetric and linear in the outer variables, conjugate linear in the middle", kAll, 1e-10, 10, sesquilinearity},
      {"materialize-consistency", "materialized L(a,b), Q(a) agree with direct evaluation; all models share (ab*c + cb*a)/2", kAll, 1e-12, 10, materialize_consistency},
      {"gelfand-naimark-axiom", "||{a,a,a}|| = ||a||^3 and ||U_a(a*)|| = ||a||^3", kAll, 1e-9, 10, gelfand_naimark},

      {"peirce-projections", "P0 + P1 + P2 = Id, Pi Pj = delta_ij Pi, projections match l x r corners", kAll, 1e-9, 10, peirce_projections},
      {"peirce-rules", "{E2,E0,E} = {E0,E2,E} = 0 and {Ei,Ej,Ek} in E_{i-j+k}", kAll, 1e-9, 10, peirce_rules},
      {"peirce-non-expansive", "||Pk(e)|| <= 1", kAll, 1e-10, 10, peirce_non_expansive},
      {"idempotent-order", "e o f = e iff e in U_f(M) iff U_e(M) in U_f(M)", kJBOnly, 0.0, 10, idempotent_order},
      {"peirce2-compression", "for a projection p, {x,p,y} = x o y and {p,x,p} = x* on pMp", kJBOnly, 1e-10, 10, peirce2_compression},
      {"peirce-automorphism", "S_lambda and R_lambda are triple automorphisms for 8 roots of unity", kAll, 1e-9, 10, peirce_automorphism_law},
      {"peirce2-jbstar-axioms", "E2(e) with {x,e,y} and {e,x,e} is a unital JB*-algebra", kAll, 1e-9, 10, peirce2_axioms},
      {"peirce2-gelfand-naimark", "||U_x(x^{*e})|| = ||x||^3 in E2(e)", kAll, 1e-6, 10, peirce2_gelfand_naimark},
      {"tripotent-order", "e <= v via v - e agrees with P2(e) v = e", kAll, 0.0, 10, tripotent_order},

      {"generalized-inverse-identities", "Q(a) a^+ = a, Q(a^+) a = a^+, [Q(a), Q(a^+)] = 0", kAll, 1e-9, 10, ginv_identities},
      {"ginv-l-operator", "L(a,a^+) = L(a^+,a) = L(r(a),r(a))", kAll, 1e-9, 10, ginv_l_operator},
      {"range-tripotent-minimality", "r(a) <= v whenever a is positive in E2(v)", kAll, 1e-9, 10, range_tripotent_minimality},
      {"invertible-peirce2-regular", "invertible elements of E2(e) are regular with range tripotent unitary in E2(e)", kAll, 1e-9, 10, invertible_peirce2_regular},
      {"regular-range-tripotent", "r(a) is the woR witness, a^+ inverts a in E2(r(a)), r(a^+) = r(a)", kAll, 1e-9, 10, regular_range_tripotent},
      {"support-below-range", "u(a) <= r(a) for ||a|| = 1", kAll, 0.0, 10, support_below_range},
      {"triple-spectrum", "distinct nonzero singular values, max = ||a||, zero flag = rank deficiency", kAll, 1e-12, 10, spectrum_shape},
      {"polar-decomposition", "x = e |x|, e e* = LP(x), e* e = RP(x)", kCStarOnly, 1e-9, 10, polar_decomposition_prop},
      {"odd-calculus", "cube roots cube back to a; f(t) = t reproduces a", kAll, 1e-9, 10, odd_calculus_roots},

      {"orthogonality-symmetry", "a perp b iff b perp a iff ab* = b*a = 0", kAll, 0.0, 10, orthogonality_symmetry},
      {"orthogonal-inner-ideals", "a perp b iff E(a) perp E(b)", kAll, 0.0, 10, orthogonal_inner_ideals},
      {"annihilator-lattice", "S1 in S2 gives S2^perp in S1^perp; S meet S^perp = 0; S in S^perp^perp", kAll, 1e-9, 10, annihilator_lattice},
      {"positive-annihilator-equivalence", "for positive S: quadratic and orthogonal annihilators agree on self-adjoint and positive parts", kSquare, 0.0, 4, positive_annihilator_equivalence},
      {"positive-product-orthogonality", "for positive h: h o x = 0 iff x perp h", kSquare, 0.0, 10, positive_product_orthogonality},
      {"generated-inner-ideal", "E(x) = Q(x)(E) is an inner ideal equal to LP(x) E RP(x)", kAll, 1e-9, 10, generated_inner_ideal},

      {"positive-unit-equivalences", "for commuting positives: ax = x iff a o x = x iff U_a(x) = x", kSquare, 0.0, 10, positive_unit_equivalences},
      {"range-projection-commutation", "RP(a) operator commutes with every b operator commuting with a", kSquare, 1e-9, 10, range_projection_commutation},
      {"peirce2-range-projection", "range projections computed in M2(p) agree with the global ones", kSquare, 1e-9, 10, peirce2_range_projection},
      {"wor-range-tripotent-projection", "the range tripotent of a positive element is a projection", kSquare, 1e-10, 10, wor_range_tripotent_projection},
      {"peirce2-rickart-compatibility", "r(a) lies in E2(e) for a positive in E2(e)", kAll, 1e-9, 10, peirce2_rickart_compatibility},
      {"wor-range-tripotent-uniqueness", "a tripotent v with x positive in E2(v) and {x}^perp = E0(v) is r(x)", kAll, 1e-8, 10, wor_uniqueness},
      {"polar-isometry-characterization", "e is the polar isometry of x iff x positive in A2(e) and A0(e) = {x}^perp", kCStarOnly, 0.0, 10, polar_characterization},
      {"weakly-rickart-witness", "the polar isometry witnesses A(x) in A2(e), {x}^perp in A0(e)", kCStarOnly, 1e-9, 10, weakly_rickart},
      {"finite-reversed-witness", "reversed witness: J in A2(e), A(x_i) in A0(e)", kCStarOnly, 1e-9, 10, finite_reversed},
      {"wor-witness", "r(x) makes x positive in E2 and J in E0, {x}^perp = E0", kAll, 1e-9, 10, wor_witness_prop},
      {"jordan-range-projection-minimality", "RP(a) is a unit for a, kills self-adjoint quadratic annihilators, and is minimal", kJBOnly, 1e-9, 10, jordan_range_projection_prop},
      {"pedersen-witness", "a projection is a unit for B and annihilates C in every case", kJBOnly, 1e-9, 10, pedersen},

      {"regular-density-inner-ideal", "regular approximants of y in E(x) stay in E(x)", kAll, 1e-8, 10, regular_density},
      {"inner-ideal-ginv-closure", "E(x) contains y^+ and r(y) for y in E(x)", kAll, 1e-8, 10, ginv_closure},
      {"projection-approximation-monotone", "the projection approximation error does not grow under grid refinement", kJBOnly, 1e-12, 10, projection_monotone},
      {"projection-approximation-bound", "error <= eps with at most ceil(||a||/eps) + 1 orthogonal projections", kJBOnly, 1e-12, 10, projection_bound},
      {"regular-approximation", "error < eps, e_eps <= R(a), {b,R(a),b} = a, y regular", kAll, 1e-10, 10, regular_approximation_prop},
  };
}

}  // namespace

const std::vector<PropertyInfo>& registered_properties() {
  static const std::vector<PropertyInfo> registry = build_registry();
  return registry;
}

const PropertyInfo& find_property(std::string_view name) {
  for (const auto& p : registered_properties())
    if (p.name == name) return p;
  throw Error(ErrorCode::kUnknownProperty, "no property named '" + std::string(name) + "'");
}

}  // namespace peircelab::harness
