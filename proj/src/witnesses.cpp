#include "peircelab/witnesses.hpp"

#include <algorithm>
#include <random>

#include "peircelab/ideals.hpp"
#include "peircelab/random.hpp"
#include "peircelab/spectral.hpp"

namespace peircelab {

namespace {

double scale_of(const ComplexMatrix& x) { return std::max(1.0, op_norm(x)); }

void require_cstar(const TripleModel& model, std::string_view op) {
  if (model.kind != ModelKind::kCStar) {
    throw Error(ErrorCode::kUnsupportedModel, std::string(op) + " needs the C*-model");
  }
}

void require_inner_ideal(const TripleModel& model, const Subspace& j, double tol) {
  const double r = inner_ideal_residual(model, j);
  if (!(r <= tol)) {
    throw Error(ErrorCode::kNotInnerIdeal, "J fails {J,E,J} in J by " + std::to_string(r));
  }
}

void require_orthogonal_to_ideal(const TripleModel& model, const Subspace& j,
                                 const ComplexMatrix& x, double tol) {
  const Subspace ex = inner_ideal_generated(model, x);
  const double r = subspace_orthogonality_residual(model, j, ex);
  if (!(r <= tol)) {
    throw Error(ErrorCode::kNotOrthogonal, "J is not orthogonal to E(x): " + std::to_string(r));
  }
}

void record_positivity(WitnessReport& out, const Peirce2Positivity& p) {
  out.residuals["peirce2_membership"] = p.membership;
  out.residuals["involution"] = p.involution;
  out.positivity_margin = p.min_eigen;
}

// Range projection of sum b b* + b* b over a basis.
ComplexMatrix support_projection(const Subspace& s) {
  const Shape shape = s.element_shape();
  ComplexMatrix h = ComplexMatrix::Zero(shape.rows, shape.cols);
  for (const auto& b : s.elements()) h += b * b.adjoint() + b.adjoint() * b;
  return range_projection(h);
}

}  // namespace

double WitnessReport::worst_residual() const {
  double worst = 0.0;
  for (const auto& [name, value] : residuals) worst = std::max(worst, value);
  return worst;
}

void WitnessReport::settle() {
  verified = positivity_margin >= -tol;
  for (const auto& [name, value] : residuals) verified = verified && value <= tol;
}

Peirce2Positivity peirce2_positivity(const Tripotent& e, const ComplexMatrix& x) {
  const TripleModel& model = e.model();
  require_element(model, x, "element");
  const double s = scale_of(x);
  Peirce2Positivity out;
  out.membership = op_norm(peirce2_project(e, x) - x) / s;
  out.involution = op_norm(quadratic(model, e.element(), x) - x) / s;
  const ComplexMatrix ex = e.element().adjoint() * x;
  const ComplexMatrix h = 0.5 * (ex + ex.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h, Eigen::EigenvaluesOnly);
  out.min_eigen = es.eigenvalues().minCoeff() / s;
  return out;
}

WitnessReport weakly_rickart_witness(const TripleModel& model, const ComplexMatrix& x,
                                     const Subspace& j, double tol) {
  require_cstar(model, "weakly_rickart_witness");
  require_element(model, x, "x");
  require_inner_ideal(model, j, tol);
  require_orthogonal_to_ideal(model, j, x, tol);

  const PolarData polar = polar_decomposition(model, x);
  const Tripotent& e = polar.isometry;
  const PeirceDecomposition d = peirce_decompose(e);

  WitnessReport out;
  out.tol = tol;
  out.witness = e.element();
  out.residuals["inner_ideal_in_peirce2"] = d.s2.containment_residual(inner_ideal_generated(model, x));
  out.residuals["ideal_in_peirce0"] = d.s0.containment_residual(j);
  out.residuals["right_projection"] =
      op_norm(e.element().adjoint() * e.element() - range_projection(x.adjoint() * x));
  out.residuals["left_projection"] =
      op_norm(e.element() * e.element().adjoint() - range_projection(x * x.adjoint()));
  record_positivity(out, peirce2_positivity(e, x));
  out.settle();
  return out;
}

WitnessReport wor_witness(const TripleModel& model, const ComplexMatrix& x, const Subspace& j,
                          double tol) {
  require_element(model, x, "x");
  require_inner_ideal(model, j, tol);
  require_orthogonal_to_ideal(model, j, x, tol);

  const Tripotent e = range_tripotent(model, x);
  const PeirceDecomposition d = peirce_decompose(e);
  const ComplexMatrix xs[] = {x};
  const Subspace ann = orthogonal_annihilator(model, std::span<const ComplexMatrix>(xs));

  WitnessReport out;
  out.tol = tol;
  out.witness = e.element();
  out.residuals["ideal_in_peirce0"] = d.s0.containment_residual(j);
  out.residuals["annihilator_in_peirce0"] = d.s0.containment_residual(ann);
  out.residuals["peirce0_in_annihilator"] = ann.containment_residual(d.s0);
  record_positivity(out, peirce2_positivity(e, x));
  out.settle();
  return out;
}

bool polar_isometry_characterization(const TripleModel& model, const ComplexMatrix& x,
                                     const Tripotent& e, double tol) {
  require_cstar(model, "polar_isometry_characterization");
  require_element(model, x, "x");
  const Peirce2Positivity p = peirce2_positivity(e, x);
  if (p.membership > tol || p.involution > tol || p.min_eigen < -tol) return false;
  const PeirceDecomposition d = peirce_decompose(e);
  const ComplexMatrix xs[] = {x};
  const Subspace ann = orthogonal_annihilator(model, std::span<const ComplexMatrix>(xs));
  return d.s0.dimension() == ann.dimension() && d.s0.contains(ann, tol) && ann.contains(d.s0, tol);
}

WitnessReport finite_reversed_witness(const TripleModel& model,
                                      std::span<const ComplexMatrix> xs, const Subspace& j,
                                      double tol) {
  require_cstar(model, "finite_reversed_witness");
  for (std::size_t i = 0; i < xs.size(); ++i) {
    require_element(model, xs[i], "family element");
    for (std::size_t k = i + 1; k < xs.size(); ++k) {
      if (!is_orthogonal(model, xs[i], xs[k], tol)) {
        throw Error(ErrorCode::kNotMutuallyOrthogonal,
                    "family elements " + std::to_string(i) + " and " + std::to_string(k) +
                        " are not orthogonal");
      }
    }
  }
  require_inner_ideal(model, j, tol);
  for (const auto& x : xs) require_orthogonal_to_ideal(model, j, x, tol);

  const Index n = model.n;
  ComplexMatrix w = ComplexMatrix::Zero(n, n);
  for (const auto& x : xs) w += polar_decomposition(model, x).isometry.element();

  // w = W S V*; u = V W* carries LP(w) onto RP(w).
  const SvdResult sw = svd(w);
  const ComplexMatrix u = sw.right * sw.left.adjoint();
  const ComplexMatrix lp = w * w.adjoint();
  const ComplexMatrix rp = w.adjoint() * w;
  const ComplexMatrix id = ComplexMatrix::Identity(n, n);
  const Tripotent e(model, (id - lp) * u.adjoint());
  const PeirceDecomposition d = peirce_decompose(e);

  WitnessReport out;
  out.tol = tol;
  out.witness = e.element();
  out.residuals["unitary"] = op_norm(u.adjoint() * u - id);
  out.residuals["projection_transport"] = op_norm(u * lp * u.adjoint() - rp);
  out.residuals["ideal_in_peirce2"] = d.s2.containment_residual(j);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    out.residuals["family_in_peirce0_" + std::to_string(i)] =
        d.s0.containment_residual(inner_ideal_generated(model, xs[i]));
  }
  out.settle();
  return out;
}

RangeProjection jordan_range_projection(const TripleModel& model, const ComplexMatrix& a,
                                        double tol, std::uint64_t seed, int samples) {
  require_square_model(model, "jordan_range_projection");
  require_element(model, a, "a");
  const double s = scale_of(a);
  if ((a - a.adjoint()).norm() > tol * s) {
    throw Error(ErrorCode::kNotPositive, "element is not self-adjoint");
  }
  const EigenResult eig = hermitian_eigen(a);
  if (eig.values.size() && eig.values(eig.values.size() - 1) < -tol * s) {
    throw Error(ErrorCode::kNotPositive, "element has a negative eigenvalue");
  }
  const Index n = model.n;
  const ComplexMatrix p = range_projection(a);
  const ComplexMatrix id = ComplexMatrix::Identity(n, n);

  // Orthonormal basis of the range of 1 - p.
  const Index rank = static_cast<Index>(std::llround(p.trace().real()));
  ComplexMatrix complement(n, n - rank);
  {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(id - p);
    complement = es.eigenvectors().rightCols(n - rank);
  }

  RangeProjection out;
  out.projection = p;
  WitnessReport& rep = out.report;
  rep.tol = tol;
  rep.seed = seed;
  rep.witness = p;
  rep.residuals["projection"] = op_norm(p * p - p) + op_norm(p - p.adjoint());
  rep.residuals["unit"] = op_norm(jordan_product(p, a) - a) / s;

  std::mt19937_64 rng(seed);
  double annihilated = 0.0, killed = 0.0, minimal = 0.0;
  std::uniform_int_distribution<Index> pick(0, n - rank);
  for (int k = 0; k < samples; ++k) {
    // Self-adjoint z with U_z(a) = 0 lives in (1-p) M (1-p).
    const ComplexMatrix h = rnd::hermitian(rng, n);
    const ComplexMatrix z = complement * complement.adjoint() * h * complement * complement.adjoint();
    const double zs = std::max(1.0, op_norm(z));
    annihilated = std::max(annihilated, op_norm(jordan_u(z, a)) / (zs * zs * s));
    killed = std::max(killed, op_norm(jordan_product(p, z)) / zs);
    // Projections q with q o a = a are p plus a projection below 1 - p.
    const ComplexMatrix q = p + rnd::projection_within(rng, complement, pick(rng));
    minimal = std::max(minimal, op_norm(jordan_product(q, a) - a) / s +
                                    op_norm(jordan_product(p, q) - p));
  }
  rep.residuals["sample_annihilates"] = annihilated;
  rep.residuals["annihilator_killed"] = killed;
  rep.residuals["minimality"] = minimal;
  rep.positivity_margin = 0.0;
  rep.settle();
  return out;
}

std::string_view pedersen_case_name(PedersenCase c) {
  switch (c) {
    case PedersenCase::kSAJBW: return "SAJBW";
    case PedersenCase::kWeaklyRickart: return "weaklyRickart";
    case PedersenCase::kRickart: return "Rickart";
    case PedersenCase::kBaer: return "Baer";
  }
  return "unknown";
}

PedersenCase parse_pedersen_case(std::string_view name) {
  for (PedersenCase c : {PedersenCase::kSAJBW, PedersenCase::kWeaklyRickart,
                         PedersenCase::kRickart, PedersenCase::kBaer}) {
    if (pedersen_case_name(c) == name) return c;
  }
  throw Error(ErrorCode::kInvalidInput, "unknown Pedersen case '" + std::string(name) + "'");
}

WitnessReport pedersen_witness(const TripleModel& model, PedersenCase c, const Subspace& b,
                               const Subspace& cc, double tol, std::uint64_t seed,
                               int samples) {
  require_square_model(model, "pedersen_witness");
  if (b.element_shape() != model.shape() || cc.element_shape() != model.shape()) {
    throw Error(ErrorCode::kShapeMismatch, "subspaces do not live in the model");
  }
  const double orth = subspace_orthogonality_residual(model, b, cc);
  if (!(orth <= tol)) {
    throw Error(ErrorCode::kNotOrthogonal, "B and C are not orthogonal: " + std::to_string(orth));
  }
  const Index n = model.n;
  const ComplexMatrix id = ComplexMatrix::Identity(n, n);
  const ComplexMatrix e =
      c == PedersenCase::kRickart ? ComplexMatrix(id - support_projection(cc)) : support_projection(b);

  WitnessReport out;
  out.tol = tol;
  out.seed = seed;
  out.witness = e;
  std::mt19937_64 rng(seed);
  double unit = 0.0, quadratic_unit = 0.0, kills = 0.0;
  for (int k = 0; k < samples; ++k) {
    if (!b.is_zero()) {
      const ComplexMatrix x = b.sample(rng);
      const double xs = std::max(1.0, op_norm(x));
      unit = std::max(unit, op_norm(jordan_product(e, x) - x) / xs);
      quadratic_unit = std::max(quadratic_unit, op_norm(jordan_u(e, x) - x) / xs);
    }
    if (!cc.is_zero()) {
      const ComplexMatrix y = cc.sample(rng);
      kills = std::max(kills, op_norm(jordan_product(e, y)) / std::max(1.0, op_norm(y)));
    }
  }
  out.residuals["unit_for_B"] = unit;
  out.residuals["inner_unit_for_B"] = quadratic_unit;
  out.residuals["annihilates_C"] = kills;
  out.residuals["projection"] = op_norm(e * e - e) + op_norm(e - e.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(0.5 * (e + e.adjoint()), Eigen::EigenvaluesOnly);
  out.positivity_margin = es.eigenvalues().minCoeff();
  out.settle();
  return out;
}

}  // namespace peircelab
