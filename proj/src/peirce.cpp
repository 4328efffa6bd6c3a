#include "peircelab/peirce.hpp"

#include <algorithm>
#include <cmath>

namespace peircelab {

double tripotent_residual(const TripleModel& model, const ComplexMatrix& e) {
  require_element(model, e, "tripotent candidate");
  const double scale = std::max(1.0, op_norm(e));
  return op_norm(triple_product(model, e, e, e) - e) / scale;
}

bool is_tripotent(const TripleModel& model, const ComplexMatrix& e, double tol) {
  return tripotent_residual(model, e) <= tol;
}

Tripotent::Tripotent(const TripleModel& model, ComplexMatrix e, double tol)
    : model_(model), e_(std::move(e)), tol_(tol) {
  require_finite(e_, "tripotent candidate");
  const double r = tripotent_residual(model_, e_);
  if (!(r <= tol_)) {
    throw Error(ErrorCode::kNotTripotent,
                "||{e,e,e} - e|| = " + std::to_string(r) + " exceeds " + std::to_string(tol_));
  }
}

Tripotent Tripotent::zero(const TripleModel& model) {
  return Tripotent(model, ComplexMatrix::Zero(model.m, model.n));
}

const RealifiedMap& PeirceDecomposition::projection(int k) const {
  switch (k) {
    case 0: return p0;
    case 1: return p1;
    case 2: return p2;
  }
  throw Error(ErrorCode::kInvalidInput, "Peirce index must be 0, 1 or 2");
}

const Subspace& PeirceDecomposition::subspace(int k) const {
  switch (k) {
    case 0: return s0;
    case 1: return s1;
    case 2: return s2;
  }
  throw Error(ErrorCode::kInvalidInput, "Peirce index must be 0, 1 or 2");
}

PeirceDecomposition peirce_decompose(const Tripotent& e) {
  const TripleModel& model = e.model();
  const Shape s = model.shape();
  const RealifiedMap l = materialize_L(model, e.element(), e.element());
  const RealifiedMap q = materialize_Q(model, e.element());
  const RealifiedMap q2 = q * q;
  const RealifiedMap id = RealifiedMap::identity(s);
  RealifiedMap p2 = q2;
  RealifiedMap p1 = (l - q2) * 2.0;
  RealifiedMap p0 = id - l * 2.0 + q2;
  // Peirce projections have norm 1 or 0.
  Subspace s0 = image(p0, kRankTol, 1.0), s1 = image(p1, kRankTol, 1.0),
           s2 = image(p2, kRankTol, 1.0);
  return {e.element(),     std::move(p0), std::move(p1), std::move(p2),
          std::move(s0), std::move(s1), std::move(s2)};
}

ComplexMatrix peirce2_project(const Tripotent& e, const ComplexMatrix& x) {
  const ComplexMatrix& u = e.element();
  return quadratic(e.model(), u, quadratic(e.model(), u, x));
}

Peirce2Algebra::Peirce2Algebra(const Tripotent& e, double tol) : e_(e), tol_(tol) {}

double Peirce2Algebra::membership_residual(const ComplexMatrix& x) const {
  require_element(e_.model(), x, "Peirce-2 element");
  return op_norm(peirce2_project(e_, x) - x) / std::max(1.0, op_norm(x));
}

void Peirce2Algebra::require_member(const ComplexMatrix& x) const {
  const double r = membership_residual(x);
  if (!(r <= tol_)) {
    throw Error(ErrorCode::kNotInPeirce2,
                "element leaves E_2(e) with residual " + std::to_string(r));
  }
}

ComplexMatrix Peirce2Algebra::product(const ComplexMatrix& x, const ComplexMatrix& y) const {
  require_member(x);
  require_member(y);
  return triple_product(e_.model(), x, e_.element(), y);
}

ComplexMatrix Peirce2Algebra::involution(const ComplexMatrix& x) const {
  require_member(x);
  return quadratic(e_.model(), e_.element(), x);
}

ComplexMatrix Peirce2Algebra::cstar_product(const ComplexMatrix& x, const ComplexMatrix& y) const {
  require_square_model(e_.model(), "Peirce-2 C*-product");
  require_member(x);
  require_member(y);
  return x * e_.element().adjoint() * y;
}

ComplexMatrix Peirce2Algebra::cstar_involution(const ComplexMatrix& x) const {
  require_square_model(e_.model(), "Peirce-2 C*-involution");
  require_member(x);
  return e_.element() * x.adjoint() * e_.element();
}

bool tripotent_leq(const Tripotent& e, const Tripotent& v, double tol) {
  const TripleModel& model = e.model();
  if (!(v.model() == model)) {
    throw Error(ErrorCode::kShapeMismatch, "tripotents from different models");
  }
  const ComplexMatrix d = v.element() - e.element();
  if (!is_tripotent(model, d, tol)) return false;
  const double scale = std::max(1.0, op_norm(e.element()) * op_norm(d));
  return materialize_L(model, e.element(), d).norm() <= tol * scale;
}

RealifiedMap peirce_automorphism(const PeirceDecomposition& d, std::complex<double> lambda,
                                 AutomorphismVariant variant) {
  if (std::abs(std::abs(lambda) - 1.0) > 1e-12) {
    throw Error(ErrorCode::kNotUnitModulus, "|lambda| must be 1");
  }
  const Complex l2 = lambda * lambda;
  if (variant == AutomorphismVariant::kS) {
    return d.p2.scaled(l2) + d.p1.scaled(lambda) + d.p0;
  }
  return d.p2 + d.p1.scaled(lambda) + d.p0.scaled(l2);
}

RealifiedMap peirce_automorphism(const Tripotent& e, std::complex<double> lambda,
                                 AutomorphismVariant variant) {
  if (std::abs(std::abs(lambda) - 1.0) > 1e-12) {
    throw Error(ErrorCode::kNotUnitModulus, "|lambda| must be 1");
  }
  return peirce_automorphism(peirce_decompose(e), lambda, variant);
}

}  // namespace peircelab
