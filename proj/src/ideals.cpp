#include "peircelab/ideals.hpp"

#include <algorithm>
#include <vector>

namespace peircelab {

OrthogonalityReport orthogonality_report(const TripleModel& model, const ComplexMatrix& a,
                                         const ComplexMatrix& b, double tol) {
  require_element(model, a, "a");
  require_element(model, b, "b");
  OrthogonalityReport out;
  const double scale = std::max(1.0, op_norm(a) * op_norm(b));
  out.l_norm = materialize_L(model, a, b).norm() / scale;
  out.cstar_residual = (op_norm(a * b.adjoint()) + op_norm(b.adjoint() * a)) / scale;
  out.orthogonal = out.l_norm <= tol;
  return out;
}

bool is_orthogonal(const TripleModel& model, const ComplexMatrix& a, const ComplexMatrix& b,
                   double tol) {
  return orthogonality_report(model, a, b, tol).orthogonal;
}

double subspace_orthogonality_residual(const TripleModel& model, const Subspace& a,
                                       const Subspace& b) {
  double worst = 0.0;
  const auto ea = a.elements();
  const auto eb = b.elements();
  for (const auto& u : ea) {
    for (const auto& v : eb) {
      worst = std::max(worst, orthogonality_report(model, u, v).l_norm);
    }
  }
  return worst;
}

bool subspaces_orthogonal(const TripleModel& model, const Subspace& a, const Subspace& b,
                          double tol) {
  return subspace_orthogonality_residual(model, a, b) <= tol;
}

Subspace orthogonal_annihilator(const TripleModel& model, std::span<const ComplexMatrix> s,
                                double tol) {
  const Shape shape = model.shape();
  const Index n = shape.size();
  std::vector<const ComplexMatrix*> nonzero;
  for (const auto& x : s) {
    require_element(model, x, "annihilated element");
    if (x.norm() > 0.0) nonzero.push_back(&x);
  }
  if (nonzero.empty()) return Subspace::whole(shape);

  // x -> {s, x, z} for every s and every complex basis element z, stacked.
  RealMatrix stacked(static_cast<Index>(nonzero.size()) * n * 2 * n, 2 * n);
  ComplexMatrix z = ComplexMatrix::Zero(shape.rows, shape.cols);
  Index row = 0;
  for (const ComplexMatrix* sp : nonzero) {
    // Normalized so that the stacked map has a natural scale of 1.
    const ComplexMatrix si = *sp / op_norm(*sp);
    for (Index k = 0; k < n; ++k) {
      z(k / shape.cols, k % shape.cols) = 1.0;
      const RealifiedMap f = RealifiedMap::materialize(
          shape, shape, [&](const ComplexMatrix& x) { return triple_product(model, si, x, z); });
      stacked.middleRows(row, 2 * n) = f.matrix();
      row += 2 * n;
      z(k / shape.cols, k % shape.cols) = 0.0;
    }
  }
  return kernel(RealifiedMap(std::move(stacked), shape,
                             Shape{static_cast<Index>(nonzero.size()) * n, n}),
                tol, 1.0);
}

Subspace orthogonal_annihilator(const TripleModel& model, const Subspace& s, double tol) {
  const auto elems = s.elements();
  return orthogonal_annihilator(model, std::span<const ComplexMatrix>(elems), tol);
}

double outer_quadratic_residual(const TripleModel& model, const ComplexMatrix& x,
                                std::span<const ComplexMatrix> s) {
  require_square_model(model, "quadratic annihilator");
  require_element(model, x, "x");
  double worst = 0.0;
  for (const auto& si : s) {
    require_element(model, si, "s");
    worst = std::max(worst, op_norm(jordan_u(x, si)));
  }
  return worst;
}

double inner_quadratic_residual(const TripleModel& model, const ComplexMatrix& x,
                                std::span<const ComplexMatrix> s) {
  require_square_model(model, "quadratic annihilator");
  require_element(model, x, "x");
  double worst = 0.0;
  for (const auto& si : s) {
    require_element(model, si, "s");
    worst = std::max(worst, op_norm(jordan_u(si, x)));
  }
  return worst;
}

bool in_outer_quadratic_annihilator(const TripleModel& model, const ComplexMatrix& x,
                                    std::span<const ComplexMatrix> s, double tol) {
  return outer_quadratic_residual(model, x, s) <= tol;
}

bool in_inner_quadratic_annihilator(const TripleModel& model, const ComplexMatrix& x,
                                    std::span<const ComplexMatrix> s, double tol) {
  return inner_quadratic_residual(model, x, s) <= tol;
}

Subspace inner_ideal_generated(const TripleModel& model, const ComplexMatrix& x, double tol) {
  const double nx = op_norm(x);
  if (nx == 0.0) return Subspace(model.shape());
  return image(materialize_Q(model, x / nx), tol, 1.0);
}

double inner_ideal_residual(const TripleModel& model, const Subspace& s) {
  if (s.element_shape() != model.shape()) {
    throw Error(ErrorCode::kShapeMismatch, "subspace does not live in the model");
  }
  const Shape shape = model.shape();
  const auto basis = s.elements();
  double worst = 0.0;
  ComplexMatrix w = ComplexMatrix::Zero(shape.rows, shape.cols);
  for (Index k = 0; k < shape.size(); ++k) {
    for (const Complex unit : {Complex(1.0, 0.0), Complex(0.0, 1.0)}) {
      w(k / shape.cols, k % shape.cols) = unit;
      for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = i; j < basis.size(); ++j) {
          const ComplexMatrix t = triple_product(model, basis[i], w, basis[j]);
          worst = std::max(worst, s.residual(t) * t.norm());
        }
      }
    }
    w(k / shape.cols, k % shape.cols) = 0.0;
  }
  return worst;
}

bool is_inner_ideal(const TripleModel& model, const Subspace& s, double tol) {
  return inner_ideal_residual(model, s) <= tol;
}

}  // namespace peircelab
