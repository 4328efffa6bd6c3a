#include "peircelab/subspace.hpp"

#include <algorithm>

#include <Eigen/SVD>

namespace peircelab {

namespace {

ComplexMatrix orthonormal_columns(const ComplexMatrix& columns, double tol) {
  if (columns.cols() == 0 || columns.rows() == 0) return ComplexMatrix(columns.rows(), 0);
  Eigen::JacobiSVD<ComplexMatrix> solver(columns, Eigen::ComputeThinU);
  const auto& s = solver.singularValues();
  if (s.size() == 0 || s(0) <= 0.0) return ComplexMatrix(columns.rows(), 0);
  Index r = 0;
  while (r < s.size() && s(r) > tol * s(0)) ++r;
  return solver.matrixU().leftCols(r);
}

ComplexMatrix complexified_columns(const RealMatrix& real_basis, Shape shape) {
  ComplexMatrix cols(shape.size(), real_basis.cols());
  for (Index k = 0; k < real_basis.cols(); ++k) {
    cols.col(k) = vectorize(complexify(real_basis.col(k), shape));
  }
  return cols;
}

// Count of singular values above tol * max(s_max, scale).
Index retained(const RealVector& s, double tol, double scale) {
  if (s.size() == 0) return 0;
  const double cut = tol * std::max(s(0), scale);
  Index r = 0;
  while (r < s.size() && s(r) > cut) ++r;
  return r;
}

}  // namespace

Subspace::Subspace(Shape element_shape)
    : shape_(element_shape), basis_(element_shape.size(), 0) {}

Subspace Subspace::whole(Shape element_shape) {
  return Subspace(element_shape,
                  ComplexMatrix::Identity(element_shape.size(), element_shape.size()));
}

Subspace Subspace::from_columns(Shape element_shape, const ComplexMatrix& columns, double tol) {
  if (columns.rows() != element_shape.size()) {
    throw Error(ErrorCode::kShapeMismatch, "spanning columns do not match element shape");
  }
  return Subspace(element_shape, orthonormal_columns(columns, tol));
}

Subspace Subspace::span(Shape element_shape, std::span<const ComplexMatrix> elements,
                        double tol) {
  ComplexMatrix cols(element_shape.size(), static_cast<Index>(elements.size()));
  for (Index k = 0; k < cols.cols(); ++k) {
    require_shape(elements[k], element_shape, "spanning element");
    cols.col(k) = vectorize(elements[k]);
  }
  return from_columns(element_shape, cols, tol);
}

Subspace Subspace::from_orthonormal(Shape element_shape,
                                    std::span<const ComplexMatrix> elements, double tol) {
  ComplexMatrix cols(element_shape.size(), static_cast<Index>(elements.size()));
  for (Index k = 0; k < cols.cols(); ++k) {
    require_shape(elements[k], element_shape, "basis element");
    require_finite(elements[k], "basis element");
    cols.col(k) = vectorize(elements[k]);
  }
  Subspace out(element_shape, std::move(cols));
  if (out.gram_residual() > tol) {
    throw Error(ErrorCode::kInvalidInput, "basis is not orthonormal under the trace inner product");
  }
  return out;
}

ComplexMatrix Subspace::element(Index k) const { return unvectorize(basis_.col(k), shape_); }

std::vector<ComplexMatrix> Subspace::elements() const {
  std::vector<ComplexMatrix> out;
  out.reserve(static_cast<std::size_t>(basis_.cols()));
  for (Index k = 0; k < basis_.cols(); ++k) out.push_back(element(k));
  return out;
}

ComplexMatrix Subspace::project(const ComplexMatrix& x) const {
  require_shape(x, shape_, "projected element");
  const ComplexVector v = vectorize(x);
  return unvectorize(basis_ * (basis_.adjoint() * v), shape_);
}

double Subspace::residual(const ComplexMatrix& x) const {
  require_shape(x, shape_, "tested element");
  const double nx = x.norm();
  if (nx == 0.0) return 0.0;
  const ComplexVector v = vectorize(x);
  return (v - basis_ * (basis_.adjoint() * v)).norm() / nx;
}

double Subspace::containment_residual(const Subspace& smaller) const {
  if (smaller.shape_ != shape_) {
    throw Error(ErrorCode::kShapeMismatch, "subspaces live in different spaces");
  }
  if (smaller.is_zero()) return 0.0;
  const ComplexMatrix rest =
      smaller.basis_ - basis_ * (basis_.adjoint() * smaller.basis_);
  return rest.colwise().norm().maxCoeff();
}

double Subspace::gram_residual() const {
  if (basis_.cols() == 0) return 0.0;
  return (basis_.adjoint() * basis_ - ComplexMatrix::Identity(basis_.cols(), basis_.cols()))
      .norm();
}

Subspace join(const Subspace& a, const Subspace& b, double tol) {
  if (a.element_shape() != b.element_shape()) {
    throw Error(ErrorCode::kShapeMismatch, "subspaces live in different spaces");
  }
  ComplexMatrix cols(a.basis().rows(), a.dimension() + b.dimension());
  cols << a.basis(), b.basis();
  return Subspace::from_columns(a.element_shape(), cols, tol);
}

Index intersection_dimension(const Subspace& a, const Subspace& b, double tol) {
  return a.dimension() + b.dimension() - join(a, b, tol).dimension();
}

bool same_subspace(const Subspace& a, const Subspace& b, double tol) {
  return a.contains(b, tol) && b.contains(a, tol);
}

Subspace kernel(const RealifiedMap& f, double tol, double scale) {
  const RealMatrix& m = f.matrix();
  const Shape shape = f.domain();
  if (m.cols() == 0) return Subspace(shape);
  Eigen::JacobiSVD<RealMatrix> solver(m, Eigen::ComputeFullV);
  const Index r = retained(solver.singularValues(), tol, scale);
  const RealMatrix null_basis = solver.matrixV().rightCols(m.cols() - r);
  return Subspace::from_columns(shape, complexified_columns(null_basis, shape), 1e-8);
}

Subspace image(const RealifiedMap& f, double tol, double scale) {
  const RealMatrix& m = f.matrix();
  const Shape shape = f.codomain();
  if (m.cols() == 0 || m.rows() == 0) return Subspace(shape);
  Eigen::JacobiSVD<RealMatrix> solver(m, Eigen::ComputeThinU);
  const Index r = retained(solver.singularValues(), tol, scale);
  if (r == 0) return Subspace(shape);
  return Subspace::from_columns(shape, complexified_columns(solver.matrixU().leftCols(r), shape),
                                1e-8);
}

Index real_rank(const RealifiedMap& f, double tol, double scale) {
  const RealMatrix& m = f.matrix();
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<RealMatrix> solver(m);
  return retained(solver.singularValues(), tol, scale);
}

}  // namespace peircelab
