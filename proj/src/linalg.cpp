#include "peircelab/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace peircelab {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kShapeMismatch: return "ShapeMismatch";
    case ErrorCode::kNotHermitian: return "NotHermitian";
    case ErrorCode::kConvergenceFailure: return "ConvergenceFailure";
    case ErrorCode::kNotTripotent: return "NotTripotent";
    case ErrorCode::kNotInPeirce2: return "NotInPeirce2";
    case ErrorCode::kNotUnitModulus: return "NotUnitModulus";
    case ErrorCode::kNotNormOne: return "NotNormOne";
    case ErrorCode::kNotRegular: return "NotRegular";
    case ErrorCode::kNotOrthogonal: return "NotOrthogonal";
    case ErrorCode::kNotInnerIdeal: return "NotInnerIdeal";
    case ErrorCode::kNotMutuallyOrthogonal: return "NotMutuallyOrthogonal";
    case ErrorCode::kNotPositive: return "NotPositive";
    case ErrorCode::kNonPositiveEps: return "NonPositiveEps";
    case ErrorCode::kUnsupportedModel: return "UnsupportedModel";
    case ErrorCode::kUnknownProperty: return "UnknownProperty";
    case ErrorCode::kInvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

void require_finite(const ComplexMatrix& a, std::string_view what) {
  if (!a.allFinite()) {
    throw Error(ErrorCode::kInvalidInput, std::string(what) + " has non-finite entries");
  }
}

void require_shape(const ComplexMatrix& a, Shape expected, std::string_view what) {
  if (shape_of(a) != expected) {
    throw Error(ErrorCode::kShapeMismatch,
                std::string(what) + " is " + std::to_string(a.rows()) + "x" +
                    std::to_string(a.cols()) + ", expected " + std::to_string(expected.rows) +
                    "x" + std::to_string(expected.cols));
  }
}

double op_norm(const ComplexMatrix& a) {
  if (a.size() == 0) return 0.0;
  // Largest eigenvalue of the smaller Gram matrix; accurate for the top value.
  const ComplexMatrix gram = a.rows() <= a.cols() ? ComplexMatrix(a * a.adjoint())
                                                  : ComplexMatrix(a.adjoint() * a);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(gram, Eigen::EigenvaluesOnly);
  return std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff()));
}

Complex trace_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (b.adjoint() * a).trace();
}

ComplexMatrix adjoint(const ComplexMatrix& a) { return a.adjoint(); }

ComplexVector vectorize(const ComplexMatrix& a) {
  ComplexVector v(a.size());
  for (Index r = 0; r < a.rows(); ++r)
    for (Index c = 0; c < a.cols(); ++c) v(r * a.cols() + c) = a(r, c);
  return v;
}

ComplexMatrix unvectorize(const ComplexVector& v, Shape shape) {
  if (v.size() != shape.size()) {
    throw Error(ErrorCode::kShapeMismatch, "vector length does not match shape");
  }
  ComplexMatrix a(shape.rows, shape.cols);
  for (Index r = 0; r < shape.rows; ++r)
    for (Index c = 0; c < shape.cols; ++c) a(r, c) = v(r * shape.cols + c);
  return a;
}

RealVector realify(const ComplexMatrix& a) {
  RealVector v(2 * a.size());
  for (Index r = 0; r < a.rows(); ++r) {
    for (Index c = 0; c < a.cols(); ++c) {
      const Index k = r * a.cols() + c;
      v(2 * k) = a(r, c).real();
      v(2 * k + 1) = a(r, c).imag();
    }
  }
  return v;
}

ComplexMatrix complexify(const RealVector& v, Shape shape) {
  if (v.size() != 2 * shape.size()) {
    throw Error(ErrorCode::kShapeMismatch, "realified vector length does not match shape");
  }
  ComplexMatrix a(shape.rows, shape.cols);
  for (Index r = 0; r < shape.rows; ++r) {
    for (Index c = 0; c < shape.cols; ++c) {
      const Index k = r * shape.cols + c;
      a(r, c) = Complex(v(2 * k), v(2 * k + 1));
    }
  }
  return a;
}

EigenResult hermitian_eigen(const ComplexMatrix& a, double tol) {
  if (a.rows() != a.cols()) {
    throw Error(ErrorCode::kShapeMismatch, "hermitian_eigen needs a square matrix");
  }
  require_finite(a, "hermitian_eigen input");
  const double scale = a.norm();
  if ((a - a.adjoint()).norm() > tol * (1.0 + scale)) {
    throw Error(ErrorCode::kNotHermitian, "input deviates from its adjoint");
  }
  const ComplexMatrix h = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h);
  if (es.info() != Eigen::Success) {
    throw Error(ErrorCode::kConvergenceFailure, "self-adjoint eigensolver did not converge");
  }
  const Index n = a.rows();
  EigenResult out{RealVector(n), ComplexMatrix(n, n)};
  // Eigen sorts ascending.
  for (Index k = 0; k < n; ++k) {
    out.values(k) = es.eigenvalues()(n - 1 - k);
    out.vectors.col(k) = es.eigenvectors().col(n - 1 - k);
  }
  const ComplexMatrix rebuilt =
      out.vectors * out.values.cast<Complex>().asDiagonal() * out.vectors.adjoint();
  if ((rebuilt - h).norm() > tol * std::max(1.0, scale)) {
    throw Error(ErrorCode::kConvergenceFailure, "eigen reconstruction residual too large");
  }
  return out;
}

ComplexMatrix SvdResult::reconstruct() const {
  ComplexMatrix sigma = ComplexMatrix::Zero(left.cols(), right.cols());
  for (Index k = 0; k < singular.size(); ++k) sigma(k, k) = singular(k);
  return left * sigma * right.adjoint();
}

Index SvdResult::rank(double tol) const {
  if (singular.size() == 0 || singular(0) <= 0.0) return 0;
  const double cut = tol * singular(0);
  Index r = 0;
  while (r < singular.size() && singular(r) > cut) ++r;
  return r;
}

SvdResult svd(const ComplexMatrix& a, double tol) {
  require_finite(a, "svd input");
  Eigen::JacobiSVD<ComplexMatrix> solver(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
  SvdResult out{solver.matrixU(), solver.singularValues(), solver.matrixV()};
  const double scale = a.norm();
  if ((out.reconstruct() - a).norm() > tol * std::max(1.0, scale)) {
    throw Error(ErrorCode::kConvergenceFailure, "svd reconstruction residual too large");
  }
  return out;
}

RealifiedMap::RealifiedMap(RealMatrix matrix, Shape domain, Shape codomain)
    : matrix_(std::move(matrix)), domain_(domain), codomain_(codomain) {
  if (matrix_.rows() != 2 * codomain_.size() || matrix_.cols() != 2 * domain_.size()) {
    throw Error(ErrorCode::kShapeMismatch, "realified matrix does not match its shapes");
  }
}

RealifiedMap RealifiedMap::identity(Shape shape) {
  return RealifiedMap(RealMatrix::Identity(2 * shape.size(), 2 * shape.size()), shape, shape);
}

RealifiedMap RealifiedMap::zero(Shape domain, Shape codomain) {
  return RealifiedMap(RealMatrix::Zero(2 * codomain.size(), 2 * domain.size()), domain,
                      codomain);
}

RealifiedMap RealifiedMap::scalar(Complex lambda, Shape shape) {
  const Index n = shape.size();
  RealMatrix m = RealMatrix::Zero(2 * n, 2 * n);
  for (Index k = 0; k < n; ++k) {
    m(2 * k, 2 * k) = lambda.real();
    m(2 * k, 2 * k + 1) = -lambda.imag();
    m(2 * k + 1, 2 * k) = lambda.imag();
    m(2 * k + 1, 2 * k + 1) = lambda.real();
  }
  return RealifiedMap(std::move(m), shape, shape);
}

ComplexMatrix RealifiedMap::apply(const ComplexMatrix& x) const {
  require_shape(x, domain_, "map argument");
  return complexify(matrix_ * realify(x), codomain_);
}

double RealifiedMap::norm() const {
  if (matrix_.size() == 0) return 0.0;
  const RealMatrix gram = matrix_.rows() <= matrix_.cols()
                              ? RealMatrix(matrix_ * matrix_.transpose())
                              : RealMatrix(matrix_.transpose() * matrix_);
  Eigen::SelfAdjointEigenSolver<RealMatrix> es(gram, Eigen::EigenvaluesOnly);
  return std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff()));
}

RealifiedMap RealifiedMap::operator*(const RealifiedMap& rhs) const {
  if (rhs.codomain_ != domain_) {
    throw Error(ErrorCode::kShapeMismatch, "composition of incompatible maps");
  }
  return RealifiedMap(matrix_ * rhs.matrix_, rhs.domain_, codomain_);
}

RealifiedMap RealifiedMap::operator+(const RealifiedMap& rhs) const {
  if (rhs.domain_ != domain_ || rhs.codomain_ != codomain_) {
    throw Error(ErrorCode::kShapeMismatch, "sum of incompatible maps");
  }
  return RealifiedMap(matrix_ + rhs.matrix_, domain_, codomain_);
}

RealifiedMap RealifiedMap::operator-(const RealifiedMap& rhs) const {
  if (rhs.domain_ != domain_ || rhs.codomain_ != codomain_) {
    throw Error(ErrorCode::kShapeMismatch, "difference of incompatible maps");
  }
  return RealifiedMap(matrix_ - rhs.matrix_, domain_, codomain_);
}

RealifiedMap RealifiedMap::operator*(double s) const {
  return RealifiedMap(matrix_ * s, domain_, codomain_);
}

RealifiedMap RealifiedMap::scaled(Complex lambda) const {
  return scalar(lambda, codomain_) * (*this);
}

double distance(const RealifiedMap& a, const RealifiedMap& b) { return (a - b).norm(); }

}  // namespace peircelab
