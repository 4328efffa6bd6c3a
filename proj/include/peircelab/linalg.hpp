#pragma once

// Dense complex linear algebra substrate. Elements of every triple model are
// dense complex matrices; operators on them are materialized as real matrices
// acting on realified coordinates so that conjugate-linear maps such as
// x -> {a, x, a} have a single canonical matrix.

#include <complex>
#include <string_view>
#include <utility>

#include <Eigen/Dense>

#include "peircelab/error.hpp"

namespace peircelab {

using Index = Eigen::Index;
using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

// A singular value s is numerically zero iff s <= kRankTol * s_max.
inline constexpr double kRankTol = 1e-10;

struct Shape {
  Index rows = 0;
  Index cols = 0;

  Index size() const { return rows * cols; }
  bool operator==(const Shape&) const = default;
};

inline Shape shape_of(const ComplexMatrix& a) { return {a.rows(), a.cols()}; }

void require_finite(const ComplexMatrix& a, std::string_view what);
void require_shape(const ComplexMatrix& a, Shape expected, std::string_view what);

// Largest singular value.
double op_norm(const ComplexMatrix& a);

// <a, b> = trace(b^* a).
Complex trace_inner(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix adjoint(const ComplexMatrix& a);

// Row-major vectorization; trace_inner(a, b) == vectorize(b)^H vectorize(a).
ComplexVector vectorize(const ComplexMatrix& a);
ComplexMatrix unvectorize(const ComplexVector& v, Shape shape);

// z -> (Re z, Im z) interleaved over row-major entries.
RealVector realify(const ComplexMatrix& a);
ComplexMatrix complexify(const RealVector& v, Shape shape);

struct EigenResult {
  RealVector values;      // non-increasing
  ComplexMatrix vectors;  // unitary, column k belongs to values[k]
};

EigenResult hermitian_eigen(const ComplexMatrix& a, double tol = 1e-9);

struct SvdResult {
  ComplexMatrix left;   // rows x rows unitary
  RealVector singular;  // min(rows, cols) values, non-increasing
  ComplexMatrix right;  // cols x cols unitary

  ComplexMatrix reconstruct() const;
  // Number of singular values above tol * s_max.
  Index rank(double tol = kRankTol) const;
};

SvdResult svd(const ComplexMatrix& a, double tol = 1e-9);

// Real-linear map between matrix spaces in realified coordinates. Complex
// linear and conjugate-linear maps are both represented exactly.
class RealifiedMap {
 public:
  RealifiedMap(RealMatrix matrix, Shape domain, Shape codomain);

  static RealifiedMap identity(Shape shape);
  static RealifiedMap zero(Shape domain, Shape codomain);
  // x -> lambda * x
  static RealifiedMap scalar(Complex lambda, Shape shape);

  // Builds the real matrix of f by evaluating it on the real basis
  // {E_k, i E_k} of the domain.
  template <class F>
  static RealifiedMap materialize(Shape domain, Shape codomain, F&& f) {
    const Index n = domain.size();
    RealMatrix m(2 * codomain.size(), 2 * n);
    ComplexMatrix basis = ComplexMatrix::Zero(domain.rows, domain.cols);
    for (Index k = 0; k < n; ++k) {
      Complex& slot = basis(k / domain.cols, k % domain.cols);
      slot = Complex(1.0, 0.0);
      m.col(2 * k) = realify(f(static_cast<const ComplexMatrix&>(basis)));
      slot = Complex(0.0, 1.0);
      m.col(2 * k + 1) = realify(f(static_cast<const ComplexMatrix&>(basis)));
      slot = Complex(0.0, 0.0);
    }
    return RealifiedMap(std::move(m), domain, codomain);
  }

  ComplexMatrix apply(const ComplexMatrix& x) const;

  const RealMatrix& matrix() const { return matrix_; }
  Shape domain() const { return domain_; }
  Shape codomain() const { return codomain_; }

  // Largest singular value of the real matrix.
  double norm() const;

  RealifiedMap operator*(const RealifiedMap& rhs) const;  // composition
  RealifiedMap operator+(const RealifiedMap& rhs) const;
  RealifiedMap operator-(const RealifiedMap& rhs) const;
  RealifiedMap operator*(double s) const;
  // lambda * f (post-multiplication by a complex scalar)
  RealifiedMap scaled(Complex lambda) const;

 private:
  RealMatrix matrix_;
  Shape domain_;
  Shape codomain_;
};

// Largest-singular-value distance between two maps of equal shape.
double distance(const RealifiedMap& a, const RealifiedMap& b);

}  // namespace peircelab
