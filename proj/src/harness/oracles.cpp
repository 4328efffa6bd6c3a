#include "peircelab/harness/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include <Eigen/Eigenvalues>

namespace peircelab::oracle {

ComplexMatrix psd_power(const ComplexMatrix& h, double p) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(0.5 * (h + h.adjoint()));
  const RealVector& w = es.eigenvalues();
  const double top = w.size() ? std::max(0.0, w.maxCoeff()) : 0.0;
  ComplexVector d(w.size());
  for (Index k = 0; k < w.size(); ++k) d(k) = w(k) > kEigenCut * top ? std::pow(w(k), p) : 0.0;
  return es.eigenvectors() * d.asDiagonal() * es.eigenvectors().adjoint();
}

ComplexMatrix psd_support(const ComplexMatrix& h) { return psd_power(h, 0.0); }

ComplexMatrix range_tripotent(const ComplexMatrix& a) {
  return a * psd_power(a.adjoint() * a, -0.5);
}

ComplexMatrix generalized_inverse(const ComplexMatrix& a) {
  return a * psd_power(a.adjoint() * a, -1.0);
}

ComplexMatrix modulus(const ComplexMatrix& a) { return psd_power(a.adjoint() * a, 0.5); }

ComplexMatrix peirce_part(const ComplexMatrix& e, const ComplexMatrix& x, int k) {
  const ComplexMatrix l = e * e.adjoint();
  const ComplexMatrix r = e.adjoint() * e;
  const ComplexMatrix p2 = l * x * r;
  const ComplexMatrix p0 = (ComplexMatrix::Identity(l.rows(), l.cols()) - l) * x *
                           (ComplexMatrix::Identity(r.rows(), r.cols()) - r);
  switch (k) {
    case 2: return p2;
    case 0: return p0;
    default: return x - p2 - p0;
  }
}

namespace {

// Orthonormal basis of the range of an orthogonal projection.
ComplexMatrix range_basis(const ComplexMatrix& p) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(0.5 * (p + p.adjoint()));
  std::vector<Index> keep;
  for (Index k = 0; k < p.rows(); ++k)
    if (es.eigenvalues()(k) > 0.5) keep.push_back(k);
  ComplexMatrix out(p.rows(), static_cast<Index>(keep.size()));
  for (std::size_t j = 0; j < keep.size(); ++j) out.col(static_cast<Index>(j)) = es.eigenvectors().col(keep[j]);
  return out;
}

ComplexMatrix complement(const ComplexMatrix& p) {
  return ComplexMatrix::Identity(p.rows(), p.cols()) - p;
}

}  // namespace

// Rank-one units u_i v_j^* over range bases of l and r are orthonormal.
Subspace corner(const ComplexMatrix& l, const ComplexMatrix& r) {
  const Shape shape{l.rows(), r.cols()};
  const ComplexMatrix u = range_basis(l);
  const ComplexMatrix v = range_basis(r);
  std::vector<ComplexMatrix> parts;
  for (Index i = 0; i < u.cols(); ++i)
    for (Index j = 0; j < v.cols(); ++j) parts.push_back(u.col(i) * v.col(j).adjoint());
  return Subspace::from_orthonormal(shape, parts);
}

Subspace peirce_space(const ComplexMatrix& e, int k) {
  const ComplexMatrix l = psd_support(e * e.adjoint());
  const ComplexMatrix r = psd_support(e.adjoint() * e);
  if (k == 2) return corner(l, r);
  if (k == 0) return corner(complement(l), complement(r));
  return join(corner(l, complement(r)), corner(complement(l), r));
}

Subspace annihilator(const ComplexMatrix& x) {
  const ComplexMatrix il = ComplexMatrix::Identity(x.rows(), x.rows()) - psd_support(x * x.adjoint());
  const ComplexMatrix ir = ComplexMatrix::Identity(x.cols(), x.cols()) - psd_support(x.adjoint() * x);
  return corner(il, ir);
}

double cstar_orthogonality(const ComplexMatrix& a, const ComplexMatrix& b) {
  const double scale = std::max(1.0, a.norm() * b.norm());
  return ((a * b.adjoint()).norm() + (b.adjoint() * a).norm()) / scale;
}

}  // namespace peircelab::oracle
