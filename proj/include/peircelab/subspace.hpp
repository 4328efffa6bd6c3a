#pragma once

#include <random>
#include <span>
#include <utility>
#include <vector>

#include "peircelab/linalg.hpp"

namespace peircelab {

// Complex subspace of a matrix space, stored as an orthonormal basis under
// the trace inner product. Basis elements are the columns of basis(), each a
// row-major vectorized matrix of element_shape().
class Subspace {
 public:
  // The zero subspace.
  explicit Subspace(Shape element_shape);

  static Subspace whole(Shape element_shape);

  // Complex span of the given vectorized columns; singular directions at or
  // below tol * s_max are dropped.
  static Subspace from_columns(Shape element_shape, const ComplexMatrix& columns,
                               double tol = kRankTol);
  static Subspace span(Shape element_shape, std::span<const ComplexMatrix> elements,
                       double tol = kRankTol);
  // Wraps an already orthonormal basis; throws InvalidInput if the Gram
  // matrix deviates from the identity by more than tol.
  static Subspace from_orthonormal(Shape element_shape, std::span<const ComplexMatrix> elements,
                                   double tol = 1e-9);

  Shape element_shape() const { return shape_; }
  Index dimension() const { return basis_.cols(); }
  bool is_zero() const { return basis_.cols() == 0; }
  const ComplexMatrix& basis() const { return basis_; }
  ComplexMatrix element(Index k) const;
  std::vector<ComplexMatrix> elements() const;

  ComplexMatrix project(const ComplexMatrix& x) const;
  // ||x - P x|| / ||x||, zero for x == 0.
  double residual(const ComplexMatrix& x) const;
  bool contains(const ComplexMatrix& x, double tol) const { return residual(x) <= tol; }
  // Largest residual of the basis of `smaller` against this subspace.
  double containment_residual(const Subspace& smaller) const;
  bool contains(const Subspace& smaller, double tol) const {
    return containment_residual(smaller) <= tol;
  }

  // ||B^H B - I||.
  double gram_residual() const;

  // Random element with standard complex Gaussian coordinates in the basis.
  template <class Rng>
  ComplexMatrix sample(Rng& rng) const;

 private:
  Subspace(Shape shape, ComplexMatrix basis) : shape_(shape), basis_(std::move(basis)) {}

  Shape shape_;
  ComplexMatrix basis_;
};

Subspace join(const Subspace& a, const Subspace& b, double tol = kRankTol);
// dim(a) + dim(b) - dim(a + b).
Index intersection_dimension(const Subspace& a, const Subspace& b, double tol = kRankTol);
// Both containments within tol.
bool same_subspace(const Subspace& a, const Subspace& b, double tol);

// Singular values at or below tol * max(||f||, scale) count as zero. With the
// default scale of 0 the cut is purely relative, which keeps roundoff of a map
// that should vanish; callers that know the natural size of f pass it.

// Kernel of a complex-linear or conjugate-linear map: the real null space is
// closed under multiplication by i and is returned as a complex subspace.
Subspace kernel(const RealifiedMap& f, double tol = kRankTol, double scale = 0.0);
// Image of a complex-linear or conjugate-linear map.
Subspace image(const RealifiedMap& f, double tol = kRankTol, double scale = 0.0);
Index real_rank(const RealifiedMap& f, double tol = kRankTol, double scale = 0.0);

template <class Rng>
ComplexMatrix Subspace::sample(Rng& rng) const {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexVector coords(basis_.cols());
  for (Index k = 0; k < coords.size(); ++k) coords(k) = Complex(normal(rng), normal(rng));
  return unvectorize(basis_ * coords, shape_);
}

}  // namespace peircelab
