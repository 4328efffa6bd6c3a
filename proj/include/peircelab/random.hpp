#pragma once

// Seeded random element generators shared by the witness constructions and the
// verification harness. Every generator takes the engine explicitly.

#include <cmath>
#include <random>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

#include "peircelab/linalg.hpp"

namespace peircelab::rnd {

// Complex Gaussian entries with E|z|^2 = 1 / cols.
template <class Rng>
ComplexMatrix ginibre(Rng& rng, Index rows, Index cols) {
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5 / static_cast<double>(cols)));
  ComplexMatrix g(rows, cols);
  for (Index r = 0; r < rows; ++r)
    for (Index c = 0; c < cols; ++c) g(r, c) = Complex(normal(rng), normal(rng));
  return g;
}

template <class Rng>
ComplexMatrix haar_unitary(Rng& rng, Index n) {
  const ComplexMatrix g = ginibre(rng, n, n);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(n, n);
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Index k = 0; k < n; ++k) {
    const double mag = std::abs(r(k, k));
    if (mag > 0.0) q.col(k) *= r(k, k) / mag;
  }
  return q;
}

template <class Rng>
ComplexMatrix hermitian(Rng& rng, Index n) {
  const ComplexMatrix g = ginibre(rng, n, n);
  return 0.5 * (g + g.adjoint());
}

// Spectral projection onto the top `rank` eigenvectors of a random Hermitian
// compressed to the column span of `within` (orthonormal columns).
template <class Rng>
ComplexMatrix projection_within(Rng& rng, const ComplexMatrix& within, Index rank) {
  const Index k = within.cols();
  if (rank <= 0 || k == 0) return ComplexMatrix::Zero(within.rows(), within.rows());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(hermitian(rng, k));
  // ascending order; keep the largest
  const ComplexMatrix cols = within * es.eigenvectors().rightCols(std::min(rank, k));
  return cols * cols.adjoint();
}

template <class Rng>
ComplexMatrix projection(Rng& rng, Index n, Index rank) {
  return projection_within(rng, ComplexMatrix::Identity(n, n), rank);
}

}  // namespace peircelab::rnd
