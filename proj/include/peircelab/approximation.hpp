#pragma once

#include <map>
#include <string>
#include <vector>

#include "peircelab/peirce.hpp"

namespace peircelab {

struct ProjectionTerm {
  double coeff = 0.0;
  ComplexMatrix projection;
};

struct ProjectionCombo {
  std::vector<ProjectionTerm> terms;
  double error = 0.0;  // ||a - sum coeff_i p_i||

  ComplexMatrix sum(Shape shape) const;
};

// Eigenvalues within this distance (relative to max(1, ||a||)) of a grid point
// are snapped onto it.
inline constexpr double kGridSnap = 1e-12;

// Square model, a self-adjoint. Eigenvalue t goes to bucket floor(t / eps)
// and is replaced by the bucket's left endpoint, so 0 <= a - combo <= eps on
// the positive part. Negative parts are handled by symmetry with negative
// coefficients. Throws NotPositive for non-Hermitian input and NonPositiveEps.
ProjectionCombo projection_approximation(const TripleModel& model, const ComplexMatrix& a,
                                         double eps);
// Full spectral decomposition: one projection per distinct nonzero eigenvalue.
ProjectionCombo spectral_combination(const TripleModel& model, const ComplexMatrix& a);

struct RegularApproximation {
  Tripotent e_eps;
  Tripotent range;  // R(a)
  ComplexMatrix b;  // square root of a in E_2(R(a))
  ComplexMatrix y;  // {b, e_eps, b}
  double error = 0.0;
  std::map<std::string, double> residuals;
  bool below_range = false;
  bool y_regular = false;
  bool verified = false;
};

// Keeps singular values s > eps (1 - 1e-12). Throws NonPositiveEps.
RegularApproximation regular_approximation(const TripleModel& model, const ComplexMatrix& a,
                                           double eps, double tol = 1e-9);

}  // namespace peircelab
