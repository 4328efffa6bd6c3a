#pragma once

#include <functional>
#include <vector>

#include "peircelab/peirce.hpp"

namespace peircelab {

struct TripleSpectrum {
  std::vector<double> values;  // distinct nonzero singular values, ascending
  bool includes_zero = false;  // a != 0 and a is rank deficient
};

// Singular values closer than merge_tol * s_max are merged.
TripleSpectrum triple_spectrum(const TripleModel& model, const ComplexMatrix& a,
                               double merge_tol = 1e-9);

// U f(S) V* over singular values above the rank tolerance; the rest map to 0.
ComplexMatrix odd_calculus(const TripleModel& model, const ComplexMatrix& a,
                           const std::function<double(double)>& f);

Tripotent range_tripotent(const TripleModel& model, const ComplexMatrix& a,
                          double tol = kTripotentTol);
// Keeps the singular values within tol of 1. Throws NotNormOne.
Tripotent support_tripotent(const TripleModel& model, const ComplexMatrix& a,
                            double tol = kTripotentTol);

struct PolarData {
  Tripotent isometry;
  ComplexMatrix modulus;  // (x* x)^{1/2}
  ComplexMatrix lp;       // range projection of x x*
  ComplexMatrix rp;       // range projection of x* x
};

PolarData polar_decomposition(const TripleModel& model, const ComplexMatrix& x,
                              double tol = kTripotentTol);

// Range projection of a positive semidefinite matrix via its eigenvectors.
ComplexMatrix range_projection(const ComplexMatrix& positive);

struct GinvCheck {
  double q_a_ainv = 0.0;    // ||Q(a) a^+ - a|| / max(1, ||a||)
  double q_ainv_a = 0.0;    // ||Q(a^+) a - a^+|| / max(1, ||a^+||)
  double commutator = 0.0;  // ||[Q(a), Q(a^+)]|| / max(1, ||Q(a)|| ||Q(a^+)||)
  double worst() const;
};

// U S^{-1} V* on the retained singular values. Never throws for finite input:
// every matrix is regular in finite dimension.
ComplexMatrix generalized_inverse_candidate(const TripleModel& model, const ComplexMatrix& a);
GinvCheck check_generalized_inverse(const TripleModel& model, const ComplexMatrix& a,
                                    const ComplexMatrix& ainv);

bool is_regular(const TripleModel& model, const ComplexMatrix& a, double tol = kTripotentTol);
// Throws NotRegular.
ComplexMatrix generalized_inverse(const TripleModel& model, const ComplexMatrix& a,
                                  double tol = kTripotentTol);

}  // namespace peircelab
