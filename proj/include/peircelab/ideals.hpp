#pragma once

#include <span>

#include "peircelab/subspace.hpp"
#include "peircelab/triple_model.hpp"

namespace peircelab {

struct OrthogonalityReport {
  double l_norm = 0.0;          // ||L(a,b)|| / max(1, ||a|| ||b||)
  double cstar_residual = 0.0;  // (||ab*|| + ||b*a||) / max(1, ||a|| ||b||); square models only
  bool orthogonal = false;
};

OrthogonalityReport orthogonality_report(const TripleModel& model, const ComplexMatrix& a,
                                         const ComplexMatrix& b, double tol = 1e-9);
bool is_orthogonal(const TripleModel& model, const ComplexMatrix& a, const ComplexMatrix& b,
                   double tol = 1e-9);

// Every basis element of a is orthogonal to every basis element of b.
bool subspaces_orthogonal(const TripleModel& model, const Subspace& a, const Subspace& b,
                          double tol = 1e-9);
double subspace_orthogonality_residual(const TripleModel& model, const Subspace& a,
                                       const Subspace& b);

// {x : L(s, x) = 0 for all s in S}
Subspace orthogonal_annihilator(const TripleModel& model, std::span<const ComplexMatrix> s,
                                double tol = kRankTol);
Subspace orthogonal_annihilator(const TripleModel& model, const Subspace& s,
                                double tol = kRankTol);

// Outer: U_x(s) = 0 for all s. Inner: U_s(x) = 0 for all s.
double outer_quadratic_residual(const TripleModel& model, const ComplexMatrix& x,
                                std::span<const ComplexMatrix> s);
double inner_quadratic_residual(const TripleModel& model, const ComplexMatrix& x,
                                std::span<const ComplexMatrix> s);
bool in_outer_quadratic_annihilator(const TripleModel& model, const ComplexMatrix& x,
                                    std::span<const ComplexMatrix> s, double tol = 1e-9);
bool in_inner_quadratic_annihilator(const TripleModel& model, const ComplexMatrix& x,
                                    std::span<const ComplexMatrix> s, double tol = 1e-9);

// Image of Q(x).
Subspace inner_ideal_generated(const TripleModel& model, const ComplexMatrix& x,
                               double tol = kRankTol);

// Largest projector residual of {u, w, v} against S over basis pairs (u, v)
// of S and the real basis w of the ambient space.
double inner_ideal_residual(const TripleModel& model, const Subspace& s);
bool is_inner_ideal(const TripleModel& model, const Subspace& s, double tol = 1e-9);

}  // namespace peircelab
