#pragma once

#include <complex>

#include "peircelab/subspace.hpp"
#include "peircelab/triple_model.hpp"

namespace peircelab {

inline constexpr double kTripotentTol = 1e-9;

// ||{e,e,e} - e|| / max(1, ||e||)
double tripotent_residual(const TripleModel& model, const ComplexMatrix& e);
bool is_tripotent(const TripleModel& model, const ComplexMatrix& e, double tol = kTripotentTol);

// An element certified once as a tripotent; downstream code trusts it.
class Tripotent {
 public:
  // Throws NotTripotent.
  Tripotent(const TripleModel& model, ComplexMatrix e, double tol = kTripotentTol);

  static Tripotent zero(const TripleModel& model);

  const TripleModel& model() const { return model_; }
  const ComplexMatrix& element() const { return e_; }
  double certified_tol() const { return tol_; }

 private:
  TripleModel model_;
  ComplexMatrix e_;
  double tol_;
};

struct PeirceDecomposition {
  ComplexMatrix tripotent;
  RealifiedMap p0, p1, p2;
  Subspace s0, s1, s2;

  const RealifiedMap& projection(int k) const;
  const Subspace& subspace(int k) const;
};

PeirceDecomposition peirce_decompose(const Tripotent& e);

// P2(e) x = Q(e)^2 x, evaluated directly.
ComplexMatrix peirce2_project(const Tripotent& e, const ComplexMatrix& x);

// E_2(e) as a unital JB*-algebra: x o_e y = {x,e,y}, x^{*e} = {e,x,e}.
class Peirce2Algebra {
 public:
  Peirce2Algebra(const Tripotent& e, double tol = 1e-9);

  ComplexMatrix product(const ComplexMatrix& x, const ComplexMatrix& y) const;
  ComplexMatrix involution(const ComplexMatrix& x) const;
  const ComplexMatrix& unit() const { return e_.element(); }

  // Associative C*-structure of A_2(e) in the square matrix models:
  // x .e y = x e* y and x^{*e} = e x* e.
  ComplexMatrix cstar_product(const ComplexMatrix& x, const ComplexMatrix& y) const;
  ComplexMatrix cstar_involution(const ComplexMatrix& x) const;

  // ||P2 x - x|| / max(1, ||x||)
  double membership_residual(const ComplexMatrix& x) const;

 private:
  void require_member(const ComplexMatrix& x) const;

  Tripotent e_;
  double tol_;
};

// v - e is a tripotent orthogonal to e.
bool tripotent_leq(const Tripotent& e, const Tripotent& v, double tol = 1e-9);

enum class AutomorphismVariant { kS, kR };

// S: lambda^2 P2 + lambda P1 + P0;  R: P2 + lambda P1 + lambda^2 P0.
RealifiedMap peirce_automorphism(const PeirceDecomposition& d, std::complex<double> lambda,
                                 AutomorphismVariant variant);
RealifiedMap peirce_automorphism(const Tripotent& e, std::complex<double> lambda,
                                 AutomorphismVariant variant);

}  // namespace peircelab
