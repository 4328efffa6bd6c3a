#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>

#include "peircelab/peirce.hpp"
#include "peircelab/subspace.hpp"

namespace peircelab {

struct WitnessReport {
  ComplexMatrix witness;
  std::map<std::string, double> residuals;
  double positivity_margin = 0.0;
  bool verified = false;
  std::uint64_t seed = 0;
  double tol = 1e-9;

  double worst_residual() const;
  // Recomputes `verified` from the residuals and the margin.
  void settle();
};

inline constexpr int kDefaultSamples = 64;

struct Peirce2Positivity {
  double membership = 0.0;   // ||P2(e) x - x|| / max(1, ||x||)
  double involution = 0.0;   // ||{e,x,e} - x|| / max(1, ||x||)
  double min_eigen = 0.0;    // smallest eigenvalue of Herm(e* x) / max(1, ||x||)
};

// x positive in E_2(e): x in E_2(e), x^{*e} = x and e* x >= 0.
Peirce2Positivity peirce2_positivity(const Tripotent& e, const ComplexMatrix& x);

// Square C*-model. J must be an inner ideal orthogonal to E(x).
WitnessReport weakly_rickart_witness(const TripleModel& model, const ComplexMatrix& x,
                                     const Subspace& j, double tol = 1e-9);

// Any model. e = r(x); also checks {x}^perp = E_0(e).
WitnessReport wor_witness(const TripleModel& model, const ComplexMatrix& x, const Subspace& j,
                          double tol = 1e-9);

// x positive in A_2(e) and A_0(e) = {x}^perp.
bool polar_isometry_characterization(const TripleModel& model, const ComplexMatrix& x,
                                     const Tripotent& e, double tol = 1e-9);

// Square C*-model, mutually orthogonal family xs, J orthogonal to every E(x_i):
// e with J in A_2(e) and every A(x_i) in A_0(e).
WitnessReport finite_reversed_witness(const TripleModel& model,
                                      std::span<const ComplexMatrix> xs, const Subspace& j,
                                      double tol = 1e-9);

struct RangeProjection {
  ComplexMatrix projection;
  WitnessReport report;
};

// Square model, a positive. Sampled checks are driven by `seed`.
RangeProjection jordan_range_projection(const TripleModel& model, const ComplexMatrix& a,
                                        double tol = 1e-9, std::uint64_t seed = 0,
                                        int samples = kDefaultSamples);

enum class PedersenCase { kSAJBW, kWeaklyRickart, kRickart, kBaer };

std::string_view pedersen_case_name(PedersenCase c);
PedersenCase parse_pedersen_case(std::string_view name);

// B and C orthogonal hereditary subspaces of a square model. The witness is a
// projection that is a unit for B and annihilates C.
WitnessReport pedersen_witness(const TripleModel& model, PedersenCase c, const Subspace& b,
                               const Subspace& cc, double tol = 1e-9, std::uint64_t seed = 0,
                               int samples = kDefaultSamples);

}  // namespace peircelab
