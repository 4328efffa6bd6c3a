#include "peircelab/spectral.hpp"

#include <algorithm>
#include <cmath>

namespace peircelab {

namespace {

// U diag(g(s_k)) V* restricted to the leading min(m, n) singular pairs.
template <class G>
ComplexMatrix recombine(const SvdResult& d, G&& g) {
  const Index k = d.singular.size();
  ComplexVector w(k);
  for (Index i = 0; i < k; ++i) w(i) = g(i, d.singular(i));
  return d.left.leftCols(k) * w.asDiagonal() * d.right.leftCols(k).adjoint();
}

}  // namespace

TripleSpectrum triple_spectrum(const TripleModel& model, const ComplexMatrix& a,
                               double merge_tol) {
  require_element(model, a, "element");
  const SvdResult d = svd(a);
  TripleSpectrum out;
  const Index r = d.rank();
  if (r == 0) return out;
  const double smax = d.singular(0);
  for (Index i = r - 1; i >= 0; --i) {
    const double s = d.singular(i);
    if (out.values.empty() || s - out.values.back() > merge_tol * smax) {
      out.values.push_back(s);
    } else {
      out.values.back() = std::max(out.values.back(), s);
    }
  }
  out.includes_zero = r < std::min(a.rows(), a.cols());
  return out;
}

ComplexMatrix odd_calculus(const TripleModel& model, const ComplexMatrix& a,
                           const std::function<double(double)>& f) {
  require_element(model, a, "element");
  const SvdResult d = svd(a);
  const Index r = d.rank();
  return recombine(d, [&](Index i, double s) { return Complex(i < r ? f(s) : 0.0, 0.0); });
}

Tripotent range_tripotent(const TripleModel& model, const ComplexMatrix& a, double tol) {
  require_element(model, a, "element");
  const SvdResult d = svd(a);
  const Index r = d.rank();
  return Tripotent(model, recombine(d, [&](Index i, double) { return Complex(i < r ? 1.0 : 0.0); }),
                   tol);
}

Tripotent support_tripotent(const TripleModel& model, const ComplexMatrix& a, double tol) {
  require_element(model, a, "element");
  const SvdResult d = svd(a);
  const double norm = d.singular.size() ? d.singular(0) : 0.0;
  if (std::abs(norm - 1.0) > tol) {
    throw Error(ErrorCode::kNotNormOne, "support tripotent needs ||a|| = 1, got " +
                                            std::to_string(norm));
  }
  return Tripotent(
      model,
      recombine(d, [&](Index, double s) { return Complex(std::abs(s - 1.0) <= tol ? 1.0 : 0.0); }),
      tol);
}

ComplexMatrix range_projection(const ComplexMatrix& positive) {
  const EigenResult eig = hermitian_eigen(positive);
  const Index n = positive.rows();
  ComplexMatrix p = ComplexMatrix::Zero(n, n);
  if (n == 0 || eig.values(0) <= 0.0) return p;
  const double cut = kRankTol * eig.values(0);
  for (Index k = 0; k < n; ++k) {
    if (eig.values(k) > cut) p += eig.vectors.col(k) * eig.vectors.col(k).adjoint();
  }
  return p;
}

PolarData polar_decomposition(const TripleModel& model, const ComplexMatrix& x, double tol) {
  require_square_model(model, "polar_decomposition");
  require_element(model, x, "element");
  const SvdResult d = svd(x);
  const Index r = d.rank();
  ComplexMatrix e =
      recombine(d, [&](Index i, double) { return Complex(i < r ? 1.0 : 0.0); });
  ComplexVector s(d.singular.size());
  for (Index i = 0; i < s.size(); ++i) s(i) = i < r ? d.singular(i) : 0.0;
  ComplexMatrix modulus = d.right * s.asDiagonal() * d.right.adjoint();
  ComplexMatrix lp = e * e.adjoint();
  ComplexMatrix rp = e.adjoint() * e;
  return {Tripotent(model, std::move(e), tol), std::move(modulus), std::move(lp), std::move(rp)};
}

double GinvCheck::worst() const { return std::max({q_a_ainv, q_ainv_a, commutator}); }

ComplexMatrix generalized_inverse_candidate(const TripleModel& model, const ComplexMatrix& a) {
  require_element(model, a, "element");
  const SvdResult d = svd(a);
  const Index r = d.rank();
  return recombine(d, [&](Index i, double s) { return Complex(i < r ? 1.0 / s : 0.0); });
}

GinvCheck check_generalized_inverse(const TripleModel& model, const ComplexMatrix& a,
                                    const ComplexMatrix& ainv) {
  GinvCheck out;
  out.q_a_ainv = op_norm(quadratic(model, a, ainv) - a) / std::max(1.0, op_norm(a));
  out.q_ainv_a = op_norm(quadratic(model, ainv, a) - ainv) / std::max(1.0, op_norm(ainv));
  const RealifiedMap qa = materialize_Q(model, a);
  const RealifiedMap qb = materialize_Q(model, ainv);
  out.commutator = (qa * qb - qb * qa).norm() / std::max(1.0, qa.norm() * qb.norm());
  return out;
}

bool is_regular(const TripleModel& model, const ComplexMatrix& a, double tol) {
  return check_generalized_inverse(model, a, generalized_inverse_candidate(model, a)).worst() <=
         tol;
}

ComplexMatrix generalized_inverse(const TripleModel& model, const ComplexMatrix& a, double tol) {
  ComplexMatrix ainv = generalized_inverse_candidate(model, a);
  const GinvCheck c = check_generalized_inverse(model, a, ainv);
  if (!(c.worst() <= tol)) {
    throw Error(ErrorCode::kNotRegular,
                "generalized inverse identities fail with residual " + std::to_string(c.worst()));
  }
  return ainv;
}

}  // namespace peircelab
