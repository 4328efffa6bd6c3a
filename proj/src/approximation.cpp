#include "peircelab/approximation.hpp"

#include <algorithm>
#include <cmath>

#include "peircelab/spectral.hpp"

namespace peircelab {

ComplexMatrix ProjectionCombo::sum(Shape shape) const {
  ComplexMatrix out = ComplexMatrix::Zero(shape.rows, shape.cols);
  for (const auto& t : terms) out += t.coeff * t.projection;
  return out;
}

namespace {

EigenResult self_adjoint_spectrum(const TripleModel& model, const ComplexMatrix& a) {
  require_square_model(model, "projection_approximation");
  require_element(model, a, "a");
  const double s = std::max(1.0, op_norm(a));
  if ((a - a.adjoint()).norm() > 1e-9 * s) {
    throw Error(ErrorCode::kNotPositive, "projection approximation needs a self-adjoint element");
  }
  return hermitian_eigen(a);
}

// Groups eigenvectors by key and emits one projection per nonzero coefficient.
template <class Key>
ProjectionCombo group(const EigenResult& eig, Key&& key) {
  std::map<long long, std::pair<double, ComplexMatrix>> buckets;
  const Index n = eig.vectors.rows();
  for (Index k = 0; k < eig.values.size(); ++k) {
    const auto [id, coeff] = key(eig.values(k));
    if (coeff == 0.0) continue;
    auto it = buckets.find(id);
    if (it == buckets.end()) {
      it = buckets.emplace(id, std::make_pair(coeff, ComplexMatrix(ComplexMatrix::Zero(n, n)))).first;
    }
    it->second.second += eig.vectors.col(k) * eig.vectors.col(k).adjoint();
  }
  ProjectionCombo out;
  for (auto& [id, entry] : buckets) out.terms.push_back({entry.first, std::move(entry.second)});
  return out;
}

}  // namespace

ProjectionCombo projection_approximation(const TripleModel& model, const ComplexMatrix& a,
                                         double eps) {
  if (!(eps > 0.0)) throw Error(ErrorCode::kNonPositiveEps, "eps must be positive");
  const EigenResult eig = self_adjoint_spectrum(model, a);
  const double snap = kGridSnap * std::max(1.0, op_norm(a));
  ProjectionCombo out = group(eig, [&](double t) {
    const double mag = std::abs(t);
    long long k = static_cast<long long>(std::floor(mag / eps));
    if ((k + 1) * eps - mag <= snap) ++k;
    const double sign = t < 0.0 ? -1.0 : 1.0;
    return std::make_pair(static_cast<long long>(sign) * k, sign * static_cast<double>(k) * eps);
  });
  out.error = op_norm(a - out.sum(model.shape()));
  return out;
}

ProjectionCombo spectral_combination(const TripleModel& model, const ComplexMatrix& a) {
  const EigenResult eig = self_adjoint_spectrum(model, a);
  const double scale = std::max(1.0, op_norm(a));
  // Cluster eigenvalues that agree to 1e-9 relative.
  std::vector<double> centers;
  ProjectionCombo out = group(eig, [&](double t) {
    if (std::abs(t) <= kRankTol * scale) return std::make_pair(-1LL, 0.0);
    for (std::size_t i = 0; i < centers.size(); ++i) {
      if (std::abs(centers[i] - t) <= 1e-9 * scale) return std::make_pair(static_cast<long long>(i), centers[i]);
    }
    centers.push_back(t);
    return std::make_pair(static_cast<long long>(centers.size() - 1), t);
  });
  out.error = op_norm(a - out.sum(model.shape()));
  return out;
}

RegularApproximation regular_approximation(const TripleModel& model, const ComplexMatrix& a,
                                           double eps, double tol) {
  if (!(eps > 0.0)) throw Error(ErrorCode::kNonPositiveEps, "eps must be positive");
  require_element(model, a, "a");
  const SvdResult d = svd(a);
  const Index r = d.rank();
  const Index k = d.singular.size();
  const double cut = eps * (1.0 - 1e-12);
  ComplexVector root(k), keep(k), unit(k);
  for (Index i = 0; i < k; ++i) {
    const bool live = i < r;
    root(i) = live ? std::sqrt(d.singular(i)) : 0.0;
    unit(i) = live ? 1.0 : 0.0;
    keep(i) = live && d.singular(i) > cut ? 1.0 : 0.0;
  }
  const auto u = d.left.leftCols(k);
  const auto v = d.right.leftCols(k);
  RegularApproximation out{Tripotent(model, u * keep.asDiagonal() * v.adjoint()),
                           Tripotent(model, u * unit.asDiagonal() * v.adjoint()),
                           u * root.asDiagonal() * v.adjoint(),
                           ComplexMatrix(),
                           0.0,
                           {},
                           false,
                           false,
                           false};
  out.y = triple_product(model, out.b, out.e_eps.element(), out.b);
  out.error = op_norm(a - out.y);
  const double s = std::max(1.0, op_norm(a));
  out.residuals["square_root"] =
      op_norm(triple_product(model, out.b, out.range.element(), out.b) - a) / s;
  out.below_range = tripotent_leq(out.e_eps, out.range, tol);
  out.y_regular = is_regular(model, out.y, tol);
  out.verified = out.below_range && out.y_regular && out.error < eps &&
                 out.residuals["square_root"] <= 1e-10;
  return out;
}

}  // namespace peircelab
