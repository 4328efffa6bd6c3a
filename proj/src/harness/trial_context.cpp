#include "peircelab/harness/trial_context.hpp"

#include <algorithm>
#include <cstring>

#include "peircelab/random.hpp"

namespace peircelab::harness {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a(std::string_view bytes, std::uint64_t h) {
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t trial_seed(std::uint64_t suite_seed, std::string_view property, ModelKind kind,
                         Index dim, std::uint64_t trial) {
  std::uint64_t h = splitmix64(suite_seed);
  h = splitmix64(h ^ fnv1a(property));
  h = splitmix64(h ^ static_cast<std::uint64_t>(kind));
  h = splitmix64(h ^ static_cast<std::uint64_t>(dim));
  return splitmix64(h ^ trial);
}

TripleModel model_for(ModelKind kind, Index dim) {
  switch (kind) {
    case ModelKind::kRect: return TripleModel::rect(dim, dim + 1);
    case ModelKind::kCStar: return TripleModel::cstar(dim);
    case ModelKind::kJBStar: return TripleModel::jbstar(dim);
  }
  throw Error(ErrorCode::kInvalidInput, "unknown model kind");
}

TrialContext::TrialContext(std::uint64_t seed, TripleModel model)
    : seed_(seed), model_(model), rng_(seed), hash_(0xcbf29ce484222325ULL) {}

Index TrialContext::uniform(Index lo, Index hi) {
  return std::uniform_int_distribution<Index>(lo, hi)(rng_);
}

double TrialContext::uniform_real(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng_);
}

bool TrialContext::coin() { return uniform(0, 1) == 1; }

std::complex<double> TrialContext::unit() {
  return std::polar(1.0, uniform_real(0.0, 2.0 * 3.14159265358979323846));
}

const ComplexMatrix& TrialContext::note(const ComplexMatrix& a) {
  hash_ = fnv1a(std::string_view(reinterpret_cast<const char*>(a.data()),
                                 sizeof(Complex) * static_cast<std::size_t>(a.size())),
                hash_);
  return a;
}

ComplexMatrix TrialContext::ginibre() { return ginibre(model_.m, model_.n); }

ComplexMatrix TrialContext::ginibre(Index rows, Index cols) {
  ComplexMatrix g = rnd::ginibre(rng_, rows, cols);
  note(g);
  return g;
}

ComplexMatrix TrialContext::low_rank(Index rank) {
  const Index k = std::min(model_.m, model_.n);
  rank = std::clamp<Index>(rank, 0, k);
  if (rank == 0) return note(ComplexMatrix::Zero(model_.m, model_.n));
  ComplexMatrix a = rnd::ginibre(rng_, model_.m, rank) * rnd::ginibre(rng_, rank, model_.n);
  note(a);
  return a;
}

ComplexMatrix TrialContext::low_rank() {
  return low_rank(uniform(0, std::min(model_.m, model_.n)));
}

ComplexMatrix TrialContext::unitary(Index n) {
  ComplexMatrix u = rnd::haar_unitary(rng_, n);
  note(u);
  return u;
}

ComplexMatrix TrialContext::with_singular_values(const std::vector<double>& s) {
  const Index k = std::min(model_.m, model_.n);
  ComplexMatrix sigma = ComplexMatrix::Zero(model_.m, model_.n);
  for (Index i = 0; i < k && i < static_cast<Index>(s.size()); ++i) sigma(i, i) = s[i];
  const ComplexMatrix u = rnd::haar_unitary(rng_, model_.m);
  const ComplexMatrix v = rnd::haar_unitary(rng_, model_.n);
  ComplexMatrix a = u * sigma * v.adjoint();
  note(a);
  return a;
}

ComplexMatrix TrialContext::positive(double delta) {
  require_square_model(model_, "positive generator");
  const ComplexMatrix g = rnd::ginibre(rng_, model_.n, model_.n);
  ComplexMatrix p = g * g.adjoint();
  p += delta * ComplexMatrix::Identity(model_.n, model_.n);
  p = 0.5 * (p + p.adjoint());
  note(p);
  return p;
}

ComplexMatrix TrialContext::positive_low_rank(Index rank) {
  require_square_model(model_, "positive generator");
  rank = std::clamp<Index>(rank, 0, model_.n);
  if (rank == 0) return note(ComplexMatrix::Zero(model_.n, model_.n));
  const ComplexMatrix g = rnd::ginibre(rng_, model_.n, rank);
  ComplexMatrix p = g * g.adjoint();
  p = 0.5 * (p + p.adjoint());
  note(p);
  return p;
}

ComplexMatrix TrialContext::hermitian() {
  require_square_model(model_, "hermitian generator");
  ComplexMatrix h = rnd::hermitian(rng_, model_.n);
  note(h);
  return h;
}

ComplexMatrix TrialContext::tripotent(Index rank) {
  const ComplexMatrix a = low_rank(rank);
  const SvdResult d = svd(a);
  const Index r = d.rank();
  const auto u = d.left.leftCols(r);
  const auto v = d.right.leftCols(r);
  ComplexMatrix e = u * v.adjoint();
  if (r == 0) e = ComplexMatrix::Zero(model_.m, model_.n);
  note(e);
  return e;
}

ComplexMatrix TrialContext::tripotent() { return tripotent(uniform(0, std::min(model_.m, model_.n))); }

ComplexMatrix TrialContext::projection(Index rank) {
  require_square_model(model_, "projection generator");
  ComplexMatrix p = rnd::projection(rng_, model_.n, rank);
  note(p);
  return p;
}

ComplexMatrix TrialContext::projection() { return projection(uniform(0, model_.n)); }

}  // namespace peircelab::harness
