#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "peircelab/triple_model.hpp"

namespace peircelab::harness {

std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t fnv1a(std::string_view bytes, std::uint64_t h = 0xcbf29ce484222325ULL);

// Seed of one trial, a pure function of its coordinates.
std::uint64_t trial_seed(std::uint64_t suite_seed, std::string_view property, ModelKind kind,
                         Index dim, std::uint64_t trial);

// Model used for harness dimension d: rect is d x (d+1), the square models d x d.
TripleModel model_for(ModelKind kind, Index dim);

// Per-trial random source. Every generated matrix is folded into an FNV hash
// so a failing input can be identified and replayed.
class TrialContext {
 public:
  TrialContext(std::uint64_t seed, TripleModel model);

  std::mt19937_64& rng() { return rng_; }
  const TripleModel& model() const { return model_; }
  Shape shape() const { return model_.shape(); }
  std::uint64_t seed() const { return seed_; }
  std::uint64_t input_hash() const { return hash_; }

  Index uniform(Index lo, Index hi);  // inclusive
  double uniform_real(double lo, double hi);
  bool coin();
  std::complex<double> unit();

  // Complex Gaussian element of the model shape, or of the given shape.
  ComplexMatrix ginibre();
  ComplexMatrix ginibre(Index rows, Index cols);
  ComplexMatrix low_rank(Index rank);
  // Random rank in [0, min(m, n)].
  ComplexMatrix low_rank();
  // U diag(s) V* with Haar U, V of the model shape.
  ComplexMatrix with_singular_values(const std::vector<double>& s);
  ComplexMatrix unitary(Index n);
  // Square models: g g* + delta I.
  ComplexMatrix positive(double delta = 0.0);
  ComplexMatrix positive_low_rank(Index rank);
  ComplexMatrix hermitian();
  // Partial isometry from the SVD sign of a random matrix of random rank.
  ComplexMatrix tripotent();
  ComplexMatrix tripotent(Index rank);
  ComplexMatrix projection(Index rank);
  ComplexMatrix projection();

  // Adds an externally built input to the hash.
  const ComplexMatrix& note(const ComplexMatrix& a);

 private:
  std::uint64_t seed_;
  TripleModel model_;
  std::mt19937_64 rng_;
  std::uint64_t hash_;
};

}  // namespace peircelab::harness
