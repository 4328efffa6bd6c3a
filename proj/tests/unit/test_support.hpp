#pragma once

#include <initializer_list>
#include <random>

#include <gtest/gtest.h>

#include "peircelab/linalg.hpp"
#include "peircelab/random.hpp"

namespace peircelab::testing {

inline ComplexMatrix unit(Index rows, Index cols, Index i, Index j) {
  ComplexMatrix e = ComplexMatrix::Zero(rows, cols);
  e(i, j) = 1.0;
  return e;
}

// E_ij in M_n, one-based like the usual matrix units.
inline ComplexMatrix E(Index n, Index i, Index j) { return unit(n, n, i - 1, j - 1); }

inline ComplexMatrix diag(std::initializer_list<double> values) {
  const auto n = static_cast<Index>(values.size());
  ComplexMatrix d = ComplexMatrix::Zero(n, n);
  Index k = 0;
  for (double v : values) {
    d(k, k) = v;
    ++k;
  }
  return d;
}

inline ComplexMatrix rows(std::initializer_list<std::initializer_list<Complex>> data) {
  const auto r = static_cast<Index>(data.size());
  const auto c = static_cast<Index>(data.begin()->size());
  ComplexMatrix a(r, c);
  Index i = 0;
  for (const auto& row : data) {
    Index j = 0;
    for (Complex z : row) a(i, j++) = z;
    ++i;
  }
  return a;
}

inline ComplexMatrix I(Index n) { return ComplexMatrix::Identity(n, n); }

inline double dist(const ComplexMatrix& a, const ComplexMatrix& b) { return op_norm(a - b); }

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

}  // namespace peircelab::testing

#define EXPECT_MAT_NEAR(a, b, tol) EXPECT_LE(::peircelab::testing::dist((a), (b)), (tol))
