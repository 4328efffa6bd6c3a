#pragma once

// Independent routes to quantities the library computes another way. The
// library mostly goes through the SVD of the element or through materialized
// triple-product maps; these go through Hermitian eigendecompositions and
// associative matrix identities instead.

#include "peircelab/subspace.hpp"

namespace peircelab::oracle {

// Eigenvalues below this fraction of the largest are dropped.
inline constexpr double kEigenCut = 1e-12;

// (h)^{+p} for positive semidefinite h.
ComplexMatrix psd_power(const ComplexMatrix& h, double p);
// Projection onto the range of positive semidefinite h.
ComplexMatrix psd_support(const ComplexMatrix& h);

// a (a* a)^{+1/2}
ComplexMatrix range_tripotent(const ComplexMatrix& a);
// a (a* a)^{+}
ComplexMatrix generalized_inverse(const ComplexMatrix& a);
// (a* a)^{1/2}
ComplexMatrix modulus(const ComplexMatrix& a);

// P2 x = l x r, P0 x = (1-l) x (1-r), P1 the rest, l = ee*, r = e*e.
ComplexMatrix peirce_part(const ComplexMatrix& e, const ComplexMatrix& x, int k);
Subspace peirce_space(const ComplexMatrix& e, int k);

// {y : x y* = 0 and y* x = 0} = (1 - LP(x)) M (1 - RP(x)).
Subspace annihilator(const ComplexMatrix& x);
// a b* = 0 and b* a = 0, relative to max(1, |a||b|).
double cstar_orthogonality(const ComplexMatrix& a, const ComplexMatrix& b);

// l M r for projections l, r.
Subspace corner(const ComplexMatrix& l, const ComplexMatrix& r);

}  // namespace peircelab::oracle
