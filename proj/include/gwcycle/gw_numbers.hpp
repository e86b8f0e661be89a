// Numerical Gromov-Witten invariants: fixed-domain n-point numbers from the
// small quantum product, 4-point divisor degrees via the hyperplane-splitting
// recursion, and big genus-0 invariants of projective space.

#pragma once

#include <vector>

#include "gwcycle/qh.hpp"

namespace gw {

// Names a class I^{c,X}_{d, insertions}.
struct GwSpec {
    TargetSpace space;
    int degree = 0;
    std::vector<QhElement> insertions;
    int codim = 0;
};

// Degree of the codimension-0 class: the coefficient of q^d [pt] in the star
// product of the insertions.  Zero when the cycle condition fails; q-extended
// insertions lower the effective degree.  Exact rational internally; exported
// values are integral (checked by npoint_codim0_int).
Rational npoint_codim0(const TargetSpace& X, int degree, const std::vector<QhElement>& insertions);
long long npoint_codim0_int(const TargetSpace& X, int degree, const std::vector<QhElement>& insertions);

// Degree in Pic(M_{0,4}) of a 4-point codimension-1 class.  Evaluates by
// (0) q-normalization and the vacuum/degree-0 vanishing, (1) the divisor
// shortcut when a codimension-1 insertion is present, (2) otherwise the
// three-term hyperplane-splitting rewrite, iterated on a designated slot.
long long fourpoint_divisor(const TargetSpace& X, int degree, const std::vector<QhElement>& insertions);

// Same value, but forces one splitting rewrite even when the divisor
// shortcut applies; used to cross-check the two evaluation paths.
long long fourpoint_divisor_force_split(const TargetSpace& X, int degree,
                                        const std::vector<QhElement>& insertions);

// Big genus-0 invariant <H_{a_1}, ..., H_{a_n}>_d of P^r, the degree of the
// top GW class on M_{0,n}(P^r, d).  First Reconstruction: fundamental-class
// and divisor axioms, classical triple products at d = 0, and the WDVV
// splitting relation with memoization on (d, sorted codims).
long long big_gw_projective(int r, int degree, const std::vector<int>& codims);

} // namespace gw
