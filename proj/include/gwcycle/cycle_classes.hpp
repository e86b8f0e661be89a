// Intersections of GW classes with boundary curves and strata, divisor
// classes in the nonadjacent basis, and pushforwards of codimension-2
// classes along point-forgetting maps.

#pragma once

#include <string>
#include <vector>

#include "gwcycle/gw_numbers.hpp"
#include "gwcycle/moduli.hpp"

namespace gw {

// Coefficients of a divisor class in the nonadjacent basis of Pic(M_{0,n}).
struct ClassVector {
    int n = 0;
    std::vector<Rational> coeffs;

    const DualCurveSystem& basis() const { return nonadjacent_basis(n); }
    std::vector<long long> as_integers() const;

    bool operator==(const ClassVector& o) const { return n == o.n && coeffs == o.coeffs; }

    std::string to_json() const;
    std::string to_csv() const;
    static ClassVector from_json(const std::string& text);
};

// Degree of a codimension-1 GW class against an F-curve: the factorization
// sum over diagonal labels at the attaching nodes and over degree splits,
// legs contributing codimension-0 numbers and the spine a 4-point divisor.
long long fcurve_degree(const GwSpec& spec, const FCurve& f);

// Pairing of a class vector with an F-curve through the Keel rule.
Rational pair_class_fcurve(const ClassVector& c, const FCurve& f);

// Class of a codimension-1 GW class in the nonadjacent basis, n in {5, 6}.
ClassVector divisor_class(const GwSpec& spec, int threads = 1);

// Degree of a codimension-c class against a boundary stratum of dimension c:
// the factorization sum with each vertex contributing its top GW class
// (3-point numbers, 4-point divisors, or big invariants of P^r).
Rational stratum_degree(const GwSpec& spec, const StratumTree& tree);

// Pushforward of a codimension-2 class on M_{0,n} to a divisor class on
// M_{0,n-1} via the projection formula against pulled-back dual curves.
ClassVector pushforward_divisor(const GwSpec& spec, int forget, int threads = 1);

} // namespace gw
