// Named extremal-ray data for Nef(M_{0,6}), contraction predicates for
// odd-quadric GW divisors, and exact decomposition of class vectors into
// nonnegative combinations of rays.

#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gwcycle/cycle_classes.hpp"

namespace gw {

struct RayTable {
    int n = 6;
    std::map<std::string, std::vector<long long>> rays;

    void validate() const; // nonnegative, integral, nonzero, right length
    static RayTable defaults(int n = 6);
    static RayTable load_json(const std::string& text);
    std::string to_json() const;
};

// Nonnegative rational coefficients expressing v exactly in the named rays;
// supports of size <= 7 are searched by exact elimination.  Empty optional
// means no such combination exists.
std::optional<std::map<std::string, Rational>> decompose_in_rays(const ClassVector& v,
                                                                 const RayTable& table);

enum class ContractRule { Contract1, Contract2 };

// F-curves provably contracted by an odd-quadric GW divisor: Contract1
// flags F_{I,A,B,C} with I = J u {i}, a_i = r and the J-codims summing to r;
// Contract2 (d <= 4) flags curves with d disjoint over-degree pairs spread
// over d distinct parts.
std::set<FCurve> contracted_fcurves_odd_quadric(const TargetSpace& X,
                                                const std::vector<int>& codims,
                                                int degree, ContractRule rule);

// Pairing of a class vector with every F-curve; nef iff all are >= 0.
bool is_nef(const ClassVector& v);

} // namespace gw
