// Boundary combinatorics of the moduli space of stable n-pointed rational
// curves: F-curves, boundary divisors, the nonadjacent basis with its dual
// curve systems for n = 5, 6, the Keel pairing, and the decomposition of a
// pulled-back F-curve into boundary strata.

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "gwcycle/space.hpp"

namespace gw {

// Subset of {1..n} as a bitmask (bit i-1 = marking i).
using MarkSet = std::uint32_t;

inline int markset_size(MarkSet s) { return __builtin_popcount(s); }
inline bool markset_has(MarkSet s, int mark) { return (s >> (mark - 1)) & 1u; }
inline MarkSet markset_full(int n) { return (1u << n) - 1u; }
std::string markset_str(MarkSet s);
std::vector<int> markset_elems(MarkSet s);

// Number of cyclic-adjacency components of T on the n-cycle.
int tcount(MarkSet t, int n);

// F-curve F_{N1,N2,N3,N4}: a 4-part partition of {1..n}; equality is as an
// unordered set of parts, so parts are kept sorted by least element.
struct FCurve {
    int n = 0;
    std::array<MarkSet, 4> parts{};

    FCurve() = default;
    FCurve(int n, std::array<MarkSet, 4> parts);

    bool operator==(const FCurve& o) const { return n == o.n && parts == o.parts; }
    bool operator<(const FCurve& o) const {
        return n != o.n ? n < o.n : parts < o.parts;
    }

    // Notation F{1|2|3|4,5,6}; parser and printer round-trip exactly.
    std::string str() const;
    static FCurve parse(const std::string& text, int n);
};

// Boundary divisor delta_T with 2 <= |T| <= n-2; delta_T = delta_{T^c}, with
// a canonical representative chosen internally.
struct BoundaryDivisor {
    int n = 0;
    MarkSet t = 0;

    BoundaryDivisor() = default;
    BoundaryDivisor(int n, MarkSet t);

    bool operator==(const BoundaryDivisor& o) const { return n == o.n && t == o.t; }
    bool operator<(const BoundaryDivisor& o) const { return n != o.n ? n < o.n : t < o.t; }

    // Notation d{1,3}.
    std::string str() const;
    static BoundaryDivisor parse(const std::string& text, int n);
};

// Keel intersection number F . delta_T: +1 when {T, T^c} arises from one of
// the three 2+2 groupings of the parts, -1 when T is a single part, else 0.
int fcurve_delta_pairing(const FCurve& f, const BoundaryDivisor& d);

// Signed formal combination of F-curves.
struct SignedFCurve {
    int sign = 1;
    FCurve curve;
};

struct DualCurveSystem {
    int n = 0;
    std::vector<BoundaryDivisor> basis;
    std::vector<std::vector<SignedFCurve>> duals; // aligned with basis
};

// The nonadjacent basis of Pic(M_{0,n}) and its dual curve system, n = 5, 6,
// in the fixed order used throughout (delta13, delta14, ...).
const DualCurveSystem& nonadjacent_basis(int n);

// All 4-part partitions of {1..n} (65 F-curves for n = 6).
std::vector<FCurve> all_fcurves(int n);

// Marked tree naming a boundary stratum: vertices carry marking subsets,
// edges form a tree, every vertex has valence >= 3.
struct StratumTree {
    int n = 0;
    std::vector<MarkSet> vertex_marks;
    std::vector<std::pair<int, int>> edges;

    int num_vertices() const { return static_cast<int>(vertex_marks.size()); }
    int valence(int v) const;
    int dimension() const; // sum of (valence - 3)
    void validate() const;
    std::string str() const;
};

// Components of the pullback of an F-curve on n markings along the map
// forgetting marking n+1: the F-curve's dual graph with legs degenerated to
// trivalent chains (least marking split off first), one output tree per
// vertex, carrying the forgotten marking there.
std::vector<StratumTree> pullback_fcurve(const FCurve& f, int forgotten);

// Same, but with an explicit split-off choice per size-3 part (keyed by the
// part's least element); used to check independence of the leg degeneration.
std::vector<StratumTree> pullback_fcurve_with_splits(const FCurve& f, int forgotten,
                                                     const std::vector<int>& split_choices);

} // namespace gw
