// Target spaces (projective space, odd/even quadric hypersurface), their
// cohomology bases, the Poincare pairing and the diagonal decomposition.

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "gwcycle/rational.hpp"

namespace gw {

struct domain_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct internal_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class SpaceKind { ProjSpace, OddQuadric, EvenQuadric };

struct TargetSpace {
    SpaceKind kind;
    int r; // dimension

    static TargetSpace proj(int r) {
        if (r < 1) throw domain_error("P^r needs r >= 1");
        return {SpaceKind::ProjSpace, r};
    }
    static TargetSpace quadric(int r) {
        if (r % 2 == 1) {
            if (r < 1) throw domain_error("odd quadric needs r >= 1");
            return {SpaceKind::OddQuadric, r};
        }
        if (r < 4) throw domain_error("even quadric needs r >= 4");
        return {SpaceKind::EvenQuadric, r};
    }
    // "P3", "Q5", case-insensitive.
    static TargetSpace parse(const std::string& name);

    bool is_quadric() const { return kind != SpaceKind::ProjSpace; }
    bool is_even_quadric() const { return kind == SpaceKind::EvenQuadric; }
    int dim() const { return r; }
    int m() const { return kind == SpaceKind::OddQuadric ? (r - 1) / 2 : r / 2; }
    // c1(T_X) . line
    int fano_degree() const { return is_quadric() ? r : r + 1; }
    std::string name() const {
        return (is_quadric() ? "Q" : "P") + std::to_string(r);
    }
    bool operator==(const TargetSpace& o) const { return kind == o.kind && r == o.r; }
    bool operator<(const TargetSpace& o) const {
        return kind != o.kind ? kind < o.kind : r < o.r;
    }
};

enum class ClassTag : unsigned char { H = 0, Xi1 = 1, Xi2 = 2 };

// One element of the fixed cohomology basis of X.  For an even quadric the
// middle H-power is not a basis element (the two ruling classes xi1, xi2
// replace it); inputs naming it are rewritten as xi1 + xi2 upstream.
struct BasisClass {
    ClassTag tag = ClassTag::H;
    int i = 0; // codimension, meaningful for H only

    static BasisClass H(int i) { return {ClassTag::H, i}; }
    static BasisClass Xi1() { return {ClassTag::Xi1, 0}; }
    static BasisClass Xi2() { return {ClassTag::Xi2, 0}; }

    bool is_h() const { return tag == ClassTag::H; }
    bool is_xi() const { return tag != ClassTag::H; }

    int codim(const TargetSpace& X) const { return is_h() ? i : X.m(); }

    bool operator==(const BasisClass& o) const { return tag == o.tag && i == o.i; }
    bool operator!=(const BasisClass& o) const { return !(*this == o); }
    bool operator<(const BasisClass& o) const {
        return tag != o.tag ? tag < o.tag : i < o.i;
    }

    std::string str() const {
        switch (tag) {
            case ClassTag::H: return "H" + std::to_string(i);
            case ClassTag::Xi1: return "Xi1";
            default: return "Xi2";
        }
    }
};

inline bool valid_basis_class(const TargetSpace& X, const BasisClass& c) {
    if (c.is_xi()) return X.is_even_quadric();
    if (c.i < 0 || c.i > X.r) return false;
    if (X.is_even_quadric() && c.i == X.m()) return false;
    return true;
}

inline void require_basis_class(const TargetSpace& X, const BasisClass& c) {
    if (!valid_basis_class(X, c))
        throw domain_error("invalid basis class " + c.str() + " for " + X.name());
}

// The full basis, ordered by codimension (xi1 before xi2 in the middle).
std::vector<BasisClass> basis_classes(const TargetSpace& X);

// Coefficient of the point class in the classical cup product a.b; zero
// unless the codimensions are complementary.
Rational poincare_pairing(const TargetSpace& X, const BasisClass& a, const BasisClass& b);

struct DiagonalTerm {
    BasisClass left;
    BasisClass right;
    Rational coeff;
};

// Class of the diagonal in X x X as a sum of (left tensor right) terms;
// inverse of the pairing matrix.
std::vector<DiagonalTerm> diagonal(const TargetSpace& X);

} // namespace gw
