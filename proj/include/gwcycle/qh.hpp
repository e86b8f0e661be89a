// Elements of the small quantum cohomology ring QH*(X) = H*(X) (x) Z[q]
// with exact rational coefficients, the star product, and the class-name
// parser used by the CLI.

#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gwcycle/rational.hpp"
#include "gwcycle/space.hpp"

namespace gw {

struct QTerm {
    int qpow;
    BasisClass cls;
    Rational coeff;
};

// Finite rational combination of pairs (q^k, basis class).  Zero
// coefficients are never stored.
class QhElement {
  public:
    using Key = std::pair<int, BasisClass>;

    QhElement() = default;
    static QhElement term(const BasisClass& c, Rational coeff = 1, int qpow = 0) {
        QhElement e;
        e.add(qpow, c, coeff);
        return e;
    }

    void add(int qpow, const BasisClass& c, const Rational& coeff) {
        if (coeff.is_zero()) return;
        if (qpow < 0) throw internal_error("negative q power");
        auto key = Key{qpow, c};
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            terms_.emplace(key, coeff);
        } else {
            it->second += coeff;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Rational coeff(int qpow, const BasisClass& c) const {
        auto it = terms_.find(Key{qpow, c});
        return it == terms_.end() ? Rational(0) : it->second;
    }

    std::vector<QTerm> terms() const {
        std::vector<QTerm> out;
        out.reserve(terms_.size());
        for (const auto& [k, v] : terms_) out.push_back({k.first, k.second, v});
        return out;
    }

    QhElement operator+(const QhElement& o) const {
        QhElement out = *this;
        for (const auto& [k, v] : o.terms_) out.add(k.first, k.second, v);
        return out;
    }
    QhElement operator-(const QhElement& o) const {
        QhElement out = *this;
        for (const auto& [k, v] : o.terms_) out.add(k.first, k.second, -v);
        return out;
    }
    QhElement scaled(const Rational& c) const {
        QhElement out;
        for (const auto& [k, v] : terms_) out.add(k.first, k.second, v * c);
        return out;
    }
    QhElement q_shifted(int k) const {
        QhElement out;
        for (const auto& [key, v] : terms_) out.add(key.first + k, key.second, v);
        return out;
    }

    bool operator==(const QhElement& o) const { return terms_ == o.terms_; }
    bool operator!=(const QhElement& o) const { return !(*this == o); }

    // Degree of a homogeneous element, |q^k a| = k*fano + codim(a);
    // throws if the element mixes degrees.
    int degree(const TargetSpace& X) const;
    bool is_homogeneous(const TargetSpace& X) const;

    std::string str() const;

  private:
    std::map<Key, Rational> terms_;
};

// Small quantum product, bilinear extension of the per-space basis table.
// Tables are built once per (kind, r) and cached; reads are lock-free after
// construction.
QhElement star_product(const TargetSpace& X, const QhElement& a, const QhElement& b);
QhElement star_basis(const TargetSpace& X, const BasisClass& a, const BasisClass& b);

// H(1)^{star t}.
QhElement h_star_power(const TargetSpace& X, int t);

// Unit and point class ([pt] = H_r on P^r, (1/2) H_r on a quadric).
QhElement unit_class();
QhElement point_class(const TargetSpace& X);

// Class-name parser.  Tokens: H0..Hr, Xi1, Xi2, L0..Lm, optionally prefixed
// q^k*, case-insensitive; L_i is input sugar for (1/2) H(r-i) and H(m) on an
// even quadric is normalized to Xi1+Xi2 before storage.
QhElement parse_class(const TargetSpace& X, const std::string& token);
// Comma- or whitespace-separated list of classes.
std::vector<QhElement> parse_class_list(const TargetSpace& X, const std::string& text);

} // namespace gw
