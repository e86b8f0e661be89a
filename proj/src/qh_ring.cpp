#include "gwcycle/qh.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace gw {

TargetSpace TargetSpace::parse(const std::string& name) {
    if (name.size() < 2) throw domain_error("bad space name '" + name + "'");
    char k = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
    int r = 0;
    try {
        std::size_t pos = 0;
        r = std::stoi(name.substr(1), &pos);
        if (pos + 1 != name.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
        throw domain_error("bad space name '" + name + "'");
    }
    if (k == 'P') return TargetSpace::proj(r);
    if (k == 'Q') return TargetSpace::quadric(r);
    throw domain_error("bad space name '" + name + "' (want P<r> or Q<r>)");
}

std::vector<BasisClass> basis_classes(const TargetSpace& X) {
    std::vector<BasisClass> out;
    for (int i = 0; i <= X.r; ++i) {
        if (X.is_even_quadric() && i == X.m()) {
            out.push_back(BasisClass::Xi1());
            out.push_back(BasisClass::Xi2());
        } else {
            out.push_back(BasisClass::H(i));
        }
    }
    return out;
}

Rational poincare_pairing(const TargetSpace& X, const BasisClass& a, const BasisClass& b) {
    require_basis_class(X, a);
    require_basis_class(X, b);
    if (a.codim(X) + b.codim(X) != X.r) return 0;
    if (a.is_h() && b.is_h()) return X.is_quadric() ? 2 : 1;
    if (a.is_xi() && b.is_xi()) {
        // Middle pairings depend on the parity of m: same ruling pairs to
        // itself when m is even, to the other ruling when m is odd.
        bool same = a.tag == b.tag;
        bool m_even = X.m() % 2 == 0;
        return (same == m_even) ? 1 : 0;
    }
    return 0; // H against xi: complementary codim forces both middle, handled above
}

std::vector<DiagonalTerm> diagonal(const TargetSpace& X) {
    std::vector<DiagonalTerm> out;
    Rational half(1, 2);
    for (int i = 0; i <= X.r; ++i) {
        if (X.is_even_quadric() && i == X.m()) {
            if (X.m() % 2 == 0) {
                out.push_back({BasisClass::Xi1(), BasisClass::Xi1(), 1});
                out.push_back({BasisClass::Xi2(), BasisClass::Xi2(), 1});
            } else {
                out.push_back({BasisClass::Xi1(), BasisClass::Xi2(), 1});
                out.push_back({BasisClass::Xi2(), BasisClass::Xi1(), 1});
            }
        } else {
            out.push_back({BasisClass::H(i), BasisClass::H(X.r - i),
                           X.is_quadric() ? half : Rational(1)});
        }
    }
    return out;
}

int QhElement::degree(const TargetSpace& X) const {
    if (terms_.empty()) throw internal_error("degree of zero element");
    int deg = -1;
    for (const auto& [k, v] : terms_) {
        int d = k.first * X.fano_degree() + k.second.codim(X);
        if (deg == -1) deg = d;
        else if (deg != d) throw domain_error("element is not homogeneous");
    }
    return deg;
}

bool QhElement::is_homogeneous(const TargetSpace& X) const {
    if (terms_.empty()) return true;
    int deg = -1;
    for (const auto& [k, v] : terms_) {
        int d = k.first * X.fano_degree() + k.second.codim(X);
        if (deg == -1) deg = d;
        else if (deg != d) return false;
    }
    return true;
}

std::string QhElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : terms_) {
        if (!first) os << " + ";
        first = false;
        if (v != Rational(1) || (k.first == 0 && false)) os << v.str() << "*";
        if (k.first > 0) os << "q^" << k.first << "*";
        os << k.second.str();
    }
    return os.str();
}

QhElement unit_class() { return QhElement::term(BasisClass::H(0)); }

QhElement point_class(const TargetSpace& X) {
    return QhElement::term(BasisClass::H(X.r),
                           X.is_quadric() ? Rational(1, 2) : Rational(1));
}

namespace {

// Precomputed per-space multiplication data: products of basis pairs and
// the powers of H(1).
struct RingTable {
    TargetSpace X;
    std::map<std::pair<BasisClass, BasisClass>, QhElement> products;
    std::vector<QhElement> h_powers; // h_powers[t] = H^{star t}, t = 0..r+1

    const QhElement& product(const BasisClass& a, const BasisClass& b) const {
        auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
        auto it = products.find(key);
        if (it == products.end())
            throw internal_error("missing product table entry " + a.str() + "*" + b.str());
        return it->second;
    }
};

// On an even quadric the middle H-power is not a basis element; expand it
// as xi1 + xi2 wherever a table formula produces it.
QhElement h_class(const TargetSpace& X, int i, const Rational& coeff, int qpow) {
    QhElement e;
    if (X.is_even_quadric() && i == X.m()) {
        e.add(qpow, BasisClass::Xi1(), coeff);
        e.add(qpow, BasisClass::Xi2(), coeff);
    } else {
        e.add(qpow, BasisClass::H(i), coeff);
    }
    return e;
}

QhElement quadric_hh(const TargetSpace& X, int i, int j) {
    // Lemma-style case table for H_i * H_j on a quadric, i, j >= 1.
    int r = X.r;
    if (i + j < r) return h_class(X, i + j, 1, 0);
    if (i == r && j == r) return h_class(X, 0, 4, 2);
    if (j == r) { // i < r
        QhElement e = h_class(X, i, 2, 1);
        return e;
    }
    if (i == r) return h_class(X, j, 2, 1);
    if (i + j == r) {
        QhElement e = h_class(X, r, 1, 0);
        e.add(1, BasisClass::H(0), 2);
        return e;
    }
    // i + j = r + l with i < r, j < r
    return h_class(X, i + j - r, 4, 1);
}

QhElement table_star(const RingTable& t, const QhElement& a, const QhElement& b) {
    QhElement out;
    for (const auto& ta : a.terms())
        for (const auto& tb : b.terms()) {
            const QhElement& p = t.product(ta.cls, tb.cls);
            for (const auto& tp : p.terms())
                out.add(ta.qpow + tb.qpow + tp.qpow, tp.cls, ta.coeff * tb.coeff * tp.coeff);
        }
    return out;
}

std::shared_ptr<const RingTable> build_table(const TargetSpace& X) {
    auto t = std::make_shared<RingTable>();
    t->X = X;
    auto cls = basis_classes(X);
    auto put = [&](const BasisClass& a, const BasisClass& b, const QhElement& v) {
        auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
        t->products[key] = v;
    };

    // Products of H-classes.
    for (const BasisClass& a : cls)
        for (const BasisClass& b : cls) {
            if (!a.is_h() || !b.is_h() || b < a) continue;
            if (a.i == 0) { put(a, b, QhElement::term(b)); continue; }
            if (X.kind == SpaceKind::ProjSpace) {
                int s = a.i + b.i;
                put(a, b, s <= X.r ? QhElement::term(BasisClass::H(s))
                                   : QhElement::term(BasisClass::H(s - X.r - 1), 1, 1));
            } else {
                put(a, b, quadric_hh(X, a.i, b.i));
            }
        }

    if (X.is_even_quadric()) {
        int m = X.m();
        BasisClass x1 = BasisClass::Xi1(), x2 = BasisClass::Xi2();
        // H0 and H1 against the rulings.
        put(BasisClass::H(0), x1, QhElement::term(x1));
        put(BasisClass::H(0), x2, QhElement::term(x2));
        QhElement half_hm1 = QhElement::term(BasisClass::H(m + 1), Rational(1, 2));
        put(BasisClass::H(1), x1, half_hm1);
        put(BasisClass::H(1), x2, half_hm1);
        // Middle products, by the parity of m.
        QhElement pt = point_class(X);
        QhElement q1 = QhElement::term(BasisClass::H(0), 1, 1);
        if (m % 2 == 1) {
            put(x1, x2, pt);
            put(x1, x1, q1);
            put(x2, x2, q1);
        } else {
            put(x1, x2, q1);
            put(x1, x1, pt);
            put(x2, x2, pt);
        }
        // Powers of H, available now that every H1 * basis entry exists.
        t->h_powers.assign(1, unit_class());
        QhElement h1 = QhElement::term(BasisClass::H(1));
        for (int k = 1; k <= X.r + 1; ++k)
            t->h_powers.push_back(table_star(*t, t->h_powers.back(), h1));
        // xi * H_j for j >= 2 by iterated H-multiplication:
        // xi * H^{star j} is a j-fold product, and H^{star j} differs from
        // H_j only by the 2q correction at j = r.
        for (const BasisClass& xi : {x1, x2}) {
            QhElement acc = QhElement::term(xi);
            for (int j = 1; j <= X.r; ++j) {
                acc = table_star(*t, acc, h1); // xi * H^{star j}
                if (j < 2 || j == m) continue;
                QhElement v = acc;
                if (j == X.r) {
                    // H^{star r} = H_r + 2q, so subtract 2q*xi.
                    v.add(1, xi, Rational(-2));
                }
                put(xi, BasisClass::H(j), v);
            }
        }
    } else {
        t->h_powers.assign(1, unit_class());
        QhElement h1 = QhElement::term(BasisClass::H(1));
        for (int k = 1; k <= X.r + 1; ++k)
            t->h_powers.push_back(table_star(*t, t->h_powers.back(), h1));
    }
    return t;
}

std::shared_ptr<const RingTable> ring_table(const TargetSpace& X) {
    static std::mutex mtx;
    static std::map<TargetSpace, std::shared_ptr<const RingTable>> cache;
    std::lock_guard<std::mutex> lk(mtx);
    auto it = cache.find(X);
    if (it != cache.end()) return it->second;
    auto t = build_table(X);
    cache.emplace(X, t);
    return t;
}

} // namespace

QhElement star_basis(const TargetSpace& X, const BasisClass& a, const BasisClass& b) {
    require_basis_class(X, a);
    require_basis_class(X, b);
    return ring_table(X)->product(a, b);
}

QhElement star_product(const TargetSpace& X, const QhElement& a, const QhElement& b) {
    for (const auto& t : a.terms()) require_basis_class(X, t.cls);
    for (const auto& t : b.terms()) require_basis_class(X, t.cls);
    return table_star(*ring_table(X), a, b);
}

QhElement h_star_power(const TargetSpace& X, int t) {
    if (t < 0) throw domain_error("h_star_power needs t >= 0");
    auto tab = ring_table(X);
    if (t < static_cast<int>(tab->h_powers.size())) return tab->h_powers[t];
    QhElement acc = tab->h_powers.back();
    QhElement h1 = QhElement::term(BasisClass::H(1));
    for (int k = static_cast<int>(tab->h_powers.size()) - 1; k < t; ++k)
        acc = star_product(X, acc, h1);
    return acc;
}

namespace {

std::string lower(std::string s) {
    for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

int parse_index(const std::string& tok, const std::string& text, std::size_t pos) {
    try {
        std::size_t used = 0;
        int v = std::stoi(text.substr(pos), &used);
        if (pos + used != text.size()) throw std::invalid_argument("trailing");
        return v;
    } catch (const std::exception&) {
        throw domain_error("cannot parse class token '" + tok + "'");
    }
}

} // namespace

QhElement parse_class(const TargetSpace& X, const std::string& token) {
    std::string s = lower(token);
    int qpow = 0;
    if (s.rfind("q^", 0) == 0) {
        auto star = s.find('*');
        if (star == std::string::npos)
            throw domain_error("q-prefixed token needs '*': '" + token + "'");
        try {
            std::size_t used = 0;
            qpow = std::stoi(s.substr(2, star - 2), &used);
            if (2 + used != star) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
            throw domain_error("cannot parse q power in '" + token + "'");
        }
        if (qpow < 0) throw domain_error("negative q power in '" + token + "'");
        s = s.substr(star + 1);
    }
    if (s == "xi1" || s == "xi2") {
        if (!X.is_even_quadric())
            throw domain_error("class " + s + " only exists on even quadrics");
        return QhElement::term(s == "xi1" ? BasisClass::Xi1() : BasisClass::Xi2(), 1, qpow);
    }
    if (!s.empty() && s[0] == 'h') {
        int i = parse_index(token, s, 1);
        if (i < 0 || i > X.r)
            throw domain_error("class H" + std::to_string(i) + " out of range for " + X.name());
        if (X.is_even_quadric() && i == X.m()) {
            QhElement e;
            e.add(qpow, BasisClass::Xi1(), 1);
            e.add(qpow, BasisClass::Xi2(), 1);
            return e;
        }
        return QhElement::term(BasisClass::H(i), 1, qpow);
    }
    if (!s.empty() && s[0] == 'l') {
        if (!X.is_quadric())
            throw domain_error("L-classes are quadric input sugar; got space " + X.name());
        int i = parse_index(token, s, 1);
        int max_i = X.kind == SpaceKind::OddQuadric ? X.m() : X.m() - 1;
        if (i < 0 || i > max_i)
            throw domain_error("class L" + std::to_string(i) + " out of range for " + X.name());
        return QhElement::term(BasisClass::H(X.r - i), Rational(1, 2), qpow);
    }
    throw domain_error("cannot parse class token '" + token + "'");
}

std::vector<QhElement> parse_class_list(const TargetSpace& X, const std::string& text) {
    std::vector<QhElement> out;
    std::string tok;
    auto flush = [&]() {
        if (!tok.empty()) {
            out.push_back(parse_class(X, tok));
            tok.clear();
        }
    };
    for (char c : text) {
        if (c == ',' || std::isspace(static_cast<unsigned char>(c))) flush();
        else tok.push_back(c);
    }
    flush();
    return out;
}

} // namespace gw
